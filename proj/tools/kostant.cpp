#include <iostream>

#include "kostant/cli.hpp"

int main(int argc, char** argv)
{
    return kostant::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
