#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kostant/cli.hpp"

using kostant::run_cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

std::string golden_dir()
{
    return KOSTANT_GOLDEN_DIR;
}

Outcome cli(std::vector<std::string> args)
{
    for (auto& a : args) {
        auto at = a.find("@GOLDEN@");
        if (at != std::string::npos) a.replace(at, 8, golden_dir());
    }
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GoldenCase {
    const char* file;
    std::vector<std::string> args;
    int code;
};

const std::vector<GoldenCase>& golden_cases()
{
    static const std::vector<GoldenCase> cases{
        {"play_b2_full.json", {"play", "--type", "B", "--rank", "2", "--sources", "1,2", "--strategy", "first-sad"}, 0},
        {"play_b2_single.txt", {"play", "--type", "B", "--rank", "2", "--sources", "1", "--emit", "ascii"}, 0},
        {"play_a2_full.json", {"play", "--type", "A", "--rank", "2", "--sources", "1,2"}, 0},
        {"play_a4_classic.txt", {"play", "--type", "A", "--rank", "4", "--start", "1", "--emit", "ascii"}, 0},
        {"play_d4_classic.txt", {"play", "--type", "D", "--rank", "4", "--start", "1", "--emit", "ascii"}, 0},
        {"play_a4_random.json", {"play", "--type", "A", "--rank", "4", "--sources", "2", "--strategy", "random", "--seed", "42"}, 0},
        {"explore_a4_classic.dot", {"explore", "--type", "A", "--rank", "4", "--start", "1", "--emit", "dot"}, 0},
        {"explore_f4_classic.json", {"explore", "--type", "F", "--rank", "4", "--start", "1"}, 0},
        {"dfa_a2_J1.dot", {"dfa", "--type", "A", "--rank", "2", "--J", "1", "--emit", "dot"}, 0},
        {"dfa_b2_J2_min.json", {"--pretty", "dfa", "--type", "B", "--rank", "2", "--J", "2", "--minimize", "--emit", "json"}, 0},
        {"rootsum_a4.json", {"rootsum", "--type", "A", "--rank", "4"}, 0},
        {"rootsum_b2.json", {"--pretty", "rootsum", "--type", "B", "--rank", "2"}, 0},
        {"classify_e8_affine.json", {"classify", "--graph", "@GOLDEN@/inputs/star_1_2_5.json", "--simulate"}, 0},
        {"classify_triangle.json", {"classify", "--graph", "@GOLDEN@/inputs/triangle.dot"}, 0},
        {"classify_e8.json", {"classify", "--type", "E", "--rank", "8"}, 0},
        {"tableaux_4_2.txt", {"tableaux", "--n", "4", "--k", "2"}, 0},
        {"tableaux_5_2.json", {"tableaux", "--n", "5", "--k", "2", "--emit", "json"}, 0},
        {"tableaux_5_2_play.txt", {"tableaux", "--n", "5", "--k", "2", "--moves", "2,1,3,2,4,3"}, 0},
    };
    return cases;
}

}  // namespace

TEST_CASE("golden outputs")
{
    bool update = std::getenv("KOSTANT_UPDATE_GOLDEN") != nullptr;
    for (const auto& c : golden_cases()) {
        CAPTURE(c.file);
        Outcome o = cli(c.args);
        CHECK(o.code == c.code);
        std::string path = golden_dir() + "/" + c.file;
        if (update) {
            std::ofstream(path) << o.out;
            continue;
        }
        CHECK(o.out == slurp(path));
    }
}

TEST_CASE("outputs are deterministic")
{
    for (const auto& c : golden_cases()) CHECK(cli(c.args).out == cli(c.args).out);
}

TEST_CASE("paper values through the CLI")
{
    auto b2 = nlohmann::json::parse(cli({"play", "--type", "B", "--rank", "2", "--sources", "1,2"}).out);
    CHECK(b2["final"] == nlohmann::json::array({4, 3}));
    CHECK(b2["schema"] == "kostant/v1");
    CHECK(cli({"rootsum", "--type", "A", "--rank", "4"}).out.find("\"sum\":[4,6,6,4]") != std::string::npos);
    std::string dot = cli({"dfa", "--type", "A", "--rank", "2", "--J", "1", "--emit", "dot"}).out;
    CHECK(dot.find("doublecircle") != std::string::npos);
    std::string tabs = cli({"tableaux", "--n", "4", "--k", "2"}).out;
    CHECK(tabs == "1 2\n3 4\n\n1 3\n2 4\n");
}

TEST_CASE("exit codes")
{
    CHECK(cli({"play", "--type", "A", "--rank", "1"}).code == 2);
    CHECK(cli({"play", "--type", "A", "--rank", "2", "--sources", "1", "--strategy", "random"}).code == 2);
    CHECK(cli({"play", "--type", "A", "--rank", "2", "--sources", "1", "--start", "1"}).code == 2);
    CHECK(cli({"play", "--type", "A"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"play", "--type", "D", "--rank", "2", "--sources", "1"}).code == 1);
    CHECK(cli({"play", "--type", "A", "--rank", "3", "--sources", "1", "--moves", "2"}).code == 1);
    auto tri = cli({"play", "--diagram", "@GOLDEN@/inputs/triangle_board.json", "--start", "1"});
    CHECK(tri.code == 1);
    CHECK(nlohmann::json::parse(tri.out)["diverged"] == "chip-bound");
    CHECK(cli({"classify", "--graph", "@GOLDEN@/inputs/missing.json"}).code == 2);
    CHECK(cli({"classify", "--type", "B", "--rank", "3"}).code == 1);
    CHECK(cli({"tableaux", "--n", "4", "--k", "2", "--moves", "1"}).code == 1);
}
