#include "kostant/dot.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace kostant {

namespace {

struct Token {
    enum Kind { Id, Punct, Arrow, End } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) { throw ParseError("DOT: " + why + " at offset " + std::to_string(i)); };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
            while (i < s.size() && s[i] != '\n') ++i;
        } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
            std::size_t e = s.find("*/", i + 2);
            if (e == std::string::npos) fail("unterminated comment");
            i = e + 2;
        } else if (c == '"') {
            std::string t;
            ++i;
            while (i < s.size() && s[i] != '"') {
                if (s[i] == '\\' && i + 1 < s.size()) ++i;
                t += s[i++];
            }
            if (i >= s.size()) fail("unterminated string");
            ++i;
            out.push_back({Token::Id, t});
        } else if (c == '-' && i + 1 < s.size() && (s[i + 1] == '-' || s[i + 1] == '>')) {
            out.push_back({Token::Arrow, s.substr(i, 2)});
            i += 2;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '.' ||
                                    (s[j] == '-' && j == i)))
                ++j;
            out.push_back({Token::Id, s.substr(i, j - i)});
            i = j;
        } else if (std::string("{}[];,=:").find(c) != std::string::npos) {
            out.push_back({Token::Punct, std::string(1, c)});
            ++i;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::End, ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> t) : t_(std::move(t)) {}

    DotGraph parse()
    {
        DotGraph g;
        if (peek_id("strict")) ++p_;
        if (peek_id("digraph")) g.directed = true;
        else if (!peek_id("graph")) fail("expected 'graph' or 'digraph'");
        ++p_;
        if (t_[p_].kind == Token::Id) g.name = t_[p_++].text;
        expect("{");
        while (!peek_punct("}")) {
            if (t_[p_].kind == Token::End) fail("missing '}'");
            statement(g);
        }
        ++p_;
        if (t_[p_].kind != Token::End) fail("trailing input after '}'");
        return g;
    }

private:
    bool peek_id(const char* s) const { return t_[p_].kind == Token::Id && t_[p_].text == s; }
    bool peek_punct(const char* s) const { return t_[p_].kind == Token::Punct && t_[p_].text == s; }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("DOT: " + why + " near token '" + t_[p_].text + "'");
    }

    void expect(const char* s)
    {
        if (!peek_punct(s)) fail(std::string("expected '") + s + "'");
        ++p_;
    }

    std::string id()
    {
        if (t_[p_].kind != Token::Id) fail("expected an identifier");
        return t_[p_++].text;
    }

    std::map<std::string, std::string> attr_list()
    {
        std::map<std::string, std::string> attrs;
        while (peek_punct("[")) {
            ++p_;
            while (!peek_punct("]")) {
                std::string k = id();
                expect("=");
                attrs[k] = id();
                if (peek_punct(",") || peek_punct(";")) ++p_;
            }
            ++p_;
        }
        return attrs;
    }

    void add_node(DotGraph& g, const std::string& n)
    {
        if (std::find(g.nodes.begin(), g.nodes.end(), n) == g.nodes.end()) g.nodes.push_back(n);
    }

    void statement(DotGraph& g)
    {
        if (peek_id("graph") || peek_id("node") || peek_id("edge")) {
            ++p_;
            attr_list();
        } else {
            std::string first = id();
            if (peek_punct("=")) {
                ++p_;
                id();
            } else if (t_[p_].kind == Token::Arrow) {
                std::vector<std::string> chain{first};
                while (t_[p_].kind == Token::Arrow) {
                    if ((t_[p_].text == "->") != g.directed) fail("edge operator does not match graph kind");
                    ++p_;
                    chain.push_back(id());
                }
                auto attrs = attr_list();
                for (const auto& n : chain) add_node(g, n);
                for (std::size_t k = 0; k + 1 < chain.size(); ++k) g.edges.push_back({chain[k], chain[k + 1], attrs});
            } else {
                add_node(g, first);
                auto attrs = attr_list();
                g.node_attrs[first].insert(attrs.begin(), attrs.end());
            }
        }
        if (peek_punct(";")) ++p_;
    }

    std::vector<Token> t_;
    std::size_t p_ = 0;
};

}  // namespace

DotGraph parse_dot(const std::string& text)
{
    return Parser(tokenize(text)).parse();
}

SimpleGraph graph_from_dot(const std::string& text)
{
    DotGraph d = parse_dot(text);
    if (d.directed) throw ParseError("DOT: expected an undirected graph");
    if (d.nodes.empty()) throw ParseError("DOT: graph has no vertices");
    int n = static_cast<int>(d.nodes.size());
    std::map<std::string, int> label;
    bool numeric = true;
    std::set<int> values;
    for (const auto& s : d.nodes) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            numeric = false;
            break;
        }
        values.insert(std::stoi(s));
    }
    numeric = numeric && static_cast<int>(values.size()) == n && *values.begin() == 1 && *values.rbegin() == n;
    for (int k = 0; k < n; ++k) label[d.nodes[k]] = numeric ? std::stoi(d.nodes[k]) : k + 1;
    std::set<std::pair<int, int>> edges;
    for (const auto& e : d.edges) {
        int u = label.at(e.from), v = label.at(e.to);
        if (u == v) throw ParseError("DOT: self-loop at " + e.from);
        edges.emplace(std::min(u, v), std::max(u, v));
    }
    return SimpleGraph(n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

std::string graph_to_dot(const SimpleGraph& g, const std::string& name)
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 1; v <= g.num_vertices(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace kostant
