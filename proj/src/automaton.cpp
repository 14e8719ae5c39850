#include "kostant/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "kostant/game.hpp"

namespace kostant {

std::size_t Dfa::next(std::size_t state, int letter) const
{
    if (letter < 1 || letter > alphabet) throw IndexOutOfRange("letter " + std::to_string(letter) + " outside the alphabet");
    return delta[state * alphabet + (letter - 1)];
}

Dfa build_dfa(const RootSystem& rs, const std::vector<int>& J, std::size_t max_states)
{
    std::vector<int> Jn = normalize_vertex_set(rs.rank(), J);
    WeylGroup g(rs, max_states);
    const int n = rs.rank();
    Dfa a;
    a.alphabet = n;
    a.initial = 0;
    a.trap = g.size();
    for (std::size_t k = 0; k < g.size(); ++k) {
        a.labels.push_back(word_string(g.word(k)));
        a.accepting.push_back(is_min_rep(rs, g.element(k), Jn) ? 1 : 0);
        for (int i = 1; i <= n; ++i) {
            std::size_t t = g.right_multiply(k, i);
            a.delta.push_back(g.length(t) > g.length(k) ? t : a.trap);
        }
    }
    a.labels.push_back("trap");
    a.accepting.push_back(0);
    for (int i = 1; i <= n; ++i) a.delta.push_back(a.trap);
    return a;
}

Dfa build_configuration_dfa(const DynkinDiagram& d, const std::vector<int>& J, std::size_t max_states)
{
    std::vector<int> I = complement(d.rank(), normalize_vertex_set(d.rank(), J));
    GameBoard b = GameBoard::modified(d, I);
    Limits lim;
    lim.max_states = max_states;
    ConfigurationGraph cg = explore(b, b.initial(), lim);
    if (cg.truncated) throw LimitExceeded("configuration automaton exceeds " + std::to_string(max_states) + " states");
    const int n = d.rank();
    Dfa a;
    a.alphabet = n;
    a.initial = 0;
    a.trap = cg.nodes.size();
    a.delta.assign((cg.nodes.size() + 1) * n, a.trap);
    for (const auto& c : cg.nodes) {
        a.labels.push_back(c.str());
        a.accepting.push_back(1);
    }
    for (const auto& e : cg.edges) a.delta[e.from * n + (e.vertex - 1)] = e.to;
    a.labels.push_back("trap");
    a.accepting.push_back(0);
    return a;
}

bool accepts(const Dfa& a, const Word& word)
{
    std::size_t q = a.initial;
    for (int x : word) q = a.next(q, x);
    return a.accepting[q] != 0;
}

std::vector<Word> enumerate_language(const Dfa& a, std::size_t max_len)
{
    std::vector<Word> out;
    std::vector<std::pair<std::size_t, Word>> layer{{a.initial, {}}};
    for (std::size_t len = 0; !layer.empty(); ++len) {
        for (const auto& [q, w] : layer)
            if (a.accepting[q]) out.push_back(w);
        if (len == max_len) break;
        std::vector<std::pair<std::size_t, Word>> next;
        for (const auto& [q, w] : layer)
            for (int i = 1; i <= a.alphabet; ++i) {
                std::size_t t = a.next(q, i);
                if (t == a.trap) continue;
                Word v = w;
                v.push_back(i);
                next.emplace_back(t, std::move(v));
            }
        layer = std::move(next);
    }
    return out;
}

Dfa minimize(const Dfa& a)
{
    const std::size_t n = a.num_states();
    std::vector<std::size_t> block(n);
    for (std::size_t q = 0; q < n; ++q) block[q] = a.accepting[q] ? 1 : 0;
    std::size_t count = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> sig;
        std::vector<std::size_t> nb(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<std::size_t> key{block[q]};
            for (int i = 1; i <= a.alphabet; ++i) key.push_back(block[a.next(q, i)]);
            nb[q] = sig.emplace(std::move(key), sig.size()).first->second;
        }
        if (sig.size() == count) break;
        count = sig.size();
        block = std::move(nb);
    }
    // Renumber blocks in order of first appearance so the initial state stays 0.
    std::vector<std::size_t> order(count, n);
    std::vector<std::size_t> rep;
    for (std::size_t q = 0; q < n; ++q)
        if (order[block[q]] == n) {
            order[block[q]] = rep.size();
            rep.push_back(q);
        }
    Dfa m;
    m.alphabet = a.alphabet;
    m.initial = order[block[a.initial]];
    m.trap = order[block[a.trap]];
    for (std::size_t b = 0; b < rep.size(); ++b) {
        std::size_t q = rep[b];
        m.labels.push_back(q == a.trap ? "trap" : a.labels[q]);
        m.accepting.push_back(a.accepting[q]);
        for (int i = 1; i <= a.alphabet; ++i) m.delta.push_back(order[block[a.next(q, i)]]);
    }
    return m;
}

std::string export_dot(const Dfa& a, const std::string& name)
{
    auto id = [&](std::size_t q) { return q == a.trap ? std::string("trap") : "q" + std::to_string(q); };
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  rankdir=LR;\n";
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        os << "  " << id(q) << " [label=\"" << a.labels[q] << "\", shape="
           << (a.accepting[q] ? "doublecircle" : "circle");
        if (q == a.trap) os << ", style=dashed";
        if (q == a.initial) os << ", penwidth=2";
        os << "];\n";
    }
    for (std::size_t q = 0; q < a.num_states(); ++q)
        for (int i = 1; i <= a.alphabet; ++i) {
            std::size_t t = a.next(q, i);
            os << "  " << id(q) << " -> " << id(t) << " [label=\"s" << i << "\"";
            if (t == a.trap) os << ", style=dashed";
            os << "];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace kostant
