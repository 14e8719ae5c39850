#include "kostant/cli.hpp"

#include <csignal>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "kostant/dot.hpp"
#include "kostant/json_io.hpp"
#include "kostant/service.hpp"

namespace kostant {

namespace {

struct DiagramOpts {
    std::string type;
    int rank = 0;
    std::string file;

    void add(CLI::App* app)
    {
        auto* t = app->add_option("--type", type, "Dynkin family A-G");
        auto* r = app->add_option("--rank", rank, "rank");
        auto* f = app->add_option("--diagram", file, "diagram JSON file");
        t->needs(r);
        r->needs(t);
        f->excludes(t)->excludes(r);
    }

    DynkinDiagram build() const
    {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw CLI::ValidationError("--diagram", "cannot read " + file);
            return diagram_from_json(json::parse(in));
        }
        if (type.empty()) throw CLI::RequiredError("--type/--rank or --diagram");
        return build_diagram(type, rank);
    }
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--graph", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json with_schema(json j)
{
    j["schema"] = kSchema;
    return j;
}

std::string dump(const json& j, bool pretty)
{
    return (pretty ? j.dump(2) : j.dump()) + "\n";
}

std::string graph_dot(const ConfigurationGraph& g)
{
    std::ostringstream os;
    os << "digraph configurations {\n";
    std::vector<char> sink(g.nodes.size(), 0);
    for (auto s : g.sinks) sink[s] = 1;
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
        os << "  n" << k << " [label=\"" << g.nodes[k].str() << "\", shape=" << (sink[k] ? "doublecircle" : "circle")
           << "];\n";
    for (const auto& e : g.edges) os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.vertex << "\"];\n";
    os << "}\n";
    return os.str();
}

httplib::Server* g_server = nullptr;

void stop_server(int)
{
    if (g_server) g_server->stop();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Kostant game and Weyl group workbench", "kostant"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    // play / explore
    DiagramOpts play_d, explore_d, dfa_d, rootsum_d, classify_d;
    std::vector<int> sources, moves, J, tab_moves;
    int start = 0, explore_start = 0;
    std::vector<int> explore_sources;
    std::string strategy = "first-sad", emit_play = "json", emit_explore = "json", emit_dfa = "dot",
                dfa_states = "element", graph_file, emit_tab = "ascii", host = "127.0.0.1", snapshot, cors = "*";
    std::uint64_t seed = 0;
    Int max_chips = 0;
    std::size_t max_steps = 1'000'000, max_states = 1'000'000;
    bool minimize_dfa = false, simulate = false;
    int n = 0, k = 0, port = 8080;

    auto* play = app.add_subcommand("play", "run one game");
    play_d.add(play);
    auto* ps = play->add_option("--sources", sources, "modified game sources, e.g. 1,2")->delimiter(',');
    auto* pst = play->add_option("--start", start, "classic game start vertex");
    ps->excludes(pst);
    play->add_option("--strategy", strategy)->check(CLI::IsMember({"first-sad", "random"}));
    auto* pseed = play->add_option("--seed", seed, "seed for the random strategy");
    play->add_option("--moves", moves, "replay these moves instead of a strategy")->delimiter(',');
    play->add_option("--max-chips", max_chips);
    play->add_option("--max-steps", max_steps);
    play->add_option("--emit", emit_play)->check(CLI::IsMember({"json", "ascii"}));

    auto* explore_cmd = app.add_subcommand("explore", "configuration graph of a board");
    explore_d.add(explore_cmd);
    auto* es = explore_cmd->add_option("--sources", explore_sources)->delimiter(',');
    explore_cmd->add_option("--start", explore_start)->excludes(es);
    explore_cmd->add_option("--max-states", max_states);
    explore_cmd->add_option("--max-chips", max_chips);
    explore_cmd->add_option("--emit", emit_explore)->check(CLI::IsMember({"json", "dot"}));

    auto* dfa = app.add_subcommand("dfa", "automaton for the language of W^J");
    dfa_d.add(dfa);
    dfa->add_option("--J", J, "parabolic subset, e.g. 1,3")->delimiter(',');
    dfa->add_option("--states", dfa_states)->check(CLI::IsMember({"element", "configuration"}));
    dfa->add_flag("--minimize", minimize_dfa);
    dfa->add_option("--emit", emit_dfa)->check(CLI::IsMember({"dot", "json"}));

    auto* rootsum = app.add_subcommand("rootsum", "sum of positive roots from single-source games");
    rootsum_d.add(rootsum);

    auto* classify = app.add_subcommand("classify", "Kostant finiteness of a simple graph");
    classify_d.add(classify);
    classify->add_option("--graph", graph_file, "graph as JSON {vertices, edges} or DOT");
    classify->add_flag("--simulate", simulate, "also run the simulation route");

    auto* tableaux = app.add_subcommand("tableaux", "standard tableaux from games on A_{n-1}");
    tableaux->add_option("--n", n)->required();
    tableaux->add_option("--k", k)->required();
    tableaux->add_option("--moves", tab_moves, "a single play")->delimiter(',');
    tableaux->add_option("--emit", emit_tab)->check(CLI::IsMember({"ascii", "json"}));

    auto* serve = app.add_subcommand("serve", "HTTP session service");
    serve->add_option("--port", port);
    serve->add_option("--host", host);
    serve->add_option("--snapshot", snapshot, "load sessions from and save them to this file");
    serve->add_option("--cors-origin", cors);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);

        if (play->parsed()) {
            DynkinDiagram d = play_d.build();
            if (ps->count() == 0 && pst->count() == 0)
                throw CLI::ValidationError("play", "give --sources for a modified game or --start for a classic one");
            if (strategy == "random" && pseed->count() == 0)
                throw CLI::ValidationError("--seed", "the random strategy needs a seed");
            GameBoard b = ps->count() ? GameBoard::modified(d, sources) : GameBoard::classic(d);
            Configuration c0 = b.initial(b.mode() == Mode::Classic ? start : 0);
            RunResult r;
            if (!moves.empty()) {
                r.trace = replay(b, c0, moves);
            } else {
                Limits lim;
                lim.max_chips = max_chips;
                lim.max_steps = max_steps;
                r = run(b, c0, strategy == "random" ? Strategy::random(seed) : Strategy::first_sad(), lim);
            }
            if (emit_play == "ascii") {
                for (std::size_t i = 0; i < r.trace.states.size(); ++i) {
                    if (i) out << "  fire " << r.trace.moves[i - 1] << "\n";
                    out << r.trace.states[i].str() << "\n";
                }
                if (!r.terminated()) out << "diverged\n";
            } else {
                json j = to_json(r);
                j["board"] = to_json(b);
                j["terminal"] = is_terminal(b, r.trace.final());
                if (b.mode() == Mode::Modified) {
                    Word w = word_of_moves(r.trace.moves);
                    j["word"] = {{"letters", w}, {"string", word_string(w)}};
                }
                out << dump(with_schema(j), pretty);
            }
            if (!r.terminated()) {
                err << "kostant: run diverged before terminating\n";
                return 1;
            }
            return 0;
        }

        if (explore_cmd->parsed()) {
            DynkinDiagram d = explore_d.build();
            bool modified = es->count() > 0;
            if (!modified && explore_start == 0)
                throw CLI::ValidationError("explore", "give --sources for a modified game or --start for a classic one");
            GameBoard b = modified ? GameBoard::modified(d, explore_sources) : GameBoard::classic(d);
            Limits lim;
            lim.max_states = max_states;
            lim.max_chips = max_chips;
            ConfigurationGraph g = explore(b, b.initial(modified ? 0 : explore_start), lim);
            if (emit_explore == "dot") {
                out << graph_dot(g);
            } else {
                json j = to_json(g);
                j["board"] = to_json(b);
                out << dump(with_schema(j), pretty);
            }
            return g.truncated ? 1 : 0;
        }

        if (dfa->parsed()) {
            DynkinDiagram d = dfa_d.build();
            Dfa a = dfa_states == "element" ? build_dfa(RootSystem(d), J) : build_configuration_dfa(d, J);
            if (minimize_dfa) a = minimize(a);
            if (emit_dfa == "dot") {
                out << export_dot(a);
            } else {
                json j = to_json(a);
                j["diagram"] = to_json(d);
                j["J"] = normalize_vertex_set(d.rank(), J);
                j["reads"] = dfa_states == "element" ? "word" : "moves";
                out << dump(with_schema(j), pretty);
            }
            return 0;
        }

        if (rootsum->parsed()) {
            DynkinDiagram d = rootsum_d.build();
            RootSystem rs(d);
            HeightProfile p = height_profile(d);
            json per_vertex = json::object();
            for (int j = 1; j <= d.rank(); ++j) per_vertex[std::to_string(j)] = to_json(p.finals[j - 1]);
            RootVector game = positive_root_sum(d), direct = rs.sum_of_positive_roots();
            json j = {{"diagram", to_json(d)}, {"per_vertex", per_vertex}, {"heights", p.heights},
                      {"sum", to_json(game)},  {"direct", to_json(direct)}, {"match", game == direct}};
            out << dump(with_schema(j), pretty);
            return game == direct ? 0 : 1;
        }

        if (classify->parsed()) {
            SimpleGraph g;
            if (!graph_file.empty()) {
                std::string text = read_file(graph_file);
                auto first = text.find_first_not_of(" \t\r\n");
                g = (first != std::string::npos && text[first] == '{') ? graph_from_json(json::parse(text))
                                                                       : graph_from_dot(text);
            } else {
                g = graph_of(classify_d.build());
            }
            FinitenessVerdict v = is_kostant_finite(g);
            json j = to_json(v);
            j["graph"] = to_json(g);
            if (simulate) {
                FinitenessVerdict s = simulate_finiteness(g);
                j["simulation"] = to_json(s);
                j["routes_agree"] = (v.kind == FinitenessVerdict::Kind::Finite) == (s.kind == FinitenessVerdict::Kind::Finite);
            }
            out << dump(with_schema(j), pretty);
            return 0;
        }

        if (tableaux->parsed()) {
            std::vector<Tableau> ts;
            if (!tab_moves.empty()) ts.push_back(play_to_tableau(tab_moves, k, n));
            else ts = enumerate_tableaux(n, k);
            if (emit_tab == "json") {
                json arr = json::array();
                for (const auto& t : ts) arr.push_back(to_json(t));
                out << dump(with_schema({{"n", n}, {"k", k}, {"count", ts.size()}, {"tableaux", arr}}), pretty);
            } else {
                for (std::size_t i = 0; i < ts.size(); ++i) out << (i ? "\n" : "") << ts[i].ascii();
            }
            return 0;
        }

        if (serve->parsed()) {
            SessionService service;
            if (!snapshot.empty()) {
                std::ifstream in(snapshot);
                if (in) service.restore(json::parse(in));
            }
            httplib::Server server;
            install_routes(server, service, cors);
            g_server = &server;
            std::signal(SIGINT, stop_server);
            std::signal(SIGTERM, stop_server);
            err << "kostant: serving on http://" << host << ":" << port << "\n";
            bool ok = server.listen(host, port);
            g_server = nullptr;
            if (!snapshot.empty()) std::ofstream(snapshot) << service.snapshot().dump(2) << "\n";
            return ok ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const json::exception& e) {
        err << "kostant: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "kostant: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace kostant
