#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kostant/automaton.hpp"
#include "kostant/classification.hpp"
#include "kostant/correspondence.hpp"
#include "kostant/dot.hpp"
#include "kostant/root_counting.hpp"
#include "kostant/tableaux.hpp"

namespace py = pybind11;
using namespace kostant;

namespace {

std::vector<std::vector<Int>> roots_list(const std::vector<RootVector>& rs)
{
    std::vector<std::vector<Int>> out;
    for (const auto& r : rs) out.push_back(r.c);
    return out;
}

py::dict trace_dict(const GameTrace& t)
{
    py::dict d;
    std::vector<std::vector<Int>> states;
    for (const auto& s : t.states) states.push_back(s.chips);
    d["moves"] = t.moves;
    d["states"] = states;
    d["final"] = t.final().chips;
    return d;
}

py::object verdict_obj(const FinitenessVerdict& v)
{
    py::dict d;
    d["verdict"] = verdict_name(v.kind);
    if (v.final) d["final"] = v.final->chips;
    if (v.witness) {
        py::dict c;
        c["kind"] = certificate_kind_name(v.witness->kind);
        c["vertices"] = v.witness->vertices;
        c["arms"] = v.witness->arms;
        c["affine"] = v.witness->affine;
        d["certificate"] = c;
    }
    return std::move(d);
}

}  // namespace

PYBIND11_MODULE(_kostant, m)
{
    m.doc() = "Kostant game and Weyl group workbench";

    py::register_exception<Error>(m, "KostantError", PyExc_ValueError);

    py::class_<DynkinDiagram>(m, "Diagram")
        .def(py::init([](const std::string& family, int rank) { return build_diagram(family, rank); }),
             py::arg("family"), py::arg("rank"))
        .def_static("from_edges", &DynkinDiagram::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("rank", &DynkinDiagram::rank)
        .def_property_readonly("family", [](const DynkinDiagram& d) { return family_name(d.family()); })
        .def_property_readonly("name", &DynkinDiagram::name)
        .def("arrows", &DynkinDiagram::arrows)
        .def("neighbours", &DynkinDiagram::neighbours)
        .def("dual", [](const DynkinDiagram& d) { return dual(d); })
        .def("cartan", [](const DynkinDiagram& d) { return cartan_matrix(d).rows(); })
        .def("positive_roots", [](const DynkinDiagram& d) { return roots_list(positive_roots(d)); })
        .def("__eq__", [](const DynkinDiagram& a, const DynkinDiagram& b) { return a == b; })
        .def("__repr__", [](const DynkinDiagram& d) { return "Diagram('" + d.name() + "')"; });

    py::class_<GameBoard>(m, "Board")
        .def_static("classic", &GameBoard::classic, py::arg("diagram"))
        .def_static("modified", &GameBoard::modified, py::arg("diagram"), py::arg("sources"))
        .def_property_readonly("diagram", &GameBoard::diagram)
        .def_property_readonly("mode", [](const GameBoard& b) { return mode_name(b.mode()); })
        .def_property_readonly("sources", &GameBoard::sources)
        .def("initial", [](const GameBoard& b, int start) { return b.initial(start).chips; }, py::arg("start") = 0)
        .def("status",
             [](const GameBoard& b, const std::vector<Int>& c, int v) { return status_name(status(b, Configuration(c), v)); })
        .def("legal_moves", [](const GameBoard& b, const std::vector<Int>& c) { return sad_vertices(b, Configuration(c)); })
        .def("fire", [](const GameBoard& b, const std::vector<Int>& c, int v) { return fire(b, Configuration(c), v).chips; })
        .def(
            "run",
            [](const GameBoard& b, const std::vector<Int>& start, const std::string& strategy, std::uint64_t seed) {
                Strategy s = strategy == "random" ? Strategy::random(seed) : Strategy::first_sad();
                RunResult r = run(b, Configuration(start), s);
                py::dict d = trace_dict(r.trace);
                d["terminated"] = r.terminated();
                return d;
            },
            py::arg("start"), py::arg("strategy") = "first-sad", py::arg("seed") = 0)
        .def("replay",
             [](const GameBoard& b, const std::vector<Int>& start, const std::vector<int>& moves) {
                 return trace_dict(replay(b, Configuration(start), moves));
             })
        .def("sinks", [](const GameBoard& b, const std::vector<Int>& start) {
            ConfigurationGraph g = explore(b, Configuration(start));
            std::vector<std::vector<Int>> out;
            for (auto k : g.sinks) out.push_back(g.nodes[k].chips);
            return out;
        });

    // Weyl words. Elements travel as words; results come back as shortest reduced words.
    m.def("length", [](const DynkinDiagram& d, const Word& w) { RootSystem rs(d); return length(rs, element_of(rs, w)); });
    m.def("is_reduced", [](const DynkinDiagram& d, const Word& w) { return is_reduced(RootSystem(d), w); });
    m.def("reduced_word", [](const DynkinDiagram& d, const Word& w) { RootSystem rs(d); return reduced_word(rs, element_of(rs, w)); });
    m.def("inversion_set", [](const DynkinDiagram& d, const Word& w) {
        RootSystem rs(d);
        return roots_list(inversion_set(rs, element_of(rs, w)));
    });
    m.def("is_min_rep", [](const DynkinDiagram& d, const Word& w, const std::vector<int>& J) {
        RootSystem rs(d);
        return is_min_rep(rs, element_of(rs, w), J);
    });
    m.def("minimal_coset_reps", [](const DynkinDiagram& d, const std::vector<int>& J) {
        RootSystem rs(d);
        std::vector<Word> out;
        for (const auto& w : minimal_coset_reps(rs, J)) out.push_back(reduced_word(rs, w));
        return out;
    });
    m.def("group_order", [](const DynkinDiagram& d) { return WeylGroup(RootSystem(d)).size(); });

    // Correspondence.
    m.def("word_of_moves", &word_of_moves);
    m.def("simulate_word", [](const DynkinDiagram& d, const std::vector<int>& I, const Word& w) { return simulate_word(d, I, w).chips; });
    m.def("verify_play", [](const DynkinDiagram& d, const std::vector<int>& I, const std::vector<int>& moves) {
        RootSystem rs(d);
        return reduced_word(rs, verify_play(rs, I, moves));
    });
    m.def(
        "enumerate_plays",
        [](const DynkinDiagram& d, const std::vector<int>& I, bool terminal_only) {
            std::vector<std::pair<std::vector<int>, Word>> out;
            for (auto& p : enumerate_plays(d, I, terminal_only)) out.emplace_back(p.moves, p.word);
            return out;
        },
        py::arg("diagram"), py::arg("sources"), py::arg("terminal_only") = false);

    // Automaton.
    py::class_<Dfa>(m, "Dfa")
        .def_property_readonly("num_states", &Dfa::num_states)
        .def("accepts", [](const Dfa& a, const Word& w) { return accepts(a, w); })
        .def("language", [](const Dfa& a, std::size_t max_len) { return enumerate_language(a, max_len); })
        .def("minimize", [](const Dfa& a) { return minimize(a); })
        .def("dot", [](const Dfa& a, const std::string& name) { return export_dot(a, name); }, py::arg("name") = "dfa");
    m.def("build_dfa", [](const DynkinDiagram& d, const std::vector<int>& J) { return build_dfa(RootSystem(d), J); });

    // Root counting.
    m.def("single_vertex_final", [](const DynkinDiagram& d, int j) { return single_vertex_final(d, j).chips; });
    m.def("heights", [](const DynkinDiagram& d) { return height_profile(d).heights; });
    m.def("positive_root_sum", [](const DynkinDiagram& d) { return positive_root_sum(d).c; });
    m.def("inversion_partition", [](const DynkinDiagram& d) {
        std::vector<std::vector<std::vector<Int>>> out;
        for (const auto& block : inversion_partition(RootSystem(d))) out.push_back(roots_list(block));
        return out;
    });

    // Classification.
    m.def(
        "classify",
        [](int n, const std::vector<std::pair<int, int>>& edges, bool simulate) {
            SimpleGraph g(n, edges);
            return verdict_obj(simulate ? simulate_finiteness(g) : is_kostant_finite(g));
        },
        py::arg("n"), py::arg("edges"), py::arg("simulate") = false);
    m.def("classify_dot", [](const std::string& text) { return verdict_obj(is_kostant_finite(graph_from_dot(text))); });
    m.def("affine_extension", [](const DynkinDiagram& d) {
        AffineExtension e = affine_extension(d);
        py::dict out;
        out["n"] = e.graph.num_vertices();
        out["edges"] = e.graph.edges();
        out["joined"] = e.joined;
        out["double_edge"] = e.double_edge;
        return out;
    });

    // Tableaux.
    m.def("play_to_tableau", [](const std::vector<int>& moves, int k, int n) { return play_to_tableau(moves, k, n).rows; });
    m.def("enumerate_tableaux", [](int n, int k) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& t : enumerate_tableaux(n, k)) out.push_back(t.rows);
        return out;
    });
    m.def("is_standard", [](const std::vector<std::vector<int>>& rows) { return is_standard(Tableau{rows}); });
    m.def("grassmannian_shape", [](const Word& w, int k, int n) { return grassmannian_shape(w, k, n).parts; });
}
