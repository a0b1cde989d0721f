/** Python bindings for the main library operations. */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "finspace/classify.hpp"
#include "finspace/collapse.hpp"
#include "finspace/complex.hpp"
#include "finspace/fixtures.hpp"
#include "finspace/homology.hpp"
#include "finspace/io.hpp"
#include "finspace/structure.hpp"

namespace py = pybind11;
using namespace finspace;

namespace {

std::vector<std::string> torsion_strings(const HomologyProfile& h, int k) {
    std::vector<std::string> out;
    for (const auto& d : h.torsion.at(k)) out.push_back(d.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_finspace, m) {
    m.doc() = "finite T0-space toolkit: posets, order complexes, homology, collapses";

    py::register_exception<Error>(m, "FinspaceError");

    py::class_<Poset>(m, "Poset")
        .def(py::init<>())
        .def_readonly("n", &Poset::n)
        .def("less", &Poset::less, py::arg("i"), py::arg("j"))
        .def("comparable", &Poset::comparable, py::arg("i"), py::arg("j"))
        .def("up_set", [](const Poset& p, int x) { return mask_elements(up_set(p, x)); })
        .def("down_set", [](const Poset& p, int x) { return mask_elements(down_set(p, x)); })
        .def("minimal_elements", [](const Poset& p) { return mask_elements(minimal_elements(p)); })
        .def("maximal_elements", [](const Poset& p) { return mask_elements(maximal_elements(p)); })
        .def("cover_pairs", [](const Poset& p) { return cover_pairs(p); })
        .def("height", [](const Poset& p) { return height(p); })
        .def("level", [](const Poset& p, int x) { return level(p, x); })
        .def("dual", [](const Poset& p) { return dual(p); })
        .def("canonical_hex", [](const Poset& p) { return canonical_form(p).hex(); })
        .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
        .def("__repr__", [](const Poset& p) {
            return "<Poset n=" + std::to_string(p.n) + ">";
        });

    m.def("from_covers", &from_covers, py::arg("n"), py::arg("covers"),
          "build a poset from cover pairs (i, j) meaning i < j");
    m.def("parse_poset", &read_poset_string, py::arg("text"));
    m.def("format_poset", &poset_to_string, py::arg("poset"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("p"), py::arg("q"));

    m.def("is_minimal_space", &is_minimal_space, py::arg("poset"),
          "true when the space has no beat points");
    m.def("is_contractible", &is_contractible, py::arg("poset"));
    m.def("core", [](const Poset& p) { return core(p); }, py::arg("poset"),
          "remove beat points until none remain");
    m.def("beat_points", [](const Poset& p) {
        BeatReport r = beat_points(p);
        return py::make_tuple(r.up_beats, r.down_beats);
    }, py::arg("poset"), "([(up-beat, witness)], [(down-beat, witness)])");
    m.def("budget", &budget, py::arg("poset"),
          "naked-edge count D = C_ca - T_tr of the three-layer edge classification");
    m.def("layer_summary", [](const Poset& p) {
        LevelData d = levels(p);
        py::dict out;
        out["m"] = d.m;
        out["r"] = d.r;
        out["n"] = d.n;
        out["beta"] = d.beta;
        out["alpha"] = d.alpha;
        out["C_ca"] = d.C_ca;
        out["T_tr"] = d.T_tr;
        out["D"] = d.D;
        out["infeasible"] = d.infeasible;
        out["naked_edges"] = d.naked_edges;
        out["s"] = d.s;
        out["t"] = d.t;
        return out;
    }, py::arg("poset"), "three-layer edge-classification summary");
    m.def("lemma_diagnostics", [](const Poset& p) {
        py::list out;
        for (const LemmaFinding& f : lemma_diagnostics(p).findings) {
            py::dict d;
            d["lemma"] = lemma_name(f.lemma);
            d["on_dual"] = f.on_dual;
            d["elements"] = f.elems;
            d["detail"] = f.detail;
            out.append(d);
        }
        return out;
    }, py::arg("poset"));

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def("dim", &SimplicialComplex::dim)
        .def("size", &SimplicialComplex::size)
        .def("f_vector", [](const SimplicialComplex& k) { return f_vector(k); })
        .def("euler_char", [](const SimplicialComplex& k) { return euler_char(k); })
        .def("simplices", [](const SimplicialComplex& k, int d) { return k.simplices.at(d); },
             py::arg("dim"))
        .def("__repr__", [](const SimplicialComplex& k) {
            return "<SimplicialComplex dim=" + std::to_string(k.dim()) +
                   " size=" + std::to_string(k.size()) + ">";
        });

    m.def("order_complex", &order_complex, py::arg("poset"),
          "simplices are the nonempty chains");

    m.def("homology", [](const SimplicialComplex& k) {
        HomologyProfile h = homology(k);
        py::dict out;
        out["betti"] = h.betti;
        py::list tors;
        for (std::size_t i = 0; i < h.torsion.size(); ++i) {
            tors.append(torsion_strings(h, static_cast<int>(i)));
        }
        out["torsion"] = tors;
        out["reduced_trivial"] = h.reduced_trivial;
        out["text"] = to_string(h);
        return out;
    }, py::arg("complex"), "integral simplicial homology via Smith normal form");
    m.def("is_homotopically_trivial", &is_homotopically_trivial, py::arg("poset"));

    m.def("greedy_collapse", [](const SimplicialComplex& k, int backtrack_depth) {
        CollapseOutcome o = greedy_collapse(k, backtrack_depth);
        py::dict out;
        out["collapsed_to_point"] = o.collapsed_to_point;
        py::list steps;
        for (const CollapseStep& s : o.steps_taken) steps.append(py::make_tuple(s.sigma, s.tau));
        out["steps"] = steps;
        out["tree_edges"] = o.tree_edges;
        return out;
    }, py::arg("complex"), py::arg("backtrack_depth") = 0);
    m.def("verify_certificate", [](const Poset& p, const std::vector<std::pair<Simplex, Simplex>>& raw) {
        std::vector<CollapseStep> steps;
        for (const auto& [sigma, tau] : raw) steps.push_back({sigma, tau});
        CollapseOutcome o = verify_certificate(p, steps);
        py::dict out;
        out["collapsed_to_point"] = o.collapsed_to_point;
        out["total_steps"] = o.steps_taken.size();
        out["tree_edges"] = o.tree_edges;
        return out;
    }, py::arg("poset"), py::arg("steps"),
        "replay (sigma, tau) steps, then check the residual spanning tree");

    m.def("enumerate_count", [](int n, int jobs) {
        EnumOptions opts;
        opts.jobs = jobs;
        return enumerate_posets(n, nullptr, opts);
    }, py::arg("n"), py::arg("jobs") = 1, "number of poset isomorphism classes");
    m.def("classify_summary", [](int n) {
        auto [stats, records] = classify(n);
        py::dict out;
        out["n"] = stats.n;
        out["total"] = stats.total;
        out["minimal"] = stats.minimal;
        out["survivors"] = stats.survivors;
        out["by_middle"] = stats.by_middle;
        py::list recs;
        for (const ClassificationRecord& r : records) {
            py::dict d;
            d["canon"] = r.canon.hex();
            d["layers"] = r.layer_vector;
            d["type"] = type_name(r.matched_type);
            d["self_dual"] = r.self_dual;
            d["homology"] = to_string(r.profile);
            recs.append(d);
        }
        out["records"] = recs;
        return out;
    }, py::arg("n"), "census stats plus one record per survivor");

    m.def("type_poset", [](const std::string& name) {
        for (const Fixture& f : builtin_fixtures()) {
            if (type_name(f.label) == name) return f.poset;
        }
        throw Error("unknown type label: " + name);
    }, py::arg("name"), "built-in ten-point fixture (I..VII, I^op, II^op, III^op)");
}
