#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <variant>

#include "sunflower/binomial.hpp"
#include "sunflower/constructions.hpp"
#include "sunflower/core.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/family.hpp"
#include "sunflower/matching.hpp"
#include "sunflower/search.hpp"
#include "sunflower/stability.hpp"

namespace py = pybind11;
using namespace sunflower;

namespace {

py::int_ to_py(const Count& c) {
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(c.str()));
}

EdgeSet edge_from(const std::vector<int>& labels) { return EdgeSet::from_labels(labels); }

std::vector<std::vector<int>> edges_out(const std::vector<EdgeSet>& edges) {
  std::vector<std::vector<int>> out;
  out.reserve(edges.size());
  for (EdgeSet e : edges) out.push_back(e.labels());
  return out;
}

Matching matching_from(const std::vector<std::vector<int>>& edges) {
  Matching m;
  m.reserve(edges.size());
  for (const auto& e : edges) m.push_back(edge_from(e));
  return m;
}

py::dict decomposition_dict(const StarDecomposition& d) {
  py::dict out;
  out["centers"] = d.centers;
  py::list parts;
  for (const Family& part : d.parts) parts.append(edges_out(part.edges));
  out["parts"] = parts;
  return out;
}

py::dict report_dict(const SearchReport& r) {
  py::dict out;
  out["method"] = r.method;
  out["optimum"] = to_py(r.optimum);
  py::list wits;
  for (const Family& w : r.witnesses) wits.append(w);
  out["witnesses"] = wits;
  out["nodes_explored"] = r.nodes_explored;
  if (r.method == "exhaustive") {
    out["optimal_count"] = r.optimal_count;
  } else {
    out["seed"] = *r.seed;
    out["restarts"] = r.restarts;
    out["steps"] = r.steps;
    out["patience"] = r.patience;
    out["threads"] = r.threads;
    out["hits"] = r.hits;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact workbench for k-uniform families: matching numbers, codegree norms, "
            "sunflower counts, extremal constructions and searches.";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<guard_error>(m, "GuardError", PyExc_RuntimeError);

  py::class_<Family>(m, "Family")
      .def(py::init([](int n, int k, const std::vector<std::vector<int>>& edges) {
             return Family::make_labels(n, k, edges);
           }),
           py::arg("n"), py::arg("k"), py::arg("edges"))
      .def_readonly("n", &Family::n)
      .def_readonly("k", &Family::k)
      .def_property_readonly("edges", [](const Family& f) { return edges_out(f.edges); })
      .def("__len__", [](const Family& f) { return f.size(); })
      .def("__eq__", [](const Family& a, const Family& b) { return a == b; })
      .def("__repr__", [](const Family& f) {
        return "Family(n=" + std::to_string(f.n) + ", k=" + std::to_string(f.k) +
               ", edges=" + std::to_string(f.size()) + ")";
      });

  m.def("loads", [](const std::string& text) {
    std::istringstream in(text);
    return read_family(in);
  }, py::arg("text"), "Parse a family from the shared text format.");
  m.def("dumps", [](const Family& f) { return to_text(f); }, py::arg("family"));
  m.def("load", &load_family, py::arg("path"));

  // core
  m.def("codegree",
        [](const Family& h, const std::vector<int>& e) { return codegree(h, edge_from(e)); },
        py::arg("family"), py::arg("core"));
  m.def("codegree_table", [](const Family& h) {
    py::dict out;
    CodegreeTable table = codegree_table(h);
    for (const auto& [key, d] : table.nonzero()) out[py::tuple(py::cast(key.labels()))] = d;
    return out;
  }, "Nonzero codegrees keyed by (k-1)-subset tuples.");
  m.def("co_norm", [](const Family& h, int p) { return to_py(co_norm(h, p)); },
        py::arg("family"), py::arg("p"));
  m.def("sunflower_count", [](const Family& h, int l) { return to_py(sunflower_count(h, l)); },
        py::arg("family"), py::arg("l"));
  m.def("high_codegree_family", &high_codegree_family, py::arg("family"), py::arg("d"));
  m.def("restrict_avoid",
        [](const Family& h, const std::vector<int>& s) {
          return restrict_avoid(h, edge_from(s));
        },
        py::arg("family"), py::arg("avoid"));
  m.def("max_codegree", &max_codegree, py::arg("family"));
  m.def("trivial_center", &trivial_center, py::arg("family"));
  m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));

  // matching
  m.def("matching_number", &matching_number, py::arg("family"));
  m.def("maximum_matching",
        [](const Family& h) { return edges_out(maximum_matching(h)); }, py::arg("family"));
  m.def("has_matching",
        [](const Family& h, int size) -> std::optional<std::vector<std::vector<int>>> {
          auto m2 = has_matching(h, size);
          if (!m2) return std::nullopt;
          return edges_out(*m2);
        },
        py::arg("family"), py::arg("size"));
  m.def("cover_number", &cover_number, py::arg("family"));
  m.def("minimum_cover", &minimum_cover, py::arg("family"));
  m.def("lift_matching",
        [](const Family& h, int s, const std::vector<std::vector<int>>& shadow) {
          return edges_out(lift_matching(h, s, matching_from(shadow)));
        },
        py::arg("family"), py::arg("s"), py::arg("shadow"));

  // constructions
  m.def("build_A", [](int n, int k, int s, int i) { return build_A({n, k, s, i}); },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("i"));
  m.def("build_H", &build_H, py::arg("n"), py::arg("k"), py::arg("s"));
  m.def("size_A", [](int n, int k, int s, int i) { return to_py(size_A({n, k, s, i})); },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("i"));
  m.def("co_norm_H_closed",
        [](int n, int k, int s, int p) { return to_py(co_norm_H_closed(n, k, s, p)); },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("p"));
  m.def("sunflower_count_H_closed",
        [](int n, int k, int s, int l) { return to_py(sunflower_count_H_closed(n, k, s, l)); },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("l"));
  m.def("reference_bounds", [](int n, int k) {
    ReferenceBounds b = reference_bounds(n, k);
    py::dict out;
    out["ekr"] = to_py(b.ekr);
    out["hm"] = to_py(b.hm);
    return out;
  }, py::arg("n"), py::arg("k"));

  // stability
  m.def("stars_cover",
        [](const Family& h, int s) -> std::optional<py::dict> {
          auto d = stars_cover(h, s);
          if (!d) return std::nullopt;
          return decomposition_dict(*d);
        },
        py::arg("family"), py::arg("s"));
  m.def("stability_decompose",
        [](const Family& h, int s) {
          auto result = stability_decompose(h, s);
          if (auto* d = std::get_if<StarDecomposition>(&result)) return decomposition_dict(*d);
          py::dict out;
          out["diagnostic"] = std::get<Diagnostic>(result).detail;
          return out;
        },
        py::arg("family"), py::arg("s"));
  m.def("check_shadow_counting_bound",
        [](const Family& h, int s, int p) { return check_shadow_counting_bound(h, s, p); },
        py::arg("family"), py::arg("s"), py::arg("p"));

  // search
  m.def("exhaustive_max",
        [](int n, int k, int s, const std::string& objective) {
          return report_dict(exhaustive_max(n, k, s, Objective::parse(objective)));
        },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("objective"));
  m.def("hill_climb",
        [](int n, int k, int s, const std::string& objective, std::uint64_t seed, int restarts,
           int steps, int threads) {
          return report_dict(
              hill_climb(n, k, s, Objective::parse(objective), seed, restarts, steps, threads));
        },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("objective"), py::arg("seed") = 1,
        py::arg("restarts") = 100, py::arg("steps") = 1000, py::arg("threads") = 1);
  m.def("threshold_scan",
        [](int k, int s, const std::string& objective, int n_from, int n_to) {
          ThresholdReport r = threshold_scan(k, s, Objective::parse(objective), n_from, n_to);
          py::list rows;
          for (const auto& row : r.rows) {
            py::dict d;
            d["n"] = row.n;
            d["value_H"] = to_py(row.value_H);
            d["value_Ak"] = to_py(row.value_Ak);
            d["winner"] = std::string(row.winner == 'H' ? "H" : (row.winner == 'A' ? "Ak" : "tie"));
            rows.append(d);
          }
          py::dict out;
          out["rows"] = rows;
          out["first_H_win"] =
              r.first_H_win ? py::object(py::cast(*r.first_H_win)) : py::object(py::none());
          out["h_wins_through_end"] = r.h_wins_through_end;
          return out;
        },
        py::arg("k"), py::arg("s"), py::arg("objective"), py::arg("n_from"), py::arg("n_to"));
  m.def("verify_sequence_inequality",
        [](int a, int b, int c, int n, int p) {
          SequenceReport r = verify_sequence_inequality(a, b, c, n, p);
          py::list rows;
          for (const auto& row : r.rows) {
            py::dict d;
            d["m"] = row.m;
            d["max_sum"] = row.max_sum;
            d["bound"] = row.bound;
            d["equality"] = row.equality;
            d["argmax"] = row.argmax;
            rows.append(d);
          }
          py::dict out;
          out["rows"] = rows;
          out["all_hold"] = r.all_hold;
          return out;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n"), py::arg("p"));
  m.def("verify_graph_bound",
        [](int n, int s) {
          GraphBoundReport r = verify_graph_bound(n, s);
          py::dict out;
          out["max_size"] = r.max_size;
          out["bound"] = r.bound;
          out["holds"] = r.holds;
          out["attained"] = r.attained;
          py::list wits;
          for (const Family& w : r.witnesses) wits.append(w);
          out["witnesses"] = wits;
          out["witness_count"] = r.witness_count;
          return out;
        },
        py::arg("n"), py::arg("s"));
  m.def("random_corpus",
        [](std::uint64_t seed, int count) {
          py::list out;
          for (auto& item : random_corpus(seed, count)) {
            py::dict d;
            d["family"] = item.family;
            d["s"] = item.s_target;
            out.append(d);
          }
          return out;
        },
        py::arg("seed"), py::arg("count"));
}
