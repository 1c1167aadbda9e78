#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>

#include "mouldkit/derivation.hpp"
#include "mouldkit/eisenstein.hpp"
#include "mouldkit/mould.hpp"
#include "mouldkit/relations.hpp"

namespace py = pybind11;
using namespace mk;

namespace {

using MouldText = std::map<int, std::string>;

int cap_of(const MouldText& m, int cap) {
  if (cap >= 0) return cap;
  int c = 0;
  for (const auto& [r, v] : m) c = std::max(c, r);
  return c;
}

PolyMould poly_mould(const MouldText& m, int cap = -1) {
  PolyMould out(cap_of(m, cap));
  for (const auto& [r, v] : m) {
    if (r < 0 || r > out.cap()) throw py::value_error("depth outside the cap");
    out.set(r, MultiPoly::parse(v, r));
  }
  return out;
}

template <class V>
MouldText mould_text(const Mould<V>& m) {
  MouldText out;
  for (int r = 0; r <= m.cap(); ++r)
    if (!m[r].is_zero()) out[r] = m[r].to_string();
  return out;
}

MouldText rat_text(const RatMould& m) {
  if (auto p = to_poly(m)) return mould_text(*p);
  return mould_text(m);
}

bool check(const std::string& kind, const MouldText& mt) {
  PolyMould m = poly_mould(mt);
  if (kind == "alternal") return is_alternal(m);
  if (kind == "bialternal") return is_bialternal(m);
  if (kind == "delta-bialternal") return is_delta_bialternal(m);
  if (kind == "push-invariant") return is_push_invariant(m);
  if (kind == "push-neutral") return is_push_neutral(m);
  throw py::value_error("unknown check " + kind);
}

MouldText op(const std::string& name, const MouldText& pt, std::optional<MouldText> at, int max_depth) {
  PolyMould P = poly_mould(pt).truncate(max_depth);
  if (name == "push") return mould_text(push(P));
  if (name == "swap") return mould_text(swap(P));
  if (name == "dar") return mould_text(dar(P));
  if (name == "delta") return mould_text(delta(P));
  if (!at) throw py::value_error("op " + name + " needs a second mould");
  PolyMould A = poly_mould(*at).truncate(max_depth);
  if (name == "mu") return mould_text(mu(P, A));
  if (name == "lu") return mould_text(lu(P, A));
  if (name == "arit") return mould_text(arit(P, A));
  if (name == "arat") return mould_text(arat(P, A));
  if (name == "darit") return rat_text(darit(P, A));
  throw py::value_error("unknown op " + name);
}

py::list series_terms(const QSeriesL& s) {
  py::list out;
  for (const auto& t : s.nonzero_terms()) out.append(py::make_tuple(t.n, t.m, t.c.get_str()));
  return out;
}

py::dict dimension(const DimensionReport& d) {
  py::dict out;
  out["n"] = d.n;
  out["dim"] = d.dim;
  out["formula"] = d.formula;
  out["matches"] = d.matches;
  py::list basis;
  for (const auto& b : d.basis) basis.append(b.to_string());
  out["basis"] = basis;
  return out;
}

}  // namespace

PYBIND11_MODULE(_mouldkit, m) {
  m.doc() = "exact mould calculus, elliptic double shuffle and Eisenstein integrals";

  py::register_exception<InsufficientCap>(m, "InsufficientCap", PyExc_ValueError);
  py::register_exception<NotInImage>(m, "NotInImage", PyExc_ValueError);
  py::register_exception<NotRepresentable>(m, "NotRepresentable", PyExc_ValueError);

  m.def("canonical_poly", [](const std::string& s, int nvars) { return MultiPoly::parse(s, nvars).to_string(); },
        py::arg("text"), py::arg("nvars"));
  m.def("lie_bracket", [](const std::string& p, const std::string& q) {
    return lie_bracket(NCPoly::parse(p), NCPoly::parse(q)).to_string();
  });
  m.def("is_lie", [](const std::string& s) { return is_lie(NCPoly::parse(s)); });
  m.def("to_c_coordinates", [](const std::string& s) { return to_c_coordinates(NCPoly::parse(s)).to_string(); });
  m.def("epsilon", [](int two_k, int W) {
    Derivation e = epsilon(two_k, W);
    return py::make_tuple(e.val_a().to_string(), e.val_b().to_string());
  }, py::arg("two_k"), py::arg("max_weight"));

  m.def("ma", [](const std::string& c, int depth_cap) { return mould_text(ma(CPoly::parse(c), depth_cap)); },
        py::arg("cpoly"), py::arg("depth_cap") = -1);
  m.def("bracket_eps", [](int two_j, int two_k, int W) { return eps_bracket_mould(two_j, two_k, W)[2].to_string(); },
        py::arg("two_j"), py::arg("two_k"), py::arg("max_weight") = -1);
  m.def("check", &check, py::arg("kind"), py::arg("mould"));
  m.def("op", &op, py::arg("name"), py::arg("p"), py::arg("a") = py::none(), py::arg("max_depth") = 5);

  m.def("eds2_space", [](int n) { return dimension(eds2_space(n)); });
  m.def("fs2_space", [](int n) { return dimension(fs2_space(n)); });
  m.def("rank_table", [](int n_max, int jobs) {
    py::list out;
    for (const auto& r : eps_bracket_rank_table(n_max, jobs)) {
      py::dict d;
      d["n"] = r.n;
      d["pairs"] = r.pairs;
      d["brackets"] = r.brackets;
      d["rank"] = r.rank;
      d["relations"] = r.relations;
      d["formula_brackets"] = r.formula_brackets;
      d["formula_rank"] = r.formula_rank;
      d["formula_relations"] = r.formula_relations;
      out.append(d);
    }
    return out;
  }, py::arg("n_max"), py::arg("jobs") = 1);

  m.def("gseries", [](int k, int N) { return series_terms(eisenstein_q(k, N)); }, py::arg("k"), py::arg("q_order") = 30);
  m.def("iter_integral", [](const std::vector<int>& index, int N) {
    IterEisCache cache(N);
    return series_terms(cache.get(index));
  }, py::arg("index"), py::arg("q_order") = 30);

  m.def("verify_paper", [](int weight_cap) {
    VerifyOptions vo;
    vo.weight_cap = weight_cap;
    PaperReport rep = verify_paper_examples(vo);
    py::list items;
    for (const auto& it : rep.items) {
      py::dict d;
      d["item"] = it.item;
      d["expected_source"] = it.expected_source;
      d["pass"] = it.pass;
      d["sigma"] = rep.sigma;
      d["detail"] = it.detail;
      items.append(d);
    }
    return items;
  }, py::arg("weight_cap") = 31);
}
