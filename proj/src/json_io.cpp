#include "mouldkit/json_io.hpp"

namespace mk {

namespace {

Json rat_fields(Json j, const Rational& c) {
  j["num"] = c.get_num().get_str();
  j["den"] = c.get_den().get_str();
  return j;
}

Rational rat_from(const Json& j) {
  if (!j.contains("num")) throw JsonFormatError("term without num");
  auto text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()); };
  std::string s = text(j.at("num"));
  if (j.contains("den")) s += "/" + text(j.at("den"));
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw JsonFormatError("bad rational '" + s + "'");
  }
}

}  // namespace

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms()) out.push_back(rat_fields({{"exps", MultiPoly::unpack(k, p.nvars())}}, c));
  return out;
}

MultiPoly poly_from_json(const Json& j, int nvars) {
  if (j.is_string()) return MultiPoly::parse(j.get<std::string>(), nvars);
  if (!j.is_array()) throw JsonFormatError("polynomial must be a list of terms or a string");
  MultiPoly p(nvars);
  for (const auto& t : j) {
    auto exps = t.at("exps").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != nvars) throw JsonFormatError("exponent vector of the wrong length");
    p += MultiPoly::monomial(nvars, exps, rat_from(t));
  }
  return p;
}

Json to_json(const FormalFraction& f) {
  Json den = Json::array();
  for (const auto& d : f.factors()) den.push_back(to_json(d));
  return {{"num", to_json(f.num())}, {"den", den}, {"text", f.to_string()}};
}

FormalFraction fraction_from_json(const Json& j, int nvars) {
  if (j.is_object() && j.contains("den") && j.at("den").is_array() && j.contains("num") && !j.at("num").is_string()) {
    std::vector<MultiPoly> dens;
    for (const auto& d : j.at("den")) dens.push_back(poly_from_json(d, nvars));
    return FormalFraction::with_factors(poly_from_json(j.at("num"), nvars), dens);
  }
  return FormalFraction(poly_from_json(j, nvars));
}

namespace {

template <class V, class F>
Json mould_json(const Mould<V>& m, F conv) {
  Json vals = Json::object();
  for (int r = 0; r <= m.cap(); ++r)
    if (!m[r].is_zero()) vals[std::to_string(r)] = conv(m[r]);
  return {{"cap", m.cap()}, {"values", vals}};
}

template <class V, class F>
Mould<V> mould_from(const Json& j, F conv) {
  if (!j.is_object() || !j.contains("cap")) throw JsonFormatError("mould needs a cap");
  Mould<V> m(j.at("cap").get<int>());
  if (j.contains("values")) {
    for (const auto& [key, v] : j.at("values").items()) {
      int r = std::stoi(key);
      if (r < 0 || r > m.cap()) throw JsonFormatError("mould depth " + key + " outside the cap");
      m.set(r, conv(v, r));
    }
  }
  return m;
}

}  // namespace

Json to_json(const PolyMould& m) {
  return mould_json(m, [](const MultiPoly& p) { return to_json(p); });
}
Json to_json(const RatMould& m) {
  return mould_json(m, [](const FormalFraction& f) { return to_json(f); });
}
PolyMould poly_mould_from_json(const Json& j) {
  return mould_from<MultiPoly>(j, [](const Json& v, int r) { return poly_from_json(v, r); });
}
RatMould rat_mould_from_json(const Json& j) {
  return mould_from<FormalFraction>(j, [](const Json& v, int r) { return fraction_from_json(v, r); });
}

Json to_json(const NCPoly& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms()) terms.push_back(rat_fields({{"word", w}}, c));
  Json j = {{"text", p.to_string()}, {"terms", terms}};
  if (p.cap() != NCPoly::kUncapped) j["cap"] = p.cap();
  return j;
}

NCPoly ncpoly_from_json(const Json& j) {
  if (j.is_string()) return NCPoly::parse(j.get<std::string>());
  int cap = j.value("cap", NCPoly::kUncapped);
  if (j.contains("terms")) {
    NCPoly p(cap);
    for (const auto& t : j.at("terms")) p.add_term(t.at("word").get<std::string>(), rat_from(t));
    return p;
  }
  return NCPoly::parse(j.at("text").get<std::string>(), cap);
}

Json to_json(const CPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(rat_fields({{"mono", m}}, c));
  return {{"text", p.to_string()}, {"terms", terms}};
}

CPoly cpoly_from_json(const Json& j) {
  if (j.is_string()) return CPoly::parse(j.get<std::string>());
  if (j.contains("terms")) {
    CPoly p;
    for (const auto& t : j.at("terms")) p.add_term(t.at("mono").get<std::vector<int>>(), rat_from(t));
    return p;
  }
  return CPoly::parse(j.at("text").get<std::string>());
}

Json to_json(const Derivation& D) {
  return {{"val_a", to_json(D.val_a())}, {"val_b", to_json(D.val_b())}, {"cap", D.cap()}};
}

Derivation derivation_from_json(const Json& j) {
  int cap = j.at("cap").get<int>();
  return Derivation(ncpoly_from_json(j.at("val_a")).truncate(cap), ncpoly_from_json(j.at("val_b")).truncate(cap), cap);
}

Json to_json(const QSeriesL& s) {
  Json terms = Json::array();
  for (const auto& t : s.nonzero_terms()) terms.push_back(rat_fields({{"n", t.n}, {"m", t.m}}, t.c));
  return {{"N", s.q_order()}, {"M", s.l_degree()}, {"terms", terms}};
}

}  // namespace mk
