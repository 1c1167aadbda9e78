#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "mouldkit/derivation.hpp"
#include "mouldkit/eisenstein.hpp"
#include "mouldkit/json_io.hpp"
#include "mouldkit/mould.hpp"
#include "mouldkit/relations.hpp"

using namespace mk;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  int max_weight = 12;
  bool max_weight_set = false;
  int max_depth = 5;
  int q_order = 30;
  unsigned long seed = 20240917;
  int jobs = 1;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// A mould file may hold polynomial or rational values.
RatMould load_mould(const std::string& path, bool* polynomial = nullptr) {
  Json j = read_json_file(path);
  try {
    PolyMould m = poly_mould_from_json(j);
    if (polynomial) *polynomial = true;
    return to_rat(m);
  } catch (const JsonFormatError&) {
  } catch (const std::invalid_argument&) {
  }
  if (polynomial) *polynomial = false;
  return rat_mould_from_json(j);
}

PolyMould load_poly_mould(const std::string& path) { return poly_mould_from_json(read_json_file(path)); }

template <class V>
void print_mould(const Mould<V>& m, bool json) {
  if (json) {
    std::cout << to_json(m).dump() << "\n";
    return;
  }
  for (int r = 0; r <= m.cap(); ++r)
    if (!m[r].is_zero()) std::cout << r << "\t" << m[r].to_string() << "\n";
}

int emit_check(const std::string& name, bool pass, const Options& o, const Json& extra = Json::object()) {
  if (o.json) {
    Json j = {{"check", name}, {"pass", pass}};
    for (const auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << name << ": " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int run_ma(const std::string& text, const Options& o) {
  CPoly c = CPoly::parse(text);
  print_mould(ma(c, o.max_depth), o.json);
  return 0;
}

int run_bracket(int two_j, int two_k, const Options& o) {
  int W = o.max_weight_set ? o.max_weight : -1;
  PolyMould m = eps_bracket_mould(two_j, two_k, W);
  if (o.json)
    std::cout << Json{{"pair", {two_j, two_k}}, {"weight", two_j + two_k + 1}, {"depth2", m[2].to_string()}, {"mould", to_json(m)}}.dump()
              << "\n";
  else
    std::cout << m[2].to_string() << "\n";
  return 0;
}

int run_check(const std::string& kind, const std::string& file, const std::string& series, const Options& o) {
  if (kind == "lie") {
    if (series.empty()) throw UsageError("check lie needs --series");
    return emit_check(kind, is_lie(NCPoly::parse(series)), o);
  }
  if (file.empty()) throw UsageError("check " + kind + " needs --mould-file");
  bool poly = false;
  RatMould m = load_mould(file, &poly);
  if (kind == "alternal") {
    ShuffleFailure f{};
    bool ok = is_alternal(m, &f);
    Json extra = ok ? Json::object() : Json{{"depth", f.depth}, {"split", f.split}};
    return emit_check(kind, ok, o, extra);
  }
  if (kind == "bialternal") {
    BialternalReport rep = bialternality(m);
    Json kappa = Json::array();
    for (const auto& k : rep.kappa) kappa.push_back(k.get_str());
    return emit_check(kind, rep.ok(), o,
                      {{"alternal", rep.alternal}, {"swap_alternal_up_to_constants", rep.swap_alternal_up_to_constants}, {"kappa", kappa}});
  }
  if (kind == "delta-bialternal") {
    if (!poly) throw UsageError("delta-bialternal needs a polynomial mould");
    return emit_check(kind, is_delta_bialternal(load_poly_mould(file)), o);
  }
  if (kind == "push-invariant") return emit_check(kind, is_push_invariant(m), o);
  if (kind == "push-neutral") return emit_check(kind, is_push_neutral(m), o);
  throw UsageError("unknown check " + kind);
}

int run_dims(const std::string& kind, const Options& o) {
  if (kind == "rank-table") {
    auto table = eps_bracket_rank_table(o.max_weight, o.jobs);
    if (o.json) {
      Json rows = Json::array();
      for (const auto& r : table) {
        Json pairs = Json::array();
        for (auto [j, k] : r.pairs) pairs.push_back({j, k});
        rows.push_back({{"n", r.n},
                        {"pairs", pairs},
                        {"brackets", r.brackets},
                        {"rank", r.rank},
                        {"relations", r.relations},
                        {"formula_brackets", r.formula_brackets},
                        {"formula_rank", r.formula_rank},
                        {"formula_relations", r.formula_relations}});
      }
      std::cout << rows.dump() << "\n";
    } else {
      std::cout << "n\tbrackets\trank\trelations\tformula_brackets\tformula_rank\tformula_relations\n";
      for (const auto& r : table)
        std::cout << r.n << "\t" << r.brackets << "\t" << r.rank << "\t" << r.relations << "\t" << r.formula_brackets << "\t"
                  << r.formula_rank << "\t" << r.formula_relations << "\n";
    }
    return 0;
  }
  if (kind != "eds2" && kind != "fs2") throw UsageError("unknown table " + kind);
  Json rows = Json::array();
  if (!o.json) std::cout << "n\tdim\tformula\tmatches\n";
  for (int n = 5; n <= o.max_weight; n += 2) {
    DimensionReport d = kind == "eds2" ? eds2_space(n) : fs2_space(n);
    if (o.json) {
      Json basis = Json::array();
      for (const auto& b : d.basis) basis.push_back(b.to_string());
      rows.push_back({{"n", n}, {"dim", d.dim}, {"formula", d.formula}, {"matches", d.matches}, {"basis", basis}});
    } else {
      std::cout << n << "\t" << d.dim << "\t" << d.formula << "\t" << (d.matches ? "yes" : "no") << "\n";
    }
  }
  if (o.json) std::cout << rows.dump() << "\n";
  return 0;
}

void print_series(const QSeriesL& s, bool json) {
  if (json) {
    std::cout << to_json(s).dump() << "\n";
    return;
  }
  std::cout << "n,m,coefficient\n";
  for (const auto& t : s.nonzero_terms()) std::cout << t.n << "," << t.m << "," << t.c.get_str() << "\n";
}

int run_eisenstein(const std::string& kind, int k, const std::string& index, const Options& o) {
  if (kind == "gseries") {
    if (k < 0) throw UsageError("gseries needs --k >= 0");
    print_series(eisenstein_q(k, o.q_order), o.json);
    return 0;
  }
  if (kind == "iter") {
    IterEisCache cache(o.q_order);
    print_series(cache.get(parse_index(index)), o.json);
    return 0;
  }
  if (kind == "rank") {
    auto fam = indices_up_to_weight(o.max_weight);
    int M = 0;
    for (const auto& i : fam) M = std::max(M, static_cast<int>(i.size()));
    RankCheck rc = rank_check(fam, o.q_order, M);
    bool pass = rc.rank == static_cast<int>(fam.size());
    if (!pass) std::cerr << "mouldkit: independence not certified at q-order " << o.q_order << "; a larger --q-order may separate the family\n";
    return emit_check("eisenstein-rank", pass, o,
                      {{"rank", rc.rank}, {"family", fam.size()}, {"slots", rc.slots}, {"truncation_too_small", rc.truncation_too_small}});
  }
  throw UsageError("unknown eisenstein verb " + kind);
}

int run_verify(const std::string& what, const Options& o) {
  if (what != "paper") throw UsageError("verify expects 'paper'");
  VerifyOptions vo;
  if (o.max_weight_set) vo.weight_cap = o.max_weight;
  PaperReport rep = verify_paper_examples(vo);
  if (o.json) {
    Json items = Json::array();
    for (const auto& it : rep.items)
      items.push_back({{"item", it.item}, {"expected_source", it.expected_source}, {"pass", it.pass}, {"sigma", rep.sigma}, {"detail", it.detail}});
    std::cout << Json{{"pass", rep.all_pass()}, {"sigma", rep.sigma}, {"seed", o.seed}, {"items", items}}.dump(2) << "\n";
  } else {
    for (const auto& it : rep.items)
      std::cout << (it.pass ? "pass" : "FAIL") << "\t" << it.item << "\t" << it.detail << "\n";
    std::cout << "sigma " << rep.sigma << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int run_op(const std::string& name, const std::string& p_file, const std::string& a_file, const Options& o) {
  if (p_file.empty()) throw UsageError("op needs --p");
  bool unary = name == "push" || name == "swap" || name == "dar" || name == "delta";
  if (!unary && a_file.empty()) throw UsageError("op " + name + " needs --a");
  if (name == "darit") {
    PolyMould P = load_poly_mould(p_file).truncate(o.max_depth), A = load_poly_mould(a_file).truncate(o.max_depth);
    print_mould(darit(P, A), o.json);
    return 0;
  }
  RatMould P = load_mould(p_file).truncate(o.max_depth);
  RatMould A = unary ? RatMould(0) : load_mould(a_file).truncate(o.max_depth);
  RatMould r;
  if (name == "mu") r = mu(P, A);
  else if (name == "lu") r = lu(P, A);
  else if (name == "arit") r = arit(P, A);
  else if (name == "arat") r = arat(P, A);
  else if (name == "push") r = push(P);
  else if (name == "swap") r = swap(P);
  else if (name == "dar") r = dar(P);
  else if (name == "delta") r = delta(P);
  else throw UsageError("unknown op " + name);
  auto pm = to_poly(r);
  if (pm) print_mould(*pm, o.json);
  else print_mould(r, o.json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mouldkit: exact mould calculus, elliptic double shuffle and Eisenstein integrals"};
  app.require_subcommand(1);
  Options o;
  if (const char* s = std::getenv("MOULDKIT_SEED")) o.seed = std::strtoul(s, nullptr, 10);
  app.add_flag("--json", o.json, "JSON output");
  auto* mw = app.add_option("--max-weight", o.max_weight, "weight cap")->check(CLI::PositiveNumber);
  app.add_option("--max-depth", o.max_depth, "depth cap")->check(CLI::Range(0, 15));
  app.add_option("--q-order", o.q_order, "q-expansion order")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "seed (default MOULDKIT_SEED or 20240917)");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.fallthrough();

  std::function<int()> action;

  std::string cpoly;
  auto* ma_cmd = app.add_subcommand("ma", "ma of a c-polynomial");
  ma_cmd->add_option("cpoly", cpoly, "e.g. c2*c1-c1*c2")->required();
  ma_cmd->callback([&] { action = [&] { return run_ma(cpoly, o); }; });

  int two_j = 0, two_k = 0;
  auto* br = app.add_subcommand("bracket-eps", "depth-2 mould of [eps_2j, eps_2k]");
  br->add_option("2j", two_j)->required();
  br->add_option("2k", two_k)->required();
  br->callback([&] { action = [&] { return run_bracket(two_j, two_k, o); }; });

  std::string check_kind, mould_file, series;
  auto* ck = app.add_subcommand("check", "symmetry checks");
  ck->add_option("kind", check_kind)
      ->required()
      ->check(CLI::IsMember({"alternal", "bialternal", "delta-bialternal", "push-invariant", "push-neutral", "lie"}));
  ck->add_option("--mould-file", mould_file, "mould JSON");
  ck->add_option("--series", series, "NCPoly text, for lie");
  ck->callback([&] { action = [&] { return run_check(check_kind, mould_file, series, o); }; });

  std::string dims_kind;
  auto* dm = app.add_subcommand("dims", "dimension tables");
  dm->add_option("kind", dims_kind)->required()->check(CLI::IsMember({"eds2", "fs2", "rank-table"}));
  dm->callback([&] { action = [&] { return run_dims(dims_kind, o); }; });

  std::string eis_kind, index;
  int k = -1;
  auto* es = app.add_subcommand("eisenstein", "Eisenstein series and iterated integrals");
  es->add_option("kind", eis_kind)->required()->check(CLI::IsMember({"gseries", "iter", "rank"}));
  es->add_option("--k", k, "G_{2k}");
  es->add_option("--index", index, "index like 0,2");
  es->callback([&] { action = [&] { return run_eisenstein(eis_kind, k, index, o); }; });

  std::string what;
  auto* vf = app.add_subcommand("verify", "regression report");
  vf->add_option("what", what)->required()->check(CLI::IsMember({"paper"}));
  vf->callback([&] { action = [&] { return run_verify(what, o); }; });

  std::string op_name, p_file, a_file;
  auto* op = app.add_subcommand("op", "mould operators");
  op->add_option("name", op_name)
      ->required()
      ->check(CLI::IsMember({"mu", "lu", "push", "swap", "dar", "delta", "arit", "arat", "darit"}));
  op->add_option("--p", p_file, "first mould JSON");
  op->add_option("--a", a_file, "second mould JSON");
  op->callback([&] { action = [&] { return run_op(op_name, p_file, a_file, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  o.max_weight_set = mw->count() > 0;
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "mouldkit: " << e.what() << "\n";
    return 2;
  }
}
