// Command-line front end: binds the group/system file formats to the library
// operations with deterministic, scriptable JSON output.  Every error path
// exits nonzero and prints a machine-parseable error object on stderr.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdp/assoc.hpp"
#include "sdp/axiom_report.hpp"
#include "sdp/error.hpp"
#include "sdp/hom.hpp"
#include "sdp/internal_sdp.hpp"
#include "sdp/io.hpp"
#include "sdp/rng.hpp"
#include "sdp/symbolic.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  bool timings = false;
  long long cap_pair = 4096;
  long long cap_brute = 512;
};

class Timer {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json witness_json(const sdp::AssocWitness& w) {
  return ordered_json{{"a", w.a}, {"b", w.b}, {"c", w.c}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

ordered_json check_json(const sdp::CheckResult& res) {
  ordered_json j{{"holds", res.holds}};
  if (res.witness) j["witness"] = witness_json(*res.witness);
  return j;
}

sdp::TotalSystem load_normalized(const std::string& path) {
  sdp::TotalSystem s = sdp::io::load_system(path);
  auto rep = sdp::check_normalized(s);
  if (!rep.ok()) {
    ordered_json v = ordered_json::array();
    for (const auto& viol : rep.violations)
      v.push_back({{"condition", viol.cond}, {"k", viol.k}, {"j", viol.j}, {"i", viol.i},
                   {"witness", viol.witness}});
    throw sdp::Error("NotNormalized", "total system violates the normalization requirements",
                     {{"violations", v}});
  }
  return s;
}

sdp::Tuple parse_tuple(const std::string& text, const sdp::TotalSystem& s) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw sdp::Error("ParseError", "tuples are JSON index lists like [0,1,0]", {{"text", text}});
  sdp::Tuple t = j.get<sdp::Tuple>();
  if (static_cast<int>(t.size()) != s.rank())
    throw sdp::Error("ParseError", "tuple length must equal the system rank",
                     {{"rank", s.rank()}, {"got", t.size()}});
  for (int i = 1; i <= s.rank(); ++i)
    if (t[static_cast<size_t>(i - 1)] < 0 ||
        t[static_cast<size_t>(i - 1)] >= s.factor(i).order())
      throw sdp::Error("ParseError", "tuple entry out of range", {{"position", i}});
  return t;
}

std::vector<int> parse_shape(const std::string& text) {
  std::vector<int> shape;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) shape.push_back(std::stoi(part));
  if (shape.empty()) throw sdp::Error("ParseError", "empty shape", {{"text", text}});
  for (int n : shape)
    if (n < 1 || n > 64)
      throw sdp::Error("ParseError", "factor orders must lie in [1, 64]", {{"order", n}});
  return shape;
}

// ---- gen-axioms ------------------------------------------------------------

int cmd_gen_axioms(int max_k, const std::string& format, bool all, bool verify,
                   std::uint64_t seed) {
  if (verify) {
    auto report = sdp::sym::verify_reference_table(max_k, seed);
    emit(report);
    if (!report["required_exact_ok"].get<bool>() || !report["adjudications_ok"].get<bool>()) {
      std::cerr << sdp::Error("PaperMismatch",
                              "generated table deviates from the bundled reference table",
                              {{"report", report}})
                       .to_json()
                       .dump(2)
                << "\n";
      return 1;
    }
    return 0;
  }

  std::vector<sdp::sym::ConditionForm> rows;
  if (all) {
    for (int k = 1; k <= max_k; ++k)
      for (int j = 1; j <= k; ++j)
        for (int i = 1; i <= j; ++i)
          for (auto& c : sdp::sym::generate_conditions(k, j, i)) rows.push_back(std::move(c));
  } else {
    rows = sdp::sym::canonical_representatives(max_k);
  }

  std::map<std::string, int> class_ids;
  auto class_of = [&](const sdp::sym::ConditionForm& c) {
    auto key = sdp::sym::similarity_key(c).repr;
    auto it = class_ids.find(key);
    if (it == class_ids.end()) it = class_ids.emplace(key, static_cast<int>(class_ids.size())).first;
    return it->second;
  };

  if (format == "structured") {
    ordered_json out = ordered_json::array();
    for (const auto& c : rows) {
      ordered_json row{{"name", c.name()},   {"k", c.k},     {"j", c.j},
                       {"i", c.i},           {"l", c.l},     {"lhs", sdp::sym::render_expr(c.lhs)},
                       {"rhs", sdp::sym::render_expr(c.rhs)}, {"vacuous", c.vacuous},
                       {"similarity_class", class_of(c)}};
      if (c.k == 2 && !all) row["prose"] = sdp::sym::render(c);
      out.push_back(std::move(row));
    }
    emit(out);
  } else {
    for (const auto& c : rows)
      std::cout << c.name() << ": " << sdp::sym::render(c)
                << "   (class " << class_of(c) << ")\n";
  }
  return 0;
}

// ---- experiment ------------------------------------------------------------

const std::vector<std::vector<sdp::Elem>>& hom_tables(const sdp::FiniteGroup& from,
                                                      const sdp::Monoid& to) {
  static std::map<std::pair<std::vector<sdp::Elem>, std::vector<sdp::Elem>>,
                  std::vector<std::vector<sdp::Elem>>>
      cache;
  std::vector<sdp::Elem> from_tab;
  for (sdp::Elem x = 0; x < from.order(); ++x)
    for (sdp::Elem y = 0; y < from.order(); ++y) from_tab.push_back(from.mul(x, y));
  auto key = std::make_pair(std::move(from_tab), to.table);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<sdp::Elem>> found;
  std::vector<sdp::Elem> f(static_cast<size_t>(from.order()), 0);
  while (true) {
    bool hom = f[static_cast<size_t>(from.identity())] == to.identity;
    for (sdp::Elem x = 0; x < from.order() && hom; ++x)
      for (sdp::Elem y = 0; y < from.order() && hom; ++y)
        hom = f[static_cast<size_t>(from.mul(x, y))] ==
              to.mul(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]);
    if (hom) found.push_back(f);
    int pos = from.order() - 1;
    while (pos >= 0 && f[static_cast<size_t>(pos)] == to.order - 1) {
      f[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++f[static_cast<size_t>(pos)];
  }
  return cache.emplace(key, std::move(found)).first->second;
}

int cmd_experiment(std::uint64_t seed, int count, const std::string& shape_text,
                   const std::string& kind, const GlobalOpts& g, const std::string& out_path) {
  auto shape = parse_shape(shape_text);
  sdp::Rng rng(seed);
  sdp::CheckOptions opt;
  opt.pair_cap = g.cap_pair;
  opt.brute_cap = g.cap_brute;

  ordered_json agreement{{"pass_pass", 0}, {"pass_fail", 0}, {"fail_pass", 0}, {"fail_fail", 0}};
  ordered_json disagreements = ordered_json::array();
  int cor_checked = 0, cor_agree = 0;

  for (int t = 0; t < count; ++t) {
    if (kind == "assoc") {
      std::vector<sdp::FiniteGroup> factors;
      for (int n : shape) factors.push_back(sdp::cyclic_group(n));
      sdp::TotalSystem s = sdp::random_normalized_system(factors, rng);
      const bool elem = sdp::all_hold(sdp::check_all_elementary(s));
      const bool brute = sdp::brute_force_associative(s, opt).holds;
      if (elem && brute)
        agreement["pass_pass"] = agreement["pass_pass"].get<int>() + 1;
      else if (elem && !brute)
        agreement["pass_fail"] = agreement["pass_fail"].get<int>() + 1;
      else if (!elem && brute)
        agreement["fail_pass"] = agreement["fail_pass"].get<int>() + 1;
      else
        agreement["fail_fail"] = agreement["fail_fail"].get<int>() + 1;
      if (elem != brute)
        disagreements.push_back({{"sample", t}, {"elementary", elem}, {"brute", brute}});
    } else {
      // associative instances: the trivial system on the shape, with random
      // per-factor maps into a small target
      std::vector<sdp::FiniteGroup> factors;
      for (int n : shape) factors.push_back(sdp::cyclic_group(n));
      sdp::TotalSystem s = sdp::trivial_system(factors);
      static const std::vector<sdp::FiniteGroup> targets = {
          sdp::cyclic_group(2), sdp::cyclic_group(4), sdp::symmetric_group(3),
          sdp::dihedral_group(4)};
      const sdp::FiniteGroup& target = targets[static_cast<size_t>(rng.below(
          static_cast<int>(targets.size())))];
      sdp::Monoid tm = target.as_monoid();

      std::vector<std::vector<sdp::Elem>> maps;
      const int flavor = rng.below(3);
      bool all_hom = true;
      for (int i = 1; i <= s.rank(); ++i) {
        const sdp::FiniteGroup& h = s.factor(i);
        std::vector<sdp::Elem> f(static_cast<size_t>(h.order()));
        if (flavor == 2) {
          const auto& homs = hom_tables(h, tm);
          f = homs[static_cast<size_t>(rng.below(static_cast<int>(homs.size())))];
        } else {
          for (sdp::Elem x = 0; x < h.order(); ++x) f[static_cast<size_t>(x)] = rng.below(tm.order);
          if (flavor == 1) f[static_cast<size_t>(h.identity())] = tm.identity;
          all_hom = false;
        }
        maps.push_back(std::move(f));
      }
      sdp::AssembledMap m = sdp::assemble(s, tm, maps);
      sdp::HomReport rep = sdp::check_hom_all(m, opt);
      if (rep.pairwise && rep.brute)
        agreement["pass_pass"] = agreement["pass_pass"].get<int>() + 1;
      else if (rep.pairwise && !rep.brute)
        agreement["pass_fail"] = agreement["pass_fail"].get<int>() + 1;
      else if (!rep.pairwise && rep.brute)
        agreement["fail_pass"] = agreement["fail_pass"].get<int>() + 1;
      else
        agreement["fail_fail"] = agreement["fail_fail"].get<int>() + 1;
      if (rep.pairwise != rep.brute)
        disagreements.push_back({{"sample", t}, {"pairwise", rep.pairwise}, {"brute", rep.brute}});
      if (all_hom) {
        ++cor_checked;
        auto cc = sdp::check_commutator_criterion(m);
        if (cc.holds == (rep.pairwise && rep.brute)) ++cor_agree;
        else
          disagreements.push_back({{"sample", t}, {"commutator", cc.holds},
                                   {"homomorphism", rep.pairwise && rep.brute}});
      }
    }
  }

  ordered_json report{{"kind", kind},        {"seed", seed},
                      {"count", count},      {"shape", shape},
                      {"agreement", agreement}, {"disagreements", disagreements}};
  if (kind == "hom") {
    report["commutator_criterion_checked"] = cor_checked;
    report["commutator_criterion_agree"] = cor_agree;
  }
  if (!out_path.empty()) sdp::io::save_json(report, out_path);
  emit(report);
  return disagreements.empty() ? 0 : 2;
}

// ---- decompose ---------------------------------------------------------------

int cmd_decompose(const std::string& group_path, const std::string& factors_text,
                  const std::string& out_path) {
  sdp::FiniteGroup g = sdp::io::load_group(group_path);
  sdp::SdpCandidate cand;
  cand.g = &g;
  std::stringstream ss(factors_text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<sdp::Elem> gens;
    std::stringstream ps(part);
    std::string num;
    while (std::getline(ps, num, ',')) gens.push_back(std::stoi(num));
    cand.factors.push_back(sdp::generated_subgroup(g, gens));
  }
  if (cand.factors.empty())
    throw sdp::Error("ParseError", "no factors given; use e.g. --factors \"1;3,4\"");

  sdp::SdpReport rep = sdp::check_internal_sdp(cand);
  ordered_json out{{"is_sdp", rep.is_sdp}};
  ordered_json flist = ordered_json::array();
  for (const auto& h : cand.factors) flist.push_back(h.members);
  out["factors"] = flist;
  if (!rep.is_sdp) {
    out["failed"] = rep.failed;
    out["failed_index"] = rep.failed_index;
    if (rep.witness) out["witness"] = *rep.witness;
  } else {
    out["iterated_2sdp"] = sdp::check_iterated_2sdp(cand);
    if (!out_path.empty()) {
      sdp::TotalSystem s = sdp::extract_total_system(cand, rep);
      sdp::io::save_system(s, out_path);
      out["system_file"] = out_path;
      out["roundtrip"] = sdp::roundtrip_verify(cand);
    }
  }
  emit(out);
  return rep.is_sdp ? 0 : 2;
}

// ---- check-assoc ---------------------------------------------------------------

int cmd_check_assoc(const std::string& system_path, const GlobalOpts& g, bool skip_brute,
                    const std::string& out_path) {
  Timer timer;
  sdp::TotalSystem s = load_normalized(system_path);
  sdp::CheckOptions opt;
  opt.pair_cap = g.cap_pair;
  opt.brute_cap = g.cap_brute;

  ordered_json conditions = ordered_json::array();
  auto all = sdp::check_all_elementary(s);
  for (const auto& [cond, res] : all) {
    ordered_json row{{"condition", "A[" + std::to_string(cond.k) + "," + std::to_string(cond.j) +
                                       "," + std::to_string(cond.i) + "]"}};
    row.update(check_json(res));
    conditions.push_back(std::move(row));
  }
  ordered_json report{{"system", system_path},
                      {"rank", s.rank()},
                      {"order", s.product_order()},
                      {"seed", nullptr},
                      {"elementary", conditions},
                      {"elementary_all_hold", sdp::all_hold(all)}};
  ordered_json phi = ordered_json::array();
  for (int k = 2; k <= s.rank(); ++k) {
    ordered_json row{{"k", k}};
    row["multiplicative"] = check_json(sdp::check_phi_multiplicative(s, k, opt));
    row["composition"] = check_json(sdp::check_phi_composition(s, k, opt));
    phi.push_back(std::move(row));
  }
  report["phi_forms"] = phi;
  if (!skip_brute) report["brute_force"] = check_json(sdp::brute_force_associative(s, opt));
  if (g.timings) report["timing_ms"] = timer.ms();
  if (!out_path.empty()) sdp::io::save_json(report, out_path);
  emit(report);
  return 0;
}

// ---- check-hom ---------------------------------------------------------------

int cmd_check_hom(const std::string& system_path, const std::string& target_path,
                  const std::string& maps_path, const GlobalOpts& g) {
  sdp::TotalSystem s = load_normalized(system_path);
  sdp::FiniteGroup target = sdp::io::load_group(target_path);
  auto maps = sdp::io::maps_from_json(sdp::io::load_json(maps_path));
  sdp::AssembledMap m = sdp::assemble(s, target.as_monoid(), maps);
  sdp::CheckOptions opt;
  opt.pair_cap = g.cap_pair;
  opt.brute_cap = g.cap_brute;

  sdp::HomReport rep = sdp::check_hom_all(m, opt);
  ordered_json pairs = ordered_json::array();
  for (const auto& [kj, res] : rep.pairs) {
    ordered_json row{{"k", kj.first}, {"j", kj.second}, {"holds", res.holds}};
    if (res.witness)
      row["witness"] = ordered_json{{"u", res.witness->u},
                                    {"v", res.witness->v},
                                    {"lhs", res.witness->lhs},
                                    {"rhs", res.witness->rhs}};
    pairs.push_back(std::move(row));
  }
  ordered_json report{{"pairwise", rep.pairwise}, {"brute", rep.brute}, {"pairs", pairs}};
  try {
    const bool assoc = sdp::brute_force_associative(s, opt).holds;
    if (assoc) {
      auto cc = sdp::check_commutator_criterion(m);
      report["commutator_criterion"] =
          ordered_json{{"holds", cc.holds}, {"simplified_checked", cc.simplified_checked}};
    } else {
      report["commutator_criterion"] = ordered_json{{"skipped", "system is not associative"}};
    }
  } catch (const sdp::Error& e) {
    report["commutator_criterion"] = ordered_json{{"skipped", e.code()}};
  }
  emit(report);
  return rep.pairwise && rep.brute ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"external r-fold semidirect products: construction and verification"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_flag("--timings", g.timings, "include wall-clock timings in reports");
  app.add_option("--cap-pair", g.cap_pair, "size cap for pairwise-domain checks");
  app.add_option("--cap-brute", g.cap_brute, "size cap for |G|^3 sweeps");

  std::string group_path, system_path, target_path, maps_path, out_path;
  std::string lhs_text, rhs_text, factors_text, shape_text = "2,2,2", format = "text";
  std::string kind = "assoc";
  int max_k = 5, count = 0;
  std::uint64_t seed = 1;
  bool all_rows = false, verify_paper = false, skip_brute = false;

  auto* validate = app.add_subcommand("validate-group", "check the group axioms of a table file");
  validate->add_option("--group", group_path, "group file")->required();

  auto* checksys = app.add_subcommand("check-system", "validate a total system and its normalization");
  checksys->add_option("--system", system_path, "system file")->required();

  auto* build = app.add_subcommand("build-sdp", "write the full multiplication table");
  build->add_option("--system", system_path, "system file")->required();
  build->add_option("--out", out_path, "output table file")->required();

  auto* mulcmd = app.add_subcommand("mul", "multiply two tuples");
  mulcmd->add_option("--system", system_path, "system file")->required();
  mulcmd->add_option("--lhs", lhs_text, "left tuple, e.g. [0,1]")->required();
  mulcmd->add_option("--rhs", rhs_text, "right tuple")->required();

  auto* tablecmd = app.add_subcommand("table", "print the multiplication table");
  tablecmd->add_option("--system", system_path, "system file")->required();

  auto* checkassoc = app.add_subcommand("check-assoc", "run the associativity checks");
  checkassoc->add_option("--system", system_path, "system file")->required();
  checkassoc->add_flag("--skip-brute", skip_brute, "skip the |G|^3 sweep");
  checkassoc->add_option("--out", out_path, "also write the report to a file");

  auto* genax = app.add_subcommand("gen-axioms", "emit the associativity axiom table");
  genax->add_option("--max-k", max_k, "largest block index")->check(CLI::Range(2, 6));
  genax->add_option("--format", format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  genax->add_flag("--all", all_rows, "every componentwise condition, not just representatives");
  genax->add_flag("--verify-paper", verify_paper,
                  "compare against the bundled reference table and adjudicate diffs");
  genax->add_option("--seed", seed, "seed for the adjudication sampler");

  auto* decompose = app.add_subcommand("decompose", "recognize an internal product decomposition");
  decompose->add_option("--group", group_path, "group file")->required();
  decompose->add_option("--factors", factors_text,
                        "semicolon-separated generator lists, e.g. \"1,2;3\"")
      ->required();
  decompose->add_option("--out", out_path, "write the extracted system here");

  auto* checkhom = app.add_subcommand("check-hom", "check an assembled per-factor map");
  checkhom->add_option("--system", system_path, "system file")->required();
  checkhom->add_option("--target", target_path, "target group file")->required();
  checkhom->add_option("--maps", maps_path, "per-factor value tables")->required();

  auto* experiment = app.add_subcommand("experiment", "seeded sampling experiments");
  experiment->add_option("--seed", seed, "sampler seed");
  experiment->add_option("--count", count, "number of sampled instances")->required();
  experiment->add_option("--shape", shape_text, "factor orders, e.g. 2,3,2");
  experiment->add_option("--kind", kind, "assoc|hom")->check(CLI::IsMember({"assoc", "hom"}));
  experiment->add_option("--out", out_path, "also write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      sdp::FiniteGroup grp = sdp::io::load_group(group_path);
      emit(ordered_json{{"valid", true},
                        {"order", grp.order()},
                        {"identity", grp.identity()},
                        {"abelian", grp.is_abelian()}});
      return 0;
    }
    if (checksys->parsed()) {
      sdp::TotalSystem s = sdp::io::load_system(system_path);
      auto rep = sdp::check_normalized(s);
      ordered_json v = ordered_json::array();
      for (const auto& viol : rep.violations)
        v.push_back({{"condition", viol.cond}, {"k", viol.k}, {"j", viol.j}, {"i", viol.i},
                     {"witness", viol.witness}});
      emit(ordered_json{{"rank", s.rank()},
                        {"order", s.product_order()},
                        {"normalized", rep.ok()},
                        {"violations", v}});
      return 0;
    }
    if (build->parsed()) {
      sdp::TotalSystem s = load_normalized(system_path);
      sdp::MuTable mt = sdp::build_mu_table(s, g.cap_brute);
      sdp::CheckOptions opt;
      opt.brute_cap = g.cap_brute;
      const bool assoc = sdp::brute_force_associative(s, opt).holds;
      std::vector<std::vector<int>> rows(static_cast<size_t>(mt.n));
      for (long long x = 0; x < mt.n; ++x)
        rows[static_cast<size_t>(x)].assign(mt.tab.begin() + x * mt.n,
                                            mt.tab.begin() + (x + 1) * mt.n);
      std::vector<int> orders;
      for (int i = 1; i <= s.rank(); ++i) orders.push_back(s.factor(i).order());
      sdp::io::save_json(
          ordered_json{{"order", mt.n}, {"factors", orders}, {"associative", assoc}, {"table", rows}},
          out_path);
      emit(ordered_json{{"order", mt.n}, {"associative", assoc}, {"out", out_path}});
      return 0;
    }
    if (mulcmd->parsed()) {
      sdp::TotalSystem s = load_normalized(system_path);
      sdp::Tuple a = parse_tuple(lhs_text, s), b = parse_tuple(rhs_text, s);
      emit(ordered_json{{"result", sdp::mu(s, a, b)}});
      return 0;
    }
    if (tablecmd->parsed()) {
      sdp::TotalSystem s = load_normalized(system_path);
      sdp::MuTable mt = sdp::build_mu_table(s, g.cap_brute);
      std::vector<std::vector<int>> rows(static_cast<size_t>(mt.n));
      for (long long x = 0; x < mt.n; ++x)
        rows[static_cast<size_t>(x)].assign(mt.tab.begin() + x * mt.n,
                                            mt.tab.begin() + (x + 1) * mt.n);
      emit(ordered_json{{"order", mt.n}, {"table", rows}});
      return 0;
    }
    if (checkassoc->parsed()) return cmd_check_assoc(system_path, g, skip_brute, out_path);
    if (genax->parsed()) return cmd_gen_axioms(max_k, format, all_rows, verify_paper, seed);
    if (decompose->parsed()) return cmd_decompose(group_path, factors_text, out_path);
    if (checkhom->parsed()) return cmd_check_hom(system_path, target_path, maps_path, g);
    if (experiment->parsed()) return cmd_experiment(seed, count, shape_text, kind, g, out_path);
  } catch (const sdp::Error& e) {
    std::cerr << e.to_json().dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << ordered_json{{"error", "Internal"}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  }
  return 0;
}
