// Exercises the installed command-line surface end to end: file formats,
// determinism, exit codes and the machine-parseable error objects.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "json.hpp"
#include "sdp/io.hpp"
#include "sdp/symbolic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path workdir() {
  const char* env = std::getenv("SDP_WORKDIR");
  fs::path p = env ? fs::path(env) : fs::temp_directory_path() / "sdp_cli_scratch";
  fs::create_directories(p);
  return p;
}

std::string cli_path() {
  const char* env = std::getenv("SDP_CLI");
  REQUIRE_MESSAGE(env != nullptr, "SDP_CLI must point at the built binary");
  return env;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  fs::path out = workdir() / "stdout.txt";
  fs::path err = workdir() / "stderr.txt";
  std::string cmd = cli_path() + " " + args + " > " + out.string() + " 2> " + err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("validate-group") {
  fs::path dir = workdir();
  sdp::io::save_group(sdp::symmetric_group(3), (dir / "s3.json").string());
  auto r = run("validate-group --group " + (dir / "s3.json").string());
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["order"] == 6);
  CHECK(j["abelian"] == false);

  sdp::io::save_json(json{{"order", 2}, {"table", {{0, 1}, {1, 1}}}}, (dir / "bad.json").string());
  auto bad = run("validate-group --group " + (dir / "bad.json").string());
  CHECK(bad.exit_code == 1);
  json e = json::parse(bad.err);
  CHECK(e["error"] == "NoInverse");
  CHECK(e["details"]["element"] == 1);
}

TEST_CASE("check-system and build-sdp") {
  fs::path dir = workdir();
  sdp::io::save_system(fx::s3_system(), (dir / "sys.json").string());
  auto r = run("check-system --system " + (dir / "sys.json").string());
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["normalized"] == true);
  CHECK(j["order"] == 6);

  auto b = run("build-sdp --system " + (dir / "sys.json").string() + " --out " +
               (dir / "table.json").string());
  CHECK(b.exit_code == 0);
  json t = sdp::io::load_json((dir / "table.json").string());
  CHECK(t["associative"] == true);
  CHECK(t["order"] == 6);
  CHECK(t["table"].size() == 6);

  // Klein four group from the trivial system on (Z2, Z2)
  sdp::io::save_system(sdp::trivial_system({sdp::cyclic_group(2), sdp::cyclic_group(2)}),
                       (dir / "klein.json").string());
  auto kb = run("build-sdp --system " + (dir / "klein.json").string() + " --out " +
                (dir / "klein_table.json").string());
  CHECK(kb.exit_code == 0);
  json kt = sdp::io::load_json((dir / "klein_table.json").string());
  CHECK(kt["table"] == json(sdp::klein_group().rows()));

  // a sabotaged system still emits a table, flagged non-associative
  sdp::io::save_system(fx::sabotaged_system(), (dir / "sab.json").string());
  auto sb = run("build-sdp --system " + (dir / "sab.json").string() + " --out " +
                (dir / "sab_table.json").string());
  CHECK(sb.exit_code == 0);
  CHECK(sdp::io::load_json((dir / "sab_table.json").string())["associative"] == false);
}

TEST_CASE("mul and table") {
  fs::path dir = workdir();
  sdp::io::save_system(fx::s3_system(), (dir / "sys.json").string());
  auto r = run("mul --system " + (dir / "sys.json").string() + " --lhs [1,1] --rhs [1,0]");
  CHECK(r.exit_code == 0);
  // (x^1 t)(x^1) = x^1 ^t(x^1) t = x^1 x^2 t = t
  CHECK(json::parse(r.out)["result"] == json::array({0, 1}));

  auto t = run("table --system " + (dir / "sys.json").string());
  CHECK(t.exit_code == 0);
  CHECK(json::parse(t.out)["order"] == 6);

  auto bad = run("mul --system " + (dir / "sys.json").string() + " --lhs [1,1,9] --rhs [1,0]");
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.err)["error"] == "ParseError");
}

TEST_CASE("check-assoc reports per-condition verdicts") {
  fs::path dir = workdir();
  sdp::io::save_system(fx::sabotaged_system(), (dir / "sab.json").string());
  auto r = run("check-assoc --system " + (dir / "sab.json").string());
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["elementary_all_hold"] == false);
  CHECK(j["brute_force"]["holds"] == false);
  CHECK(j["seed"].is_null());
  int failing = 0;
  for (const auto& row : j["elementary"])
    if (row["holds"] == false) {
      ++failing;
      CHECK(row["condition"] == "A[3,3,2]");
      CHECK(row["witness"]["lhs"] != row["witness"]["rhs"]);
    }
  CHECK(failing == 1);
}

TEST_CASE("gen-axioms") {
  auto r = run("gen-axioms --max-k 3");
  CHECK(r.exit_code == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 5);

  auto s = run("gen-axioms --max-k 5 --format structured");
  CHECK(s.exit_code == 0);
  json rows = json::parse(s.out);
  CHECK(rows.size() == 14);

  auto all = run("gen-axioms --max-k 3 --all --format structured");
  json allrows = json::parse(all.out);
  CHECK(allrows.size() > 14);

  auto unknown = run("gen-axioms --max-k 3 --frobnicate");
  CHECK(unknown.exit_code != 0);
}

TEST_CASE("gen-axioms --verify-paper succeeds and adjudicates") {
  auto r = run("gen-axioms --max-k 5 --verify-paper");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["required_exact_ok"] == true);
  CHECK(j["adjudications_ok"] == true);
  CHECK(j["rows"].size() == 14);
}

TEST_CASE("structured rows reparse to the generated conditions") {
  auto s = run("gen-axioms --max-k 4 --format structured");
  json rows = json::parse(s.out);
  auto reps = sdp::sym::canonical_representatives(4);
  REQUIRE(rows.size() == reps.size());
  for (size_t n = 0; n < reps.size(); ++n) {
    sdp::sym::Expr lhs = sdp::sym::parse_expr(rows[n]["lhs"].get<std::string>(), reps[n].k,
                                              reps[n].j, reps[n].i);
    sdp::sym::Expr rhs = sdp::sym::parse_expr(rows[n]["rhs"].get<std::string>(), reps[n].k,
                                              reps[n].j, reps[n].i);
    CHECK(lhs == reps[n].lhs);
    CHECK(rhs == reps[n].rhs);
  }
}

TEST_CASE("decompose extracts a system file") {
  fs::path dir = workdir();
  fx::S3Fixture f;
  sdp::io::save_group(f.g, (dir / "s3g.json").string());
  const int rot = fx::perm_index(f.perms, fx::cycle(3, {0, 1, 2}));
  const int flip = fx::perm_index(f.perms, fx::cycle(3, {0, 1}));
  auto r = run("decompose --group " + (dir / "s3g.json").string() + " --factors \"" +
               std::to_string(rot) + ";" + std::to_string(flip) + "\" --out " +
               (dir / "extracted.json").string());
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["is_sdp"] == true);
  CHECK(j["iterated_2sdp"] == true);
  CHECK(j["roundtrip"] == true);
  sdp::TotalSystem s = sdp::io::load_system((dir / "extracted.json").string());
  CHECK(s.product_order() == 6);

  auto bad = run("decompose --group " + (dir / "s3g.json").string() + " --factors \"" +
                 std::to_string(flip) + ";" + std::to_string(rot) + "\"");
  CHECK(bad.exit_code == 2);
  CHECK(json::parse(bad.out)["failed"] == "normality");
}

TEST_CASE("check-hom") {
  fs::path dir = workdir();
  fx::S3Fixture f;
  sdp::TotalSystem s = extract_total_system(f.cand, check_internal_sdp(f.cand));
  sdp::io::save_system(s, (dir / "hsys.json").string());
  sdp::io::save_group(f.g, (dir / "htarget.json").string());
  sdp::io::save_json(json{{"maps", {f.cand.factors[0].members, f.cand.factors[1].members}}},
                     (dir / "hmaps.json").string());
  auto r = run("check-hom --system " + (dir / "hsys.json").string() + " --target " +
               (dir / "htarget.json").string() + " --maps " + (dir / "hmaps.json").string());
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["pairwise"] == true);
  CHECK(j["brute"] == true);
  CHECK(j["commutator_criterion"]["holds"] == true);

  sdp::io::save_json(json{{"maps", {{0, 2, 1}, {0, 3}}}}, (dir / "hbad.json").string());
  auto bad = run("check-hom --system " + (dir / "hsys.json").string() + " --target " +
                 (dir / "htarget.json").string() + " --maps " + (dir / "hbad.json").string());
  CHECK(bad.exit_code == 2);
  CHECK(json::parse(bad.out)["pairwise"] == false);
}

TEST_CASE("experiment") {
  auto empty = run("experiment --count 0 --kind assoc --seed 5");
  CHECK(empty.exit_code == 0);
  json e = json::parse(empty.out);
  CHECK(e["agreement"]["pass_pass"] == 0);
  CHECK(e["disagreements"].empty());

  auto r1 = run("experiment --count 25 --shape 2,2,2 --seed 42");
  auto r2 = run("experiment --count 25 --shape 2,2,2 --seed 42");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);  // byte-identical on reruns
  json j = json::parse(r1.out);
  CHECK(j["disagreements"].empty());

  auto h = run("experiment --count 20 --shape 2,3 --kind hom --seed 9");
  CHECK(h.exit_code == 0);
  json hj = json::parse(h.out);
  CHECK(hj["disagreements"].empty());
  CHECK(hj["commutator_criterion_checked"].get<int>() > 0);
  CHECK(hj["commutator_criterion_agree"] == hj["commutator_criterion_checked"]);
}

TEST_CASE("gen-axioms output is deterministic") {
  auto a = run("gen-axioms --max-k 5 --format structured");
  auto b = run("gen-axioms --max-k 5 --format structured");
  CHECK(a.out == b.out);
}
