#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cgtk/cancellation.hpp"
#include "cgtk/dehn.hpp"
#include "cgtk/invgen.hpp"
#include "cgtk/presentation.hpp"
#include "cli.hpp"

using namespace cgtk;
using nlohmann::json;

namespace {

const std::string kData = CGTK_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json run_json(std::vector<std::string> args, int expect) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE_MESSAGE(r.code == expect, r.err);
  auto j = json::parse(r.out);
  CHECK(j["exitCode"] == expect);
  return j;
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("fnv1a digest") {
  // Published FNV-1a test vector, before the field separator is mixed in.
  cli::Fnv1a empty;
  CHECK(empty.value() == 0xcbf29ce484222325ULL);
  cli::Fnv1a a, b;
  a.add("ab");
  a.add("c");
  b.add("a");
  b.add("bc");
  CHECK(a.value() != b.value());
  CHECK(a.hex().size() == 16);
}

TEST_CASE("worked command examples") {
  auto j = run_json({"sc", "check", data("genus2.pres"), "--mu", "1/6", "--rho", "1"}, 0);
  CHECK(j["verdicts"]["pass"] == true);
  CHECK(j["result"]["rows"][0]["maxPiece"] == 1);
  CHECK(j["result"]["rows"][0]["length"] == 8);

  j = run_json({"ig", "check", data("groups/s3.grp"), "--set", "(0 1 2)"}, 1);
  REQUIRE(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0]["subgroupOrder"] == 3);
  CHECK(j["witnesses"][0]["subgroup"] == json::array({"()", "(0 1 2)", "(0 2 1)"}));

  j = run_json({"sc", "family", "--m", "1", "--mu", "1/2", "--rho", "4", "--certify"}, 0);
  REQUIRE(j["result"]["words"].size() == 2);
  CHECK(j["result"]["words"][0]["length"] == 92);
  CHECK(j["result"]["n"] == 7);
}

TEST_CASE("reports are deterministic apart from wall time") {
  const std::vector<std::vector<std::string>> cmds{
      {"sc", "check", data("torus.pres"), "--mu", "1/6"},
      {"ig", "equiv", "S4", "--samples", "20", "--seed", "5"},
      {"dehn", "decide", data("genus2.pres"), "a b a^-1 b^-1 c d c^-1 d^-1 a"},
      {"hnn", "build", data("double_hnn.hnn"), "--phi", "x=y,x'=y'", "--swap", "s=t"},
  };
  for (auto c : cmds) {
    c.push_back("--json");
    auto a = json::parse(run(c).out);
    auto b = json::parse(run(c).out);
    a.erase("wallTimeMs");
    b.erase("wallTimeMs");
    CHECK(a.dump() == b.dump());
  }
  const auto x = run_json({"sc", "pieces", data("torus.pres")}, 0);
  const auto y = run_json({"sc", "pieces", data("genus2.pres")}, 0);
  CHECK(x["inputsDigest"] != y["inputsDigest"]);
}

TEST_CASE("exit 1 reports carry replayable witnesses") {
  SUBCASE("pieces") {
    const auto j = run_json({"sc", "check", data("torus.pres"), "--mu", "1/6"}, 1);
    REQUIRE_FALSE(j["witnesses"].empty());
    const auto p = parse_presentation(slurp(data("torus.pres")));
    for (const auto& w : j["witnesses"]) {
      if (!w.contains("piece")) continue;
      const auto host = parse_word(w["piece"]["host"].get<std::string>(), p.alphabet);
      const auto other = parse_word(w["piece"]["other"].get<std::string>(), p.alphabet);
      const auto shared = parse_word(w["piece"]["shared"].get<std::string>(), p.alphabet);
      CHECK(host != other);
      CHECK(p.relators.contains(host));
      CHECK(p.relators.contains(other));
      CHECK(host.subword(0, shared.size()) == shared);
      CHECK(other.subword(0, shared.size()) == shared);
      CHECK(6 * shared.size() >= host.size());
    }
  }
  SUBCASE("k-pieces") {
    const auto j = run_json({"sc", "check", data("genus2.pres"), "--mu", "1/6", "--k-power", "a b"}, 1);
    bool seen = false;
    for (const auto& w : j["witnesses"]) {
      if (!w.contains("kPiece")) continue;
      seen = true;
      const auto arc = w["kPiece"]["arc"].get<std::string>();
      const Alphabet al{"a", "b", "c", "d"};
      CHECK(KDescriptor::cyclic_powers(parse_word("a b", al)).contains(parse_word(arc, al)));
    }
    CHECK(seen);
  }
  SUBCASE("dehn") {
    const std::string word = "a b a^-1 b^-1 c d c^-1 d^-1 a";
    const auto j = run_json({"dehn", "decide", data("genus2.pres"), word}, 1);
    CHECK(j["verdicts"]["outcome"] == "NontrivialCertified");
    const auto p = parse_presentation(slurp(data("genus2.pres")));
    std::vector<CertificateEntry> cert;
    for (const auto& e : j["witnesses"][0]["certificate"])
      cert.push_back({parse_word(e["conjugator"].get<std::string>(), p.alphabet),
                      parse_word(e["relator"].get<std::string>(), p.alphabet)});
    const auto residual = parse_word(j["witnesses"][0]["residual"].get<std::string>(), p.alphabet);
    CHECK(replay_certificate(parse_word(word, p.alphabet), cert) == residual);
    CHECK(dehn_irreducible(p, residual));
  }
  SUBCASE("invariable generation") {
    const auto j = run_json({"ig", "check", "D4", "--set", "(0 1 2 3)", "--method", "all"}, 1);
    const AnalyzedGroup g(library_group("D4"));
    const auto s = parse_element_set(g.group(), "(0 1 2 3)");
    for (const auto& w : j["witnesses"]) {
      IgVerdict v;
      v.invariably_generates = false;
      if (w["kind"] == "FailingTuple") {
        v.kind = IgWitnessKind::FailingTuple;
        for (const auto& e : w["conjugates"]) v.conjugates.push_back(g.group().index_of(Permutation::parse(e.get<std::string>(), 4)));
        for (const auto& e : w["conjugators"]) v.conjugators.push_back(g.group().index_of(Permutation::parse(e.get<std::string>(), 4)));
      } else {
        v.kind = w["kind"] == "ConjugacyCompleteSubgroup" ? IgWitnessKind::ConjugacyCompleteSubgroup
                                                          : IgWitnessKind::FixedPointFreeGap;
        ElementMask mask(g.group().order(), false);
        for (const auto& e : w["subgroup"]) mask[g.group().index_of(Permutation::parse(e.get<std::string>(), 4))] = true;
        v.subgroup = make_subgroup(g.group(), mask);
      }
      CHECK(replay(g, s, v));
    }
    CHECK(j["witnesses"].size() == 3);
  }
  SUBCASE("min") {
    const auto j = run_json({"ig", "min", data("groups/klein4.grp"), "--bound", "1"}, 1);
    CHECK(j["witnesses"].size() == 3);
    for (const auto& w : j["witnesses"]) CHECK(w["subgroupOrder"] == 2);
  }
  SUBCASE("involution") {
    const auto j = run_json({"hnn", "build", data("double_hnn.hnn"), "--phi", "x=y'", "--swap", "s=t"}, 1);
    CHECK(j["verdicts"]["involution"] == false);
    CHECK(j["witnesses"][0]["kind"] == "IncompatibleAssociations");
  }
}

TEST_CASE("every subcommand accepts --json") {
  const std::string fam = (std::filesystem::temp_directory_path() / "cgtk_cli_family.txt").string();
  const std::vector<std::pair<std::vector<std::string>, int>> cmds{
      {{"sc", "pieces", data("genus2.pres")}, 0},
      {{"sc", "check", data("genus2.pres"), "--mu", "1/6", "--rho", "8"}, 0},
      {{"sc", "family", "--m", "2", "--mu", "1/6", "--rho", "10", "--out", fam}, 0},
      {{"dehn", "reduce", data("genus2.pres"), "a b a^-1 b^-1 c d c^-1"}, 0},
      {{"dehn", "decide", data("genus2.pres"), "a b a^-1 b^-1 c d c^-1 d^-1"}, 0},
      {{"hnn", "build", data("double_hnn.hnn")}, 0},
      {{"hnn", "reduce", data("double_hnn.hnn"), "s^-1 x y' x' s"}, 0},
      {{"hnn", "hexagon", data("double_hnn.hnn"), "--phi", "x=y,x'=y'", "--xsub", "x x'", "--xi", "x x'", "--xi-prime", "x'"}, 0},
      {{"group", "lattice", data("groups/s4.grp")}, 0},
      {{"group", "classes", "Q8"}, 0},
      {{"ig", "check", data("groups/s3.grp"), "--set", "(0 1);(0 1 2)"}, 0},
      {{"ig", "min", "A4", "--bound", "2"}, 0},
      {{"ig", "equiv", data("groups/a4.grp")}, 0},
  };
  for (const auto& [c, code] : cmds) {
    const auto j = run_json(c, code);
    CHECK(j["command"] == c[0] + " " + c[1]);
    CHECK(j["inputsDigest"].get<std::string>().size() == 16);
    CHECK(j.contains("verdicts"));
    CHECK(j.contains("witnesses"));
    CHECK(j["wallTimeMs"].is_number());
  }
  const auto fam_text = slurp(fam);
  CHECK(fam_text.rfind("X^", 0) == 0);
  CHECK(std::count(fam_text.begin(), fam_text.end(), '\n') == 4);
  std::filesystem::remove(fam);

  auto j = run_json({"hnn", "reduce", data("double_hnn.hnn"), "s^-1 x y' x' s"}, 0);
  CHECK(j["result"]["stableAfter"] == 0);
  j = run_json({"group", "lattice", "S4"}, 0);
  CHECK(j["verdicts"]["subgroups"] == 30);
  j = run_json({"dehn", "reduce", data("genus2.pres"), "a b a^-1 b^-1 c d c^-1"}, 0);
  CHECK(j["result"]["residual"] == "d");
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"sc"}).code == 2);
  CHECK(run({"sc", "check", data("genus2.pres")}).code == 2);
  CHECK(run({"sc", "check", data("genus2.pres"), "--mu", "abc"}).code == 2);
  CHECK(run({"sc", "check", data("genus2.pres"), "--mu", "3/2"}).code == 2);
  CHECK(run({"sc", "check", data("missing.pres"), "--mu", "1/6"}).code == 2);
  CHECK(run({"dehn", "decide", data("genus2.pres"), "a z"}).code == 2);
  CHECK(run({"ig", "check", "S3", "--set", "(0 1"}).code == 2);
  CHECK(run({"ig", "min", "S3", "--bound", "9"}).code == 2);
  CHECK(run({"group", "classes", "NoSuchGroup"}).code == 2);
  CHECK(run({"hnn", "hexagon", data("double_hnn.hnn"), "--phi", "x=y", "--xsub", "x", "--xi", "y", "--xi-prime", "x"}).code == 2);
  const auto r = run({"sc", "check", data("genus2.pres"), "--mu", "abc"});
  CHECK_FALSE(r.err.empty());
  CHECK(run({"--help"}).code == 0);
}
