#include <sstream>

#include "doctest.h"
#include "skein/annulus.hpp"
#include "skein/cli.hpp"
#include "skein/projector.hpp"
#include "skein/serialize.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& fmt = "") {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err, fmt);
  return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args) {
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("json forms of the value types") {
  CHECK(to_json(loop_value()).dump() == R"([[-2,"-1"],[2,"-1"]])");
  CHECK(to_json(RationalFn(loop_value()).inverse()).dump() == R"({"num":[[2,"-1"]],"den":[[0,"1"],[4,"1"]]})");
  CHECK(to_json(Matching::generator(3, 1)).dump() == "[[1,2],[3,4],[5,6]]");
  CHECK(to_json(FormalPoly::variable(2), "z_deg").dump() == R"([{"z_deg":2,"coeff":"1"}])");
  const ClosedMbElement c = ClosedMbElement::monomial(1, 0) - ClosedMbElement::monomial(0, 0);
  CHECK(to_json(c).dump() == R"([{"z_deg":1,"x_deg":0,"coeff":"1"},{"z_deg":0,"x_deg":0,"coeff":"-1"}])");
  const Json t = to_json(jones_wenzl(2));
  REQUIRE(t.size() == 2);
  CHECK(t[0]["coeff"] == to_json(jones_wenzl(2).terms().begin()->second));
}

TEST_CASE("e-words factor every diagram") {
  CHECK(e_word(Matching::identity(3))->empty());
  CHECK(*e_word(Matching::generator(4, 2)) == std::vector<int>{2});
  for (int n = 1; n <= 6; ++n)
    for (const auto& m : enumerate_matchings(n)) {
      const auto w = e_word(m);
      REQUIRE(w.has_value());
      TLElement x = TLElement::identity(n);
      for (int i : *w) x = x * TLElement::generator(n, i);
      CHECK(x == TLElement(m));
    }
  CHECK_FALSE(e_word(Matching::identity(9)).has_value());
  CHECK(latex(Matching::identity(9)).find("\\langle") == 0);
  CHECK(latex(jones_wenzl(2)) == "1 + \\left(\\frac{A^{2}}{A^{4} + 1}\\right) e_{1}");
}

TEST_CASE("cli jw matches the library") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(run_json({"jw", "--n", std::to_string(n)}) == to_json(jones_wenzl(n)));
    CHECK(run_json({"jw", "--n", std::to_string(n), "--method", "constructive"}) == to_json(jones_wenzl(n)));
  }
  const Run r = run({"jw", "--n", "2", "--format", "latex"});
  CHECK(r.code == 0);
  CHECK(r.out == latex(jones_wenzl(2)) + "\n");
}

TEST_CASE("cli trace matches the library") {
  CHECK(run_json({"trace", "--surface", "mobius", "--n", "2", "--thru", "2", "--around", "0", "--trivial", "0"}).dump() ==
        R"([{"z_deg":1,"x_deg":0,"coeff":"1"},{"z_deg":0,"x_deg":0,"coeff":"-1"}])");
  for (int n = 1; n <= 4; ++n) {
    const std::string ns = std::to_string(n);
    CHECK(run_json({"trace", "--surface", "disk", "--n", ns}) == to_json(close_disk(jones_wenzl(n))));
    CHECK(run_json({"trace", "--surface", "annulus", "--n", ns}) == to_json(close_annulus(jones_wenzl(n)), "z_deg"));
    CHECK(run_json({"trace", "--surface", "mobius", "--n", ns, "--thru", "1"}) ==
          to_json(close_mobius(jones_wenzl(n), {1, n - 1, 0})));
  }
  const Run bad = run({"trace", "--surface", "mobius", "--n", "2", "--thru", "2", "--around", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("usage error") != std::string::npos);
}

TEST_CASE("cli basis, scalars and encircle") {
  const Json disk = run_json({"basis", "--n", "4"});
  CHECK(disk["count"] == 14);
  CHECK(disk["expected"] == 14);
  CHECK(disk["matchings"][0] == to_json(enumerate_matchings(4)[0]));
  const Json mb = run_json({"basis", "--surface", "mobius", "--n", "3"});
  REQUIRE(mb["families"].size() == 4);
  for (const auto& f : mb["families"]) CHECK(f["count"] == f["expected"]);
  CHECK(run_json({"basis", "--surface", "mobius", "--n", "2", "--k", "1"})["families"][0]["count"] == 4);

  const Json sc = run_json({"scalars", "--max-n", "3"});
  CHECK(sc["delta"][2]["value"] == to_json(delta(2)));
  CHECK(sc["chebyshev_second"][3]["poly"] == to_json(chebyshev(ChebyshevKind::Second, 3), "d_deg"));
  CHECK(sc["varsigma"].size() == 16);
  CHECK(sc["varsigma"][1 * 4 + 2]["value"] == to_json(varsigma(1, 2)));

  const Json enc = run_json({"encircle", "--a", "2", "--b", "2"});
  CHECK(enc["is_varsigma_times_projector"] == true);
  CHECK(enc["varsigma"] == to_json(varsigma(2, 2)));
  CHECK(enc["element"] == to_json(encircle(2, jones_wenzl(2))));
}

TEST_CASE("cli verify, formats and usage errors") {
  const Run all = run({"verify", "--suite", "all", "--max-n", "2"});
  CHECK(all.code == 0);
  const Json report = Json::parse(all.out);
  CHECK(report["passed"] == true);
  CHECK(report["suites"].size() == 8);
  CHECK(report["seed"] == verify::kDefaultSeed);
  CHECK(report == verify::to_json(verify::run_suite("all", 2)));

  const Run text = run({"verify", "--suite", "tl_relations", "--max-n", "3"}, "text");
  CHECK(text.code == 0);
  CHECK(text.out.find("tl_relations: PASS") != std::string::npos);
  CHECK(run({"verify", "--format", "latex"}).code == 2);

  const Run skipped = run({"verify", "--suite", "construction_equiv", "--max-n", "9"});
  CHECK(skipped.code == 0);
  CHECK(Json::parse(skipped.out)["skipped"] == true);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run unknown = run({"jw", "--n", "2", "--bogus"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage:") != std::string::npos);
  CHECK(run({"jw"}).code == 2);
  CHECK(run({"jw", "--n", "9", "--method", "constructive"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"jw", "--n", "2"}, "text").out == jones_wenzl(2).str() + "\n");
}

TEST_CASE("verify reports are reproducible and honest") {
  const auto a = verify::run_suite("mb_module", 4, {11, false});
  const auto b = verify::run_suite("mb_module", 4, {11, false});
  CHECK(verify::to_json(a) == verify::to_json(b));
  CHECK(a.passed());
  for (const auto& c : a.checks) CHECK_FALSE(c.certifies.empty());
  CHECK_THROWS_AS(verify::run_suite("nope", 2), std::invalid_argument);
  for (const auto& name : verify::suite_names()) {
    const auto r = verify::run_suite(name, 2);
    CHECK(r.passed());
  }
}
