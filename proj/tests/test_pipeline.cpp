#include <doctest.h>
#include <algorithm>
#include <json.hpp>

#include "nodehunt/error.hpp"
#include "nodehunt/pipeline.hpp"

using namespace nodehunt;

namespace {

std::string data(const std::string& name) { return std::string(NODEHUNT_TEST_DATA_DIR) + "/" + name; }

bool has_line(const Report& r, const std::string& section, const std::string& needle) {
  for (const auto& [name, lines] : r.sections) {
    if (name != section) continue;
    for (const auto& l : lines)
      if (l.find(needle) != std::string::npos) return true;
  }
  return false;
}

Errc code_of(const RunConfig& c) {
  try {
    run(c);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::Usage;
}

}  // namespace

TEST_CASE("fixture report") {
  const Report r = fixture_godeaux();
  CHECK(r.passed());
  CHECK(r.first_failure() == nullptr);
  CHECK(r.verdicts.size() >= 20);
  for (const auto& id : {"(a) rank", "(b) b2", "(c) C' coefficients", "(c) D' coefficients", "(d) relations",
                         "(e) L4 forms", "(f) chi", "(f) pg", "(f) K^2", "(f) b2"}) {
    CHECK_MESSAGE(std::any_of(r.verdicts.begin(), r.verdicts.end(), [&](const Verdict& v) { return v.id == id; }), id);
  }
  for (const auto& v : r.verdicts) CHECK_MESSAGE(v.pass, (v.id + ": " + v.actual));
  CHECK(has_line(r, "curve relations", "C': mult (2,1,2,3,3,2,1)"));
  CHECK(has_line(r, "L classes", "L3 = 4K - 2C' - N1 - N4 - N5 - N6 - N7"));
  CHECK(has_line(r, "cover invariants", "= -1"));

  RunConfig c;
  c.command = "fixture";
  c.fixture_name = "godeaux-2a1-2a3";
  const Report again = run(c);
  CHECK(again.text(false) == r.text(false));
  CHECK(again.json(false) == r.json(false));
  CHECK(r.text().find("[timings]") != std::string::npos);
  CHECK(r.text(false).find("[timings]") == std::string::npos);

  const auto j = nlohmann::json::parse(r.json());
  CHECK(j["status"] == "pass");
  CHECK(j["verdicts"].size() == r.verdicts.size());
  CHECK(j.contains("timings_ms"));
}

TEST_CASE("hunt on the Hesse pencil") {
  RunConfig c;
  c.command = "hunt";
  c.family_path = data("hesse.txt");
  c.field = "7";
  c.trials = 50;
  c.seed = 1;
  c.classify = true;
  const Report r = run(c);
  CHECK(r.passed());
  REQUIRE(r.sections.size() >= 1);
  const auto& members = r.sections[0].second;
  REQUIRE(members.size() == 3);
  CHECK(members[0].rfind("(1) | 3A1 | ", 0) == 0);
  CHECK(members[1].rfind("(2) | 3A1 | ", 0) == 0);
  CHECK(members[2].rfind("(4) | 3A1 | ", 0) == 0);
  CHECK(has_line(r, "members", "(1:1:1)"));

  c.threads = 4;
  CHECK(run(c).text(false) == r.text(false));
  c.seed = 9;
  CHECK(run(c).section("members") == r.sections[0].second);  // full scan: seed does not matter
}

TEST_CASE("lift reports") {
  RunConfig c;
  c.command = "lift";
  c.residues_path = data("demo_residues.txt");
  const Report r = run(c);
  CHECK(r.passed());
  CHECK(has_line(r, "lift", "value: -355/113"));
  CHECK(has_line(r, "lift", "held-out prime: 1000039"));

  c.residues_path = data("corrupt_residues.txt");
  const Report bad = run(c);
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.first_failure() != nullptr);
  CHECK(bad.first_failure()->id == "lift.held-out");
  CHECK(has_line(bad, "lift", "1000033"));

  c.residues_path = data("pairs_residues.txt");
  c.pairs = true;
  const Report p = run(c);
  CHECK(p.passed());
  CHECK(has_line(p, "lift", "quadratic: 6*x0^2 - 5*x0 + 1"));
  CHECK(has_line(p, "lift", "roots: {1/3, 1/2}"));
}

TEST_CASE("interpolate a conic") {
  RunConfig c;
  c.command = "interpolate";
  c.points_path = data("conic_gf7.txt");
  c.field = "7";
  c.degree = 2;
  const Report r = run(c);
  CHECK(r.passed());
  const auto& polys = r.sections[0].second;
  REQUIRE(polys.size() == 1);
  CHECK(polys[0] == "x0^2 + x1*x2");

  c.slack = 3;
  c.seed = 5;
  const Report o = run(c);
  CHECK(o.sections[0].second == polys);
}

TEST_CASE("classify subcommand") {
  RunConfig c;
  c.command = "classify";
  c.poly = "x0^3 + x1^3 + x2^3 + x0*x1*x2";
  c.field = "7";
  const Report r = run(c);
  CHECK(has_line(r, "summary", "signature: 3A1"));

  c.poly = "x1^2*x2 - x0^3";
  c.field = "Q";
  c.point = "(0:0:1)";
  CHECK(has_line(run(c), "summary", "signature: 1A2"));

  c.point.clear();
  CHECK(code_of(c) == Errc::Usage);
}

TEST_CASE("lattice subcommands") {
  RunConfig c;
  c.command = "lattice-solve";
  c.lattice_path = data("godeaux_base.txt");
  c.template_path = data("c_template.txt");
  c.constraints_path = data("c_constraints.txt");
  const Report s = run(c);
  CHECK(s.passed());
  CHECK(has_line(s, "summary", "solutions: 1 (unique)"));
  CHECK(has_line(s, "solutions", "multiplicities (2,1,2,3,3,2,1)"));

  RunConfig q;
  q.command = "lattice-search";
  q.lattice_path = data("godeaux_base.txt");
  q.bounds = "N1-N8=0:1 K=0:4 self=-2:4";
  const Report f = run(q);
  CHECK(f.passed());
  CHECK(has_line(f, "relations", "(1,0,0,0,1,1,0,0,2,2) | 8K - 2N1 - N3 - 2N4 - 3N5 - 3N6 - 2N7 - N8 - 4C = 0"));
}

TEST_CASE("cover subcommands") {
  RunConfig c;
  c.command = "cover-verify";
  c.lattice_path = data("godeaux_extended.txt");
  c.cover_path = data("godeaux_cover.txt");
  const Report v = run(c);
  CHECK(v.passed());
  CHECK(has_line(v, "coefficient tables", "[[0],[1],[1],[0,0],[1,1]]"));
  CHECK(has_line(v, "coefficient tables", "[[2],[2],[0],[1,3],[3,1]]"));

  c.command = "cover-invariants";
  const Report i = run(c);
  CHECK(i.passed());
  CHECK(has_line(i, "invariants", "chi = 1"));
  CHECK(has_line(i, "invariants", "p_g = 0"));
  CHECK(has_line(i, "invariants", "K^2 = 8"));
  CHECK(has_line(i, "invariants", "b2 = 2"));
}

TEST_CASE("errors carry context") {
  RunConfig c;
  c.command = "hunt";
  c.family_path = data("missing.txt");
  c.field = "7";
  CHECK(code_of(c) == Errc::Usage);

  c.family_path = data("c_template.txt");
  try {
    run(c);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("c_template.txt") != std::string::npos);
  }

  c.family_path = data("hesse.txt");
  c.field = "8";
  CHECK(code_of(c) == Errc::NonPrime);

  RunConfig f;
  f.command = "fixture";
  f.fixture_name = "nope";
  CHECK(code_of(f) == Errc::Usage);
  f.command = "frobnicate";
  CHECK(code_of(f) == Errc::Usage);
}

TEST_CASE("arity inference") {
  CHECK(infer_arity("x0^3 + x1^3 + x2^3 + p1*x0*x1*x2") == std::pair<int, int>{3, 1});
  CHECK(infer_arity("x3 + p2") == std::pair<int, int>{4, 2});
  CHECK(infer_arity("1") == std::pair<int, int>{0, 0});
}
