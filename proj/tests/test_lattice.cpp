#include <doctest.h>

#include <random>

#include "nodehunt/lattice.hpp"

using namespace nodehunt;

namespace {

std::vector<mpq_class> qv(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Oracle: direct G * v without in_radical.
bool kills(const RatMatrix& g, const std::vector<mpq_class>& v) {
  for (std::size_t i = 0; i < g.rows(); ++i) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) s += g(i, j) * v[j];
    if (s != 0) return false;
  }
  return true;
}

// Oracle for C' / D' style templates on the fixture: a_chain = m * Cartan^{-1} x_chain,
// node a = m x / 2, and X^2 = (k * X.K - a.x) / m with X.K = k / m.
struct BareSolution {
  std::vector<long> x;
  std::vector<mpq_class> a;
  mpq_class self;
};

std::vector<BareSolution> bare_oracle(long k, long m, const std::vector<std::size_t>& support) {
  const long inv_a3[3][3] = {{3, 2, 1}, {2, 4, 2}, {1, 2, 3}};
  std::vector<BareSolution> out;
  for (int mask = 0; mask < 256; ++mask) {
    std::vector<long> x(8);
    for (int i = 0; i < 8; ++i) x[i] = (mask >> (7 - i)) & 1;
    std::vector<mpq_class> a(8);
    for (int i = 0; i < 2; ++i) a[i] = mpq_class(m * x[i], 2);
    for (int c : {2, 5})
      for (int i = 0; i < 3; ++i) {
        mpq_class s = 0;
        for (int j = 0; j < 3; ++j) s += inv_a3[i][j] * x[c + j];
        a[c + i] = s * m / 4;
      }
    bool ok = true;
    for (std::size_t i = 0; i < 8; ++i) {
      a[i].canonicalize();
      const bool in_support = std::find(support.begin(), support.end(), i) != support.end();
      if (!in_support && a[i] != 0) ok = false;
      if (a[i].get_den() != 1 || a[i] < 0) ok = false;
    }
    if (!ok) continue;
    mpq_class xk(k, m);
    xk.canonicalize();
    mpq_class ax = 0;
    for (int i = 0; i < 8; ++i) ax += a[i] * x[i];
    mpq_class self = (k * xk - ax) / m;
    if (xk.get_den() != 1 || self.get_den() != 1) continue;
    out.push_back({x, a, self});
  }
  return out;
}

CurveConstraints zero_one(const GramLattice& lat) {
  return parse_constraints("pair N1-N8 : 0 1", lat);
}

}  // namespace

TEST_CASE("fixture entries and structure") {
  const auto lat = godeaux_fixture();
  CHECK(lat.dim() == 9);
  CHECK(lat.at("N3", "N4") == 1);
  CHECK(lat.at("N5", "N6") == 0);
  CHECK(lat.at("K", "K") == 1);
  for (int i = 1; i <= 8; ++i) {
    CHECK(lat.at("K", "N" + std::to_string(i)) == 0);
    CHECK(lat.at("N" + std::to_string(i), "N" + std::to_string(i)) == -2);
  }
  CHECK(rank(lat.gram()) == 9);
  CHECK(radical(lat).empty());
  std::vector<std::size_t> nblock(8);
  for (std::size_t i = 0; i < 8; ++i) nblock[i] = i;
  CHECK(is_negative_definite(lat.block(nblock)));
  CHECK_FALSE(is_negative_definite(lat.gram()));
  const auto in = inertia(lat.gram());
  CHECK(in.positive == 1);
  CHECK(in.negative == 8);
  CHECK(in.zero == 0);
  CHECK(static_cast<long>(rank(lat.gram())) == b2({}));
  CHECK_THROWS_AS(lat.index("N9"), Error);
}

TEST_CASE("b2 formula") {
  CHECK(b2({1, 1, 0, 0}) == 9);
  CHECK(b2({1, 8, 0, 0}) == 2);
  CHECK(b2({1, 2, 0, 0}) == 8);
  CHECK(b2({2, 2, 0, 1}) == 20);
  std::mt19937 gen(5);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int t = 0; t < 100; ++t) {
    SurfaceInvariants inv{d(gen), d(gen), d(gen), 0};
    const long e = 12 * inv.chi - inv.K2;  // Noether
    CHECK(b2(inv) == e - 2 + 4 * inv.q);
  }
  CHECK(SurfaceInvariants{}.consistent());
  CHECK_FALSE(SurfaceInvariants{2, 1, 0, 0}.consistent());
}

TEST_CASE("inertia of congruent diagonal forms") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> sign(-1, 1), small(-2, 2);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 6;
    RatMatrix d(Rationals{}, n, n), p = RatMatrix::identity(Rationals{}, n);
    Inertia want;
    for (std::size_t i = 0; i < n; ++i) {
      const int s = sign(gen);
      d(i, i) = s * (1 + static_cast<int>(i));
      (s > 0 ? want.positive : s < 0 ? want.negative : want.zero) += 1;
    }
    // Unit upper triangular times a permutation is unimodular.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) p(i, j) = small(gen);
    if (n > 1) p.swap_rows(0, n - 1);
    const RatMatrix m = p.transpose() * d * p;
    const auto got = inertia(m);
    CHECK(got.positive == want.positive);
    CHECK(got.negative == want.negative);
    CHECK(got.zero == want.zero);
  }
  // Zero diagonal with off-diagonal mass: hyperbolic plane.
  const auto h = RatMatrix::from_rows(Rationals{}, {{0, 1}, {1, 0}});
  const auto hi = inertia(h);
  CHECK(hi.positive == 1);
  CHECK(hi.negative == 1);
}

TEST_CASE("divisor parsing, formatting and pairing") {
  const auto ext = godeaux_extended();
  const auto l2 = parse_divisor("2K - D' - N7", ext);
  CHECK(l2.coeffs[ext.index("K")] == 2);
  CHECK(l2.coeffs[ext.index("D'")] == -1);
  CHECK(l2.coeffs[ext.index("N7")] == -1);
  CHECK(format_divisor(l2.coeffs, ext) == "2K - D' - N7");
  CHECK(format_divisor(parse_divisor("1/2 N1 + N2", ext).coeffs, ext) == "1/2 N1 + N2");
  CHECK(format_divisor(parse_divisor("2*K - 2K", ext).coeffs, ext) == "0");
  CHECK_THROWS_AS(parse_divisor("2K + X", ext), Error);
  CHECK_THROWS_AS(parse_divisor("2K N1", ext), Error);
  CHECK_THROWS_AS(parse_divisor("", ext), Error);

  const auto k = basis_class(ext, "K");
  CHECK(pairing(ext, k.coeffs, k.coeffs) == 1);
  CHECK(pairing(ext, basis_class(ext, "C'").coeffs, basis_class(ext, "D'").coeffs) == 3);
  const auto l5 = parse_divisor("2K - C'", ext);
  CHECK(pairing(ext, l5.coeffs, l5.coeffs) == -2);
  CHECK_THROWS_AS(pairing(ext, qv({1}), k.coeffs), Error);
}

TEST_CASE("extended lattice contains both relations") {
  const auto ext = godeaux_extended();
  CHECK(ext.dim() == 11);
  CHECK(rank(ext.gram()) == 9);
  const auto c_rel = parse_divisor("8K - 4C' - 2N1 - N3 - 2N4 - 3N5 - 3N6 - 2N7 - N8", ext).coeffs;
  const auto d_rel = parse_divisor("4K - 2D' - N1 - N2 - N6 - 2N7 - N8", ext).coeffs;
  CHECK(kills(ext.gram(), c_rel));
  CHECK(kills(ext.gram(), d_rel));
  CHECK(in_radical(ext, c_rel));
  const auto rad = radical(ext);
  CHECK(rad.size() == 2);
  for (const auto& v : rad) CHECK(kills(ext.gram(), v));
  CHECK(canonical_relation(ext, d_rel) == d_rel);
  std::vector<mpq_class> neg;
  for (const auto& x : c_rel) neg.push_back(-2 * x);
  CHECK(canonical_relation(ext, neg) == c_rel);
}

TEST_CASE("extend_with_curve") {
  const auto lat = godeaux_fixture();
  const auto zero = extend_with_curve(lat, "Z", std::vector<mpq_class>(9, 0), 0);
  CHECK(rank(zero.gram()) == 9);
  auto rz = radical(zero);
  REQUIRE(rz.size() == 1);
  std::vector<mpq_class> e(10, 0);
  e[9] = 1;
  CHECK(rz[0] == e);

  std::vector<mpq_class> kcol(9, 0);
  kcol[8] = 1;
  const auto dup = extend_with_curve(lat, "K2", kcol, 1);
  const auto rd = radical(dup);
  REQUIRE(rd.size() == 1);
  std::vector<mpq_class> want(10, 0);
  want[8] = 1;
  want[9] = -1;
  CHECK(rd[0] == want);

  CHECK_THROWS_AS(extend_with_curve(lat, "X", qv({1, 2}), 0), Error);
  CHECK_THROWS_AS(extend_with_curve(lat, "K", kcol, 1), Error);
}

TEST_CASE("search recovers the C' relation") {
  const auto lat = godeaux_fixture();
  const auto bounds = parse_bounds("N1-N8=0:1 K=0:4 self=-2:4", lat);
  REQUIRE(bounds.ranges.size() == 10);
  CHECK(bounds.ranges[8] == std::pair<long, long>{0, 4});
  const auto found = search_relations(lat, bounds, {});
  const std::vector<long> target = {1, 0, 0, 0, 1, 1, 0, 0, 2, 2};
  const auto want = qv({-2, 0, -1, -2, -3, -3, -2, -1, 8, -4});
  bool seen = false;
  for (const auto& f : found) {
    const auto ext = extend_with_curve(lat, "C", std::vector<mpq_class>(f.pairing.begin(), f.pairing.end() - 1),
                                       f.pairing.back());
    CHECK(determinant(ext.gram()) == 0);
    for (const auto& r : f.relations) CHECK(kills(ext.gram(), r));
    if (f.pairing == target) {
      REQUIRE(f.relations.size() == 1);
      CHECK(f.relations[0] == want);
      seen = true;
    }
  }
  CHECK(seen);

  // Every degenerate box point is reported: compare counts with a determinant oracle.
  std::size_t degenerate = 0;
  for (int mask = 0; mask < 256; ++mask)
    for (long k = 0; k <= 4; ++k)
      for (long s = -2; s <= 4; ++s) {
        std::vector<mpq_class> v;
        for (int i = 0; i < 8; ++i) v.push_back((mask >> (7 - i)) & 1);
        v.push_back(k);
        if (determinant(extend_with_curve(lat, "C", v, s).gram()) == 0) ++degenerate;
      }
  CHECK(found.size() == degenerate);

  // Sampling is seeded and a subset of the exhaustive answer.
  SearchConfig sampled{7, 500, 0};
  const auto a = search_relations(lat, bounds, sampled);
  const auto b = search_relations(lat, bounds, sampled);
  CHECK(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].pairing == b[i].pairing);
  for (const auto& f : a) {
    CHECK(std::any_of(found.begin(), found.end(), [&](const FoundRelation& g) { return g.pairing == f.pairing; }));
  }
}

TEST_CASE("search edge cases") {
  const auto lat = godeaux_fixture();
  PairingBounds zeros{std::vector<std::pair<long, long>>(10, {0, 0})};
  const auto z = search_relations(lat, zeros, {});
  REQUIRE(z.size() == 1);
  REQUIRE(z[0].relations.size() == 1);
  std::vector<mpq_class> e(10, 0);
  e[9] = 1;
  CHECK(z[0].relations[0] == e);

  // Unimodular base: degenerate iff c = v^T G^{-1} v, rare in a wide box.
  const auto g = RatMatrix::from_rows(Rationals{}, {{2, 1, 0}, {1, 1, 0}, {0, 0, -1}});
  GramLattice uni({"A", "B", "E"}, g);
  const auto wide = parse_bounds("A=-9:9 B=-9:9 E=-9:9 self=-50:50", uni);
  const auto hits = search_relations(uni, wide, {3, 2000, 0});
  CHECK(hits.size() < 200);
  for (const auto& h : hits) {
    const long a = h.pairing[0], b = h.pairing[1], c = h.pairing[2];
    // G^{-1} = [[1,-1,0],[-1,2,0],[0,0,-1]]
    CHECK(h.pairing[3] == a * a - 2 * a * b + 2 * b * b - c * c);
  }

  // Degenerate base falls back to the generic nullspace.
  GramLattice deg({"A", "B"}, RatMatrix::from_rows(Rationals{}, {{0, 0}, {0, 1}}));
  const auto dh = search_relations(deg, parse_bounds("A=0:0 B=0:1 self=0:1", deg), {});
  CHECK(dh.size() == 4);

  CHECK_THROWS_AS(parse_bounds("N1=2:1", lat), Error);
  CHECK_THROWS_AS(parse_bounds("N9=0:1", lat), Error);
  CHECK_THROWS_AS(parse_bounds("N1:0:1", lat), Error);
}

TEST_CASE("templates and constraints parse") {
  const auto lat = godeaux_fixture();
  const auto t = parse_template("8K = 4C' + ?N1 + ?N3 + N2", lat);
  CHECK(t.curve == "C'");
  CHECK(t.mult == 4);
  CHECK(t.support == std::vector<std::size_t>{0, 2});
  CHECK(t.known[1] == 1);
  CHECK(t.lhs[8] == 8);
  CHECK_THROWS_AS(parse_template("8K = ?N1", lat), Error);
  CHECK_THROWS_AS(parse_template("8K 4C'", lat), Error);
  CHECK_THROWS_AS(parse_template("8K = 4C' + D'", lat), Error);
  CHECK_THROWS_AS(parse_template("8K = 4C' + 2?N1", lat), Error);

  const auto c = parse_constraints("pair N1-N8 : 0 1\nsum N3 N4 N5 : 1  # chain\nself : -2..2\npositive\nadjunction K\n", lat);
  CHECK(c.pairing_sets[0] == std::vector<long>{0, 1});
  CHECK(c.pairing_sets[8].empty());
  REQUIRE(c.sums.size() == 1);
  CHECK(c.sums[0].first == std::vector<std::size_t>{2, 3, 4});
  CHECK(c.self_set == std::vector<long>{-2, -1, 0, 1, 2});
  CHECK(c.positive);
  CHECK(c.adjunction_with == 8);
  CHECK_THROWS_AS(parse_constraints("pair N1 : x", lat), Error);
  CHECK_THROWS_AS(parse_constraints("frob N1 : 1", lat), Error);
  CHECK_THROWS_AS(parse_constraints("pair Q : 1", lat), Error);
}

TEST_CASE("bare {0,1} constraints match an independent oracle") {
  const auto lat = godeaux_fixture();
  const auto tc = parse_template("8K = 4C' + ?N1 + ?N3 + ?N4 + ?N5 + ?N6 + ?N7 + ?N8", lat);
  const auto sc = solve_curve_intersections(lat, tc, zero_one(lat));
  const auto oc = bare_oracle(8, 4, {0, 2, 3, 4, 5, 6, 7});
  CHECK(sc.size() == oc.size());
  CHECK(sc.size() > 1);
  for (const auto& s : sc) {
    const auto ext = extend_with_curve(lat, "C'", s.pairings, s.self);
    CHECK(kills(ext.gram(), s.relation));
    CHECK(s.pairings[8] == 2);
  }
  const auto paper = std::vector<mpz_class>{2, 1, 2, 3, 3, 2, 1};
  CHECK(std::any_of(sc.begin(), sc.end(), [&](const CurveSolution& s) { return s.multiplicities == paper; }));

  const auto td = parse_template("4K = 2D' + ?N1 + ?N2 + ?N6 + ?N7 + ?N8", lat);
  const auto sd = solve_curve_intersections(lat, td, zero_one(lat));
  CHECK(sd.size() == bare_oracle(4, 2, {0, 1, 5, 6, 7}).size());
  CHECK(sd.size() > 1);
}

TEST_CASE("construction constraints give unique relations") {
  const auto lat = godeaux_fixture();
  const auto td = parse_template("4K = 2D' + ?N1 + ?N2 + ?N6 + ?N7 + ?N8", lat);
  const auto cd = parse_constraints(
      "pair N1-N8 : 0 1\nsum N3 N4 N5 : 0\nsum N6 N7 N8 : 1\npositive\nadjunction K\n", lat);
  const auto sd = solve_curve_intersections(lat, td, cd);
  REQUIRE(sd.size() == 1);
  CHECK(sd[0].multiplicities == std::vector<mpz_class>{1, 1, 1, 2, 1});
  CHECK(sd[0].pairings == qv({1, 1, 0, 0, 0, 0, 1, 0, 2}));
  CHECK(sd[0].self == 2);

  const auto tc = parse_template("8K = 4C' + ?N1 + ?N3 + ?N4 + ?N5 + ?N6 + ?N7 + ?N8", lat);
  const std::string base = "pair N1-N8 : 0 1\npair N2 : 0\nsum N3 N4 N5 : 1\nsum N6 N7 N8 : 1\npositive\nadjunction K\n";
  const auto orbit = solve_curve_intersections(lat, tc, parse_constraints(base, lat));
  CHECK(orbit.size() == 4);
  const auto sc = solve_curve_intersections(lat, tc, parse_constraints(base + "pair N3 N8 : 0\n", lat));
  REQUIRE(sc.size() == 1);
  CHECK(sc[0].multiplicities == std::vector<mpz_class>{2, 1, 2, 3, 3, 2, 1});
  CHECK(sc[0].pairings == qv({1, 0, 0, 0, 1, 1, 0, 0, 2}));
  CHECK(sc[0].self == 2);
  CHECK(sc[0].relation == qv({-2, 0, -1, -2, -3, -3, -2, -1, 8, -4}));
}

TEST_CASE("inconsistent templates") {
  const auto lat = godeaux_fixture();
  CHECK_THROWS_AS(solve_curve_intersections(lat, parse_template("3K = 2D' + N1", lat), zero_one(lat)), Error);
  try {
    solve_curve_intersections(lat, parse_template("3K = 2D' + N1", lat), zero_one(lat));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoSolution);
  }
  // All pairings free and every N in the support: not determined.
  CurveConstraints open;
  open.pairing_sets.assign(9, {});
  CHECK_THROWS_AS(solve_curve_intersections(
                      lat, parse_template("8K = 4C' + ?N1 + ?N2 + ?N3 + ?N4 + ?N5 + ?N6 + ?N7 + ?N8", lat), open),
                  Error);
}

TEST_CASE("lattice text round trip") {
  const auto ext = godeaux_extended();
  const auto back = parse_lattice(format_lattice(ext));
  CHECK(back.names() == ext.names());
  CHECK(back.gram() == ext.gram());
  const auto small = parse_lattice("names: A B\n[-2, 1]\n[1, -2]\n");
  CHECK(small.names().size() == 2);
  CHECK(small.gram()(0, 1) == 1);
  CHECK_THROWS_AS(parse_lattice("names: A B\n[-2, 1]\n"), Error);
  CHECK_THROWS_AS(parse_lattice("names: A B\n[-2, 1]\n[0, -2]\n"), Error);
}
