#include <doctest.h>

#include <random>

#include "nodehunt/poly.hpp"

using namespace nodehunt;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

IntPoly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms, bool homogeneous) {
  IntPoly f(Integers{}, nvars);
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    Exponents e(nvars, 0);
    const int d = homogeneous ? max_deg : deg(rng);
    for (int i = 0; i < d; ++i) ++e[var(rng)];
    f.add_term(e, coeff(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("parse examples") {
  auto f = parse_family("x0^2 + x1*x2", 3, 0);
  CHECK(f.poly.size() == 2);
  CHECK(f.str() == "x0^2 + x1*x2");
  CHECK(f.homogeneous_degree == 2);

  auto hesse = parse_family("x0^3+x1^3+x2^3+p1*x0*x1*x2", 3, 1);
  CHECK(hesse.nvars == 3);
  CHECK(hesse.nparams == 1);
  CHECK(hesse.poly.size() == 4);
  CHECK(hesse.homogeneous_degree == 3);

  CHECK(parse_family("x0^2 - x0^2", 1, 0).poly.is_zero());
  CHECK(parse_family("-3*x0 + 2", 1, 0).str() == "-3*x0 + 2");
  CHECK(parse_family("  x0 ^ 2 *x1^1", 2, 0).str() == "x0^2*x1");
}

TEST_CASE("parse errors carry position and class") {
  try {
    parse_family("x0 + + x1", 2, 0);
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  try {
    parse_family("x0 + x3", 3, 0);
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownVariable);
  }
  try {
    parse_family("p0*x0", 1, 2);
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownVariable);
  }
  try {
    parse_family("x0 + y", 1, 0);
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownVariable);
  }
  CHECK_THROWS_AS(parse_family("", 1, 0), Error);
  CHECK_THROWS_AS(parse_family("x0 x1", 2, 0), Error);
}

TEST_CASE("partial derivatives") {
  auto f = parse_family("x0^2*x1", 2, 0).poly;
  CHECK(to_string(f.partial(0)) == "2*x0*x1");

  const auto& f7 = field_create(7);
  auto g = reduce_mod(parse_family("x0^7", 1, 0).poly, f7);
  CHECK(g.partial(0).is_zero());

  auto hesse = parse_family("x0^3+x1^3+x2^3+p1*x0*x1*x2", 3, 1);
  CHECK(to_string(hesse.poly.partial(1), hesse.names()) == "x0*x2*p1 + 3*x1^2");
  CHECK_THROWS_AS(f.partial(2), Error);
}

TEST_CASE("monomial basis sizes and order") {
  CHECK(monomial_basis(3, 2, DegreeMode::AtMost).size() == 10);
  CHECK(monomial_basis(3, 2, DegreeMode::Exactly).size() == 6);
  CHECK(monomial_basis(4, 8, DegreeMode::Exactly).size() == binomial(11, 8));
  CHECK(binomial(11, 8) == 165);
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d) {
      auto b = monomial_basis(n, d, DegreeMode::AtMost);
      CHECK(b.size() == binomial(n + d, d));
      for (std::size_t i = 1; i < b.size(); ++i) CHECK(grlex_greater(b[i - 1], b[i]));
    }
  auto q = monomial_basis(2, 1, DegreeMode::AtMost);
  CHECK(q == std::vector<Exponents>{{1, 0}, {0, 1}, {0, 0}});
}

TEST_CASE("specialize") {
  auto hesse = parse_family("x0^3+x1^3+x2^3+p1*x0*x1*x2", 3, 1);
  const auto& f7 = field_create(7);
  std::vector<Fq> zero{f7.zero()};
  CHECK(to_string(specialize(hesse, zero)) == "x0^3 + x1^3 + x2^3");

  std::vector<Fq> m3{f7.from_int(-3)};
  auto g = specialize(hesse, m3);
  std::vector<Fq> one(3, f7.one());
  CHECK(g.eval(one).is_zero());
  for (int i = 0; i < 3; ++i) CHECK(g.partial(i).eval(one).is_zero());

  auto plain = parse_family("x0^2 + 3*x1", 2, 0);
  std::vector<mpz_class> none;
  CHECK(specialize(plain, none) == plain.poly);

  const auto& f11 = field_create(11);
  std::vector<Fq> mixed{f7.one(), f11.one()};
  auto two = parse_family("p1*x0 + p2", 1, 2);
  CHECK_THROWS_AS(specialize(two, mixed), Error);
}

TEST_CASE("Euler relation on random homogeneous polynomials") {
  std::mt19937_64 rng(11);
  const auto& f = field_create(101);
  FiniteField dom(f);
  std::uniform_int_distribution<std::int64_t> pick(0, 100);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3, d = 1 + trial % 6;
    auto h = reduce_mod(random_poly(rng, n, d, 6, true), f);
    auto lhs = FqPoly(dom, n);
    for (int i = 0; i < n; ++i) lhs += FqPoly::variable(dom, n, i) * h.partial(i);
    CHECK(lhs == h.scaled(dom.from_int(d)));
    std::vector<Fq> x(n);
    for (auto& v : x) v = f.from_int(pick(rng));
    CHECK(lhs.eval(x) == dom.from_int(d) * h.eval(x));
  }
}

TEST_CASE("evaluation is a ring homomorphism and commutes with specialization") {
  std::mt19937_64 rng(5);
  const auto& f = field_create(97);
  std::uniform_int_distribution<std::int64_t> pick(0, 96);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = reduce_mod(random_poly(rng, 3, 4, 5, false), f);
    auto b = reduce_mod(random_poly(rng, 3, 3, 4, false), f);
    std::vector<Fq> x(3);
    for (auto& v : x) v = f.from_int(pick(rng));
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));

    ParametricFamily fam;
    fam.nvars = 2;
    fam.nparams = 2;
    fam.poly = random_poly(rng, 4, 4, 7, false);
    std::vector<Fq> params{f.from_int(pick(rng)), f.from_int(pick(rng))};
    std::vector<Fq> pt{f.from_int(pick(rng)), f.from_int(pick(rng))};
    std::vector<Fq> full{pt[0], pt[1], params[0], params[1]};
    CHECK(specialize(fam, params).eval(pt) == reduce_mod(fam.poly, f).eval(full));
  }
}

TEST_CASE("print then parse is the identity on term maps") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    ParametricFamily fam;
    fam.nvars = 1 + trial % 4;
    fam.nparams = trial % 3;
    fam.poly = random_poly(rng, fam.nvars + fam.nparams, 5, 1 + trial % 9, false);
    auto back = parse_family(fam.str(), fam.nvars, fam.nparams);
    CHECK(back.poly == fam.poly);
  }
  const auto& f = field_create(5, 2);
  auto g = parse_poly_over("(3*t+1)*x0^2 + (t)*x1 + 4", f, 2);
  CHECK(to_string(g) == "(3*t+1)*x0^2 + (t)*x1 + 4");
  CHECK(parse_poly_over(to_string(g), f, 2) == g);
}

TEST_CASE("linearity in parameters") {
  CHECK(is_linear_in_params(parse_family("x0^2 + p1*x1^2 + p2*x0*x1", 2, 2)));
  CHECK_FALSE(is_linear_in_params(parse_family("x0^2 + p1^2*x1^2", 2, 1)));
  CHECK(read_poly_lines("# header\nx0^2 + 1  # trailing\n\n  x1\n") == std::vector<std::string>{"x0^2 + 1", "x1"});
}
