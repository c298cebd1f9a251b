#include <doctest.h>

#include <random>

#include "nodehunt/fields.hpp"
#include "nodehunt/lift.hpp"

using namespace nodehunt;

namespace {

std::vector<std::uint64_t> primes_from(std::uint64_t start, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = start; out.size() < count; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

// Oracle: n * d^{-1} mod p via Fermat, independent of mpz_invert.
std::uint64_t fermat_reduce(long n, long d, std::uint64_t p) {
  auto mulmod = [p](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>((__uint128_t)a * b % p); };
  auto pm = [&](long v) { return static_cast<std::uint64_t>(((v % (long)p) + (long)p) % (long)p); };
  std::uint64_t inv = 1, base = pm(d), e = p - 2;
  while (e) {
    if (e & 1) inv = mulmod(inv, base);
    base = mulmod(base, base);
    e >>= 1;
  }
  return mulmod(pm(n), inv);
}

std::vector<mpz_class> residues_of(long n, long d, const std::vector<std::uint64_t>& ps) {
  std::vector<mpz_class> out;
  for (auto p : ps) out.push_back(static_cast<unsigned long>(fermat_reduce(n, d, p)));
  return out;
}

mpq_class q(long n, long d) {
  mpq_class v(n, d);
  v.canonicalize();
  return v;
}

}  // namespace

TEST_CASE("crt examples") {
  std::vector<std::uint64_t> ps{3, 5};
  std::vector<mpz_class> rs{1, 2};
  auto c = crt(ps, rs);
  CHECK(c.residue == 7);
  CHECK(c.modulus == 15);

  auto big = primes_from(101, 5);
  std::vector<mpz_class> zero(5, 0);
  CHECK(crt(big, zero).residue == 0);
  std::vector<mpz_class> r;
  for (auto p : big) r.push_back(123456 % p);
  CHECK(crt(big, r).residue == 123456);

  std::vector<std::uint64_t> dup{7, 7};
  std::vector<mpz_class> two{1, 1};
  CHECK_THROWS_AS(crt(dup, two), Error);
  try {
    crt(dup, two);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicatePrime);
  }
}

TEST_CASE("ratrec examples") {
  CHECK(ratrec(33, 97) == q(2, 3));
  CHECK(ratrec(5, 1000003) == 5);
  const mpz_class m = 1000003;
  CHECK(ratrec((m + 1) / 2, m) == q(1, 2));
  try {
    ratrec(8, 11);
    FAIL("expected NoReconstruction");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoReconstruction);
  }
}

TEST_CASE("ratrec agrees with exhaustive search") {
  for (long m : {97L, 101L, 211L, 1009L}) {
    const long b = static_cast<long>(std::sqrt(m / 2.0));
    for (long a = 0; a < m; ++a) {
      std::optional<mpq_class> brute;
      for (long d = 1; d <= b && !brute; ++d) {
        for (long n = -b; n <= b; ++n) {
          if (std::gcd(std::labs(n), d) != 1) continue;
          if (((n - a * d) % m + m) % m == 0) {
            brute = q(n, d);
            break;
          }
        }
      }
      auto got = try_ratrec(a, m);
      CHECK(got.has_value() == brute.has_value());
      if (got && brute) CHECK(*got == *brute);
    }
  }
}

TEST_CASE("lift rational examples") {
  std::vector<std::uint64_t> ps{101, 103, 107};
  auto l = lift_rational(ps, residues_of(-22, 7, ps));
  CHECK(l.value == q(-22, 7));
  CHECK(l.held_out == 107u);
  CHECK(l.verified_primes == 3);

  auto corrupted = residues_of(-22, 7, ps);
  corrupted[1] = (corrupted[1] + 1) % 103;
  try {
    lift_rational(ps, corrupted);
    FAIL("expected HeldOutMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HeldOutMismatch);
    CHECK(std::string(e.what()).find("103") != std::string::npos);
  }

  auto int_ps = primes_from(1000, 4);
  std::vector<mpz_class> forty_two(4, 42);
  CHECK(lift_rational(int_ps, forty_two).value == 42);
}

TEST_CASE("lift round trip") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  auto ps = primes_from(2000003, 3);
  for (int i = 0; i < 1000; ++i) {
    const long n = num(rng), d = den(rng);
    auto l = lift_rational(ps, residues_of(n, d, ps));
    CHECK(l.value == q(n, d));
  }
}

TEST_CASE("single corruption is detected and named") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  auto ps = primes_from((1ull << 31) - 1000, 6);
  int named = 0;
  for (int i = 0; i < 100; ++i) {
    const long n = num(rng), d = den(rng);
    auto rs = residues_of(n, d, ps);
    const std::size_t bad = rng() % ps.size();
    rs[bad] = (rs[bad] + 1 + rng() % (ps[bad] - 1)) % ps[bad];
    try {
      lift_rational(ps, rs);
      FAIL("corruption not detected");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::HeldOutMismatch);
    }
    auto sus = suspect_primes(ps, rs);
    if (sus.size() == 1 && sus[0] == std::vector<std::uint64_t>{ps[bad]}) ++named;
  }
  CHECK(named == 100);
}

TEST_CASE("two corruptions give a leave-two-out suspect set") {
  auto ps = primes_from(1000003, 8);
  auto rs = residues_of(31, 17, ps);
  rs[2] = (rs[2] + 5) % ps[2];
  rs[5] = (rs[5] + 9) % ps[5];
  auto sus = suspect_primes(ps, rs);
  REQUIRE(sus.size() == 1);
  CHECK(sus[0] == std::vector<std::uint64_t>{ps[2], ps[5]});
}

TEST_CASE("unordered pairs") {
  auto ps = primes_from(101, 4);
  std::vector<std::pair<mpz_class, mpz_class>> ones;
  for (std::size_t i = 0; i < ps.size(); ++i) ones.emplace_back(1, 2);
  auto a = lift_unordered_pairs(ps, ones);
  CHECK(a.e1 == 3);
  CHECK(a.e2 == 2);
  CHECK(a.quadratic() == "x0^2 - 3*x0 + 2");
  REQUIRE(a.roots);
  CHECK(a.roots->first == 1);
  CHECK(a.roots->second == 2);

  std::mt19937_64 rng(1);
  std::vector<std::pair<mpz_class, mpz_class>> halves;
  for (auto p : ps) {
    mpz_class x = static_cast<unsigned long>(fermat_reduce(1, 2, p));
    mpz_class y = static_cast<unsigned long>(fermat_reduce(1, 3, p));
    if (rng() & 1) std::swap(x, y);
    halves.emplace_back(x, y);
  }
  auto b = lift_unordered_pairs(ps, halves);
  CHECK(b.e1 == q(5, 6));
  CHECK(b.e2 == q(1, 6));
  CHECK(b.quadratic() == "6*x0^2 - 5*x0 + 1");
  REQUIRE(b.roots);
  CHECK(b.roots->first == q(1, 3));
  CHECK(b.roots->second == q(1, 2));
  auto swapped = halves;
  for (auto& pr : swapped) std::swap(pr.first, pr.second);
  auto b2 = lift_unordered_pairs(ps, swapped);
  CHECK(b2.e1 == b.e1);
  CHECK(b2.e2 == b.e2);

  // 1 +- sqrt(2): roots of x^2 - 2x - 1 mod primes where 2 is a square.
  std::vector<std::uint64_t> split;
  std::vector<std::pair<mpz_class, mpz_class>> conj;
  for (std::uint64_t p = 101; split.size() < 4; ++p) {
    if (!is_prime(p)) continue;
    std::optional<std::uint64_t> s;
    for (std::uint64_t x = 0; x < p && !s; ++x)
      if (x * x % p == 2) s = x;
    if (!s) continue;
    split.push_back(p);
    conj.emplace_back(static_cast<unsigned long>((1 + *s) % p), static_cast<unsigned long>((1 + p - *s) % p));
  }
  auto c = lift_unordered_pairs(split, conj);
  CHECK(c.quadratic() == "x0^2 - 2*x0 - 1");
  CHECK_FALSE(c.roots);
}

TEST_CASE("extension tuples") {
  auto ps = primes_from(101, 4);
  std::vector<std::vector<mpz_class>> threes(ps.size(), std::vector<mpz_class>{3, 0});
  auto t = lift_extension_tuples(ps, threes);
  CHECK(t == std::vector<mpq_class>{3, 0});

  std::vector<std::vector<mpz_class>> tuples;
  for (auto p : ps) {
    tuples.push_back({static_cast<unsigned long>(fermat_reduce(1, 2, p)),
                      static_cast<unsigned long>(fermat_reduce(-2, 5, p))});
  }
  auto u = lift_extension_tuples(ps, tuples);
  CHECK(u == std::vector<mpq_class>{q(1, 2), q(-2, 5)});

  std::vector<std::vector<mpz_class>> single;
  std::vector<mpz_class> flat;
  for (auto& tu : tuples) {
    single.push_back({tu[1]});
    flat.push_back(tu[1]);
  }
  CHECK(lift_extension_tuples(ps, single)[0] == lift_rational(ps, flat).value);
}

TEST_CASE("residue file parsing") {
  auto rs = parse_residues("# demo\n101: 5\n103: 7  # note\n\n", ResidueKind::Integer);
  CHECK(rs.primes == std::vector<std::uint64_t>{101, 103});
  CHECK(rs.payloads[1][0] == 7);
  auto pairs = parse_residues("101: 3,200\n", ResidueKind::Pair);
  CHECK(pairs.payloads[0][1] == 99);
  auto check = [](std::string_view text, ResidueKind k, Errc code) {
    try {
      parse_residues(text, k);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  check("100: 1\n", ResidueKind::Integer, Errc::NonPrime);
  check("101: 1\n101: 2\n", ResidueKind::Integer, Errc::DuplicatePrime);
  check("101 1\n", ResidueKind::Integer, Errc::SyntaxError);
  check("101: 1\n", ResidueKind::Pair, Errc::SyntaxError);
}
