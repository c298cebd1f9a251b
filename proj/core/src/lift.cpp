#include "nodehunt/lift.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nodehunt/fields.hpp"

namespace nodehunt {

namespace {

mpz_class reduce(const mpz_class& r, std::uint64_t p) {
  mpz_class out = r % mpz_class(static_cast<unsigned long>(p));
  if (out < 0) out += static_cast<unsigned long>(p);
  return out;
}

void check_shapes(std::span<const std::uint64_t> primes, std::size_t payloads) {
  if (primes.size() != payloads) {
    throw Error(Errc::DimensionMismatch, std::to_string(primes.size()) + " primes but " + std::to_string(payloads) +
                                             " residues");
  }
}

bool agrees(const mpq_class& v, std::uint64_t p, const mpz_class& r) {
  if (mpz_divisible_ui_p(v.get_den().get_mpz_t(), static_cast<unsigned long>(p))) return false;
  return mpz_class(static_cast<unsigned long>(reduce_rational(v, p))) == reduce(r, p);
}

// Lift from the primes in `use`; with >= 3 of them the last is held out.
std::optional<mpq_class> lift_subset(std::span<const std::uint64_t> primes, std::span<const mpz_class> residues,
                                     const std::vector<std::size_t>& use) {
  if (use.size() < 2) return std::nullopt;
  const std::size_t crt_count = use.size() >= 3 ? use.size() - 1 : use.size();
  std::vector<std::uint64_t> ps;
  std::vector<mpz_class> rs;
  for (std::size_t i = 0; i < crt_count; ++i) {
    ps.push_back(primes[use[i]]);
    rs.push_back(residues[use[i]]);
  }
  const auto c = crt(ps, rs);
  auto v = try_ratrec(c.residue, c.modulus);
  if (!v) return std::nullopt;
  if (crt_count < use.size() && !agrees(*v, primes[use.back()], residues[use.back()])) return std::nullopt;
  return v;
}

std::string join_sets(const std::vector<std::vector<std::uint64_t>>& sets) {
  std::string s;
  for (const auto& set : sets) {
    if (!s.empty()) s += " ";
    s += "{";
    for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + std::to_string(set[i]);
    s += "}";
  }
  return s;
}

}  // namespace

CrtResult crt(std::span<const std::uint64_t> primes, std::span<const mpz_class> residues) {
  check_shapes(primes, residues.size());
  std::set<std::uint64_t> seen;
  CrtResult out{0, 1};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (!seen.insert(p).second) throw Error(Errc::DuplicatePrime, "prime " + std::to_string(p) + " given twice");
    const mpz_class mp(static_cast<unsigned long>(p));
    const mpz_class r = reduce(residues[i], p);
    // x = x0 + M * ((r - x0) * M^{-1} mod p)
    mpz_class inv_m;
    if (mpz_invert(inv_m.get_mpz_t(), mpz_class(out.modulus % mp).get_mpz_t(), mp.get_mpz_t()) == 0) {
      throw Error(Errc::DuplicatePrime, "modulus " + std::to_string(p) + " is not coprime to the others");
    }
    mpz_class t = (r - out.residue) * inv_m % mp;
    if (t < 0) t += mp;
    out.residue += out.modulus * t;
    out.modulus *= mp;
  }
  return out;
}

std::optional<mpq_class> try_ratrec(const mpz_class& a, const mpz_class& m) {
  if (m <= 0) throw Error(Errc::DivisionByZero, "modulus must be positive");
  mpz_class bound = sqrt(mpz_class(m / 2));
  mpz_class r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    mpz_class tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g = gcd(r1, t1);
  if (g != 1) return std::nullopt;
  mpq_class out(sgn(t1) < 0 ? mpz_class(-r1) : r1, abs(t1));
  out.canonicalize();
  return out;
}

mpq_class ratrec(const mpz_class& a, const mpz_class& m) {
  auto v = try_ratrec(a, m);
  if (!v) {
    throw Error(Errc::NoReconstruction, "no fraction with |n|, d <= sqrt(M/2) matches " + a.get_str() + " mod " +
                                            m.get_str() + "; more primes needed");
  }
  return *v;
}

std::uint64_t reduce_rational(const mpq_class& q, std::uint64_t p) {
  const mpz_class mp(static_cast<unsigned long>(p));
  mpz_class den = reduce(q.get_den(), p);
  mpz_class inv_d;
  if (mpz_invert(inv_d.get_mpz_t(), den.get_mpz_t(), mp.get_mpz_t()) == 0) {
    throw Error(Errc::DivisionByZero, "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
  }
  return reduce(q.get_num() * inv_d, p).get_ui();
}

std::vector<std::vector<std::uint64_t>> suspect_primes(std::span<const std::uint64_t> primes,
                                                       std::span<const mpz_class> residues) {
  check_shapes(primes, residues.size());
  const std::size_t n = primes.size();
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t drop = 1; drop <= 2 && out.empty(); ++drop) {
    if (n < drop + 2) break;
    std::vector<bool> mask(n, false);
    std::fill(mask.end() - static_cast<std::ptrdiff_t>(drop), mask.end(), true);
    do {
      std::vector<std::size_t> keep;
      std::vector<std::size_t> dropped;
      for (std::size_t i = 0; i < n; ++i) (mask[i] ? dropped : keep).push_back(i);
      auto v = lift_subset(primes, residues, keep);
      if (!v) continue;
      bool all_disagree = true;
      for (auto i : dropped) all_disagree = all_disagree && !agrees(*v, primes[i], residues[i]);
      if (!all_disagree) continue;
      std::vector<std::uint64_t> set;
      for (auto i : dropped) set.push_back(primes[i]);
      out.push_back(std::move(set));
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LiftedRational lift_rational(std::span<const std::uint64_t> primes, std::span<const mpz_class> residues) {
  check_shapes(primes, residues.size());
  if (primes.size() < 2) throw Error(Errc::Usage, "lifting needs at least two primes");
  const std::size_t n = primes.size();
  const std::size_t crt_count = n >= 3 ? n - 1 : n;
  const auto c = crt(primes.first(crt_count), residues.first(crt_count));
  if (n < 3) {
    return {ratrec(c.residue, c.modulus), c.modulus, n, std::nullopt};
  }
  {
    std::set<std::uint64_t> seen(primes.begin(), primes.end());
    if (seen.size() != n) throw Error(Errc::DuplicatePrime, "prime " + std::to_string(primes.back()) + " given twice");
  }
  const auto v = try_ratrec(c.residue, c.modulus);
  if (v && agrees(*v, primes.back(), residues.back())) return {*v, c.modulus, n, primes.back()};

  const auto sus = suspect_primes(primes, residues);
  if (!sus.empty()) {
    throw Error(Errc::HeldOutMismatch, "held-out prime " + std::to_string(primes.back()) +
                                           " disagrees with the lift; suspect primes: " + join_sets(sus));
  }
  if (!v) {
    throw Error(Errc::NoReconstruction, "no reconstruction modulo " + c.modulus.get_str() + "; more primes needed");
  }
  throw Error(Errc::HeldOutMismatch, "held-out prime " + std::to_string(primes.back()) + " disagrees with " +
                                         v->get_str() + " and no small set of bad primes explains it");
}

std::string LiftedPair::quadratic() const {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), e1.get_den().get_mpz_t(), e2.get_den().get_mpz_t());
  const mpz_class a = l;
  const mpz_class b = mpq_class(-e1 * l).get_num();
  const mpz_class c = mpq_class(e2 * l).get_num();
  std::string s = a == 1 ? "x0^2" : a.get_str() + "*x0^2";
  if (b != 0) {
    const mpz_class mb = abs(b);
    s += (b < 0 ? " - " : " + ") + (mb == 1 ? std::string() : mb.get_str() + "*") + "x0";
  }
  if (c != 0) s += (c < 0 ? " - " : " + ") + mpz_class(abs(c)).get_str();
  return s;
}

LiftedPair lift_unordered_pairs(std::span<const std::uint64_t> primes,
                                std::span<const std::pair<mpz_class, mpz_class>> pairs) {
  check_shapes(primes, pairs.size());
  std::vector<mpz_class> s1, s2;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    s1.push_back(reduce(pairs[i].first + pairs[i].second, p));
    s2.push_back(reduce(pairs[i].first * pairs[i].second, p));
  }
  LiftedPair out;
  out.e1 = lift_rational(primes, s1).value;
  out.e2 = lift_rational(primes, s2).value;
  const mpq_class disc = out.e1 * out.e1 - 4 * out.e2;
  if (sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_num().get_mpz_t()) &&
      mpz_perfect_square_p(disc.get_den().get_mpz_t())) {
    mpq_class root(sqrt(disc.get_num()), sqrt(disc.get_den()));
    root.canonicalize();
    mpq_class lo = (out.e1 - root) / 2, hi = (out.e1 + root) / 2;
    out.roots = std::make_pair(lo, hi);
  }
  return out;
}

std::vector<mpq_class> lift_extension_tuples(std::span<const std::uint64_t> primes,
                                             std::span<const std::vector<mpz_class>> tuples) {
  check_shapes(primes, tuples.size());
  if (tuples.empty()) return {};
  const std::size_t k = tuples.front().size();
  for (const auto& t : tuples) {
    if (t.size() != k) throw Error(Errc::DimensionMismatch, "tuples of different lengths");
  }
  std::vector<mpq_class> out;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<mpz_class> col;
    for (const auto& t : tuples) col.push_back(t[j]);
    try {
      out.push_back(lift_rational(primes, col).value);
    } catch (const Error& e) {
      throw Error(e.code(), "component " + std::to_string(j) + ": " + std::string(e.message()));
    }
  }
  return out;
}

ResidueSystem parse_residues(std::string_view text, ResidueKind kind, std::size_t arity) {
  if (kind == ResidueKind::Integer) arity = 1;
  if (kind == ResidueKind::Pair) arity = 2;
  ResidueSystem rs;
  std::set<std::uint64_t> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto where = "line " + std::to_string(lineno) + ": ";
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(Errc::SyntaxError, where + "expected `p: payload`");
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      const std::string head = line.substr(0, colon);
      p = std::stoull(head, &used);
      if (head.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw Error(Errc::SyntaxError, where + "bad prime `" + line.substr(0, colon) + "`");
    }
    if (!is_prime(p)) throw Error(Errc::NonPrime, where + std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) throw Error(Errc::DuplicatePrime, where + "prime " + std::to_string(p) + " repeated");
    std::string payload = line.substr(colon + 1);
    std::replace(payload.begin(), payload.end(), ',', ' ');
    std::istringstream ps(payload);
    std::vector<mpz_class> values;
    std::string tok;
    while (ps >> tok) {
      mpz_class v;
      if (v.set_str(tok, 10) != 0) throw Error(Errc::SyntaxError, where + "bad integer `" + tok + "`");
      values.push_back(reduce(v, p));
    }
    if (values.size() != arity) {
      throw Error(Errc::SyntaxError, where + "expected " + std::to_string(arity) + " value(s), got " +
                                         std::to_string(values.size()));
    }
    rs.primes.push_back(p);
    rs.payloads.push_back(std::move(values));
  }
  return rs;
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

}  // namespace nodehunt
