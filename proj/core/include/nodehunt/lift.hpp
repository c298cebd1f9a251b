#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nodehunt/error.hpp"

namespace nodehunt {

struct CrtResult {
  mpz_class residue;  ///< in [0, modulus)
  mpz_class modulus;
};

/// Chinese remaindering; residues are reduced mod their prime first.
CrtResult crt(std::span<const std::uint64_t> primes, std::span<const mpz_class> residues);

/// Rational reconstruction with balanced bounds |n|, d <= floor(sqrt(M/2)).
std::optional<mpq_class> try_ratrec(const mpz_class& a, const mpz_class& m);
mpq_class ratrec(const mpz_class& a, const mpz_class& m);

/// q mod p as an integer in [0, p); throws DivisionByZero if p divides the denominator.
std::uint64_t reduce_rational(const mpq_class& q, std::uint64_t p);

struct LiftedRational {
  mpq_class value;
  mpz_class modulus;  ///< product of the primes used for CRT
  std::size_t verified_primes = 0;
  std::optional<std::uint64_t> held_out;
};

/// CRT then ratrec. With >= 3 primes the last prime is held out of the CRT
/// and used to check the lift; on disagreement a leave-one-out (then
/// leave-two-out) sweep names suspect primes in a HeldOutMismatch error.
LiftedRational lift_rational(std::span<const std::uint64_t> primes, std::span<const mpz_class> residues);

/// Minimal sets of primes (size 1, then 2) whose removal makes the rest lift
/// consistently. Empty when no such set exists.
std::vector<std::vector<std::uint64_t>> suspect_primes(std::span<const std::uint64_t> primes,
                                                       std::span<const mpz_class> residues);

struct LiftedPair {
  mpq_class e1;  ///< a + b
  mpq_class e2;  ///< a * b
  std::optional<std::pair<mpq_class, mpq_class>> roots;  ///< ascending, when rational

  /// x0^2 - e1 x0 + e2 with denominators cleared, e.g. "6*x0^2 - 5*x0 + 1".
  std::string quadratic() const;
};

/// Lifts unordered pairs {a_i, b_i} through their elementary symmetric functions.
LiftedPair lift_unordered_pairs(std::span<const std::uint64_t> primes,
                                std::span<const std::pair<mpz_class, mpz_class>> pairs);

/// Componentwise lift of k-tuples (coordinates in the power basis of GF(p^k)).
std::vector<mpq_class> lift_extension_tuples(std::span<const std::uint64_t> primes,
                                             std::span<const std::vector<mpz_class>> tuples);

enum class ResidueKind { Integer, Pair, Tuple };

struct ResidueSystem {
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<mpz_class>> payloads;
};

/// Parses lines `p: payload`; payloads are integers, `a,b` pairs or k-tuples.
/// Validates primality, distinctness and payload arity.
ResidueSystem parse_residues(std::string_view text, ResidueKind kind, std::size_t arity = 1);

std::string format_rational(const mpq_class& q);

}  // namespace nodehunt
