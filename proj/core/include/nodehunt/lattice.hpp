#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nodehunt/exactla.hpp"

namespace nodehunt {

/// Named basis with a symmetric rational Gram matrix of intersection numbers.
class GramLattice {
 public:
  GramLattice() = default;
  GramLattice(std::vector<std::string> names, RatMatrix gram);

  const std::vector<std::string>& names() const { return names_; }
  const RatMatrix& gram() const { return gram_; }
  std::size_t dim() const { return names_.size(); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownName.
  std::size_t index(std::string_view name) const;
  const mpq_class& at(std::string_view a, std::string_view b) const { return gram_(index(a), index(b)); }

  /// Principal submatrix on the given basis indices.
  RatMatrix block(const std::vector<std::size_t>& indices) const;

 private:
  std::vector<std::string> names_;
  RatMatrix gram_;
};

/// Matrix text format preceded by a `names: N1 N2 ... K` line.
GramLattice parse_lattice(std::string_view text);
std::string format_lattice(const GramLattice& lattice);

struct DivisorClass {
  std::vector<mpq_class> coeffs;
  std::string name;
};

/// Parses expressions such as "2K - D' - N7" or "1/2 N1 + N2" against the basis names.
DivisorClass parse_divisor(std::string_view text, const GramLattice& lattice);
std::string format_divisor(const std::vector<mpq_class>& coeffs, const GramLattice& lattice);
DivisorClass basis_class(const GramLattice& lattice, std::string_view name);

mpq_class pairing(const GramLattice& lattice, const std::vector<mpq_class>& u, const std::vector<mpq_class>& v);
/// True when v pairs to zero with every basis vector.
bool in_radical(const GramLattice& lattice, const std::vector<mpq_class>& v);

/// Primitive integer vector; sign fixed by a positive K coefficient when the
/// basis has a "K" and the coefficient is nonzero, else the first nonzero entry.
std::vector<mpq_class> canonical_relation(const GramLattice& lattice, std::vector<mpq_class> v);
std::vector<std::vector<mpq_class>> radical(const GramLattice& lattice);

GramLattice extend_with_curve(const GramLattice& lattice, std::string name, const std::vector<mpq_class>& pairings,
                              const mpq_class& self);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Sylvester inertia by exact symmetric elimination.
Inertia inertia(const RatMatrix& symmetric);
/// Leading principal minors alternate in sign starting negative.
bool is_negative_definite(const RatMatrix& symmetric);

struct SurfaceInvariants {
  long chi = 1;
  long K2 = 1;
  long q = 0;
  long pg = 0;

  bool consistent() const { return chi == 1 - q + pg; }
};

/// 12 chi - K^2 + 4 q - 2.
long b2(const SurfaceInvariants& inv);

/// The lattice {N1..N8, K}: two nodes, two A3 chains and the canonical class.
GramLattice godeaux_fixture();
/// The fixture extended by C' and D' with their derived pairings.
GramLattice godeaux_extended();

// Random search for a hypothetical curve C with numerically dependent classes.

struct PairingBounds {
  /// One range per basis element, then one for C^2.
  std::vector<std::pair<long, long>> ranges;
};

/// Parses "N1-N8=0:1 K=0:4 self=-2:4"; unspecified entries use [lo, hi] = `fallback`.
PairingBounds parse_bounds(std::string_view text, const GramLattice& lattice,
                           std::pair<long, long> fallback = {-2, 8});

struct SearchConfig {
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
  std::uint64_t exhaustive_limit = 100000;
};

struct FoundRelation {
  std::vector<long> pairing;  ///< pairings with the basis, then C^2
  std::vector<std::vector<mpq_class>> relations;
};

/// Emits the pairing vectors (within bounds) whose extended lattice has a
/// nonzero radical. The box is scanned exhaustively when it has at most
/// `exhaustive_limit` points. Sorted and deduplicated.
std::vector<FoundRelation> search_relations(const GramLattice& lattice, const PairingBounds& bounds,
                                            const SearchConfig& config, const std::string& curve_name = "C");

// Constrained solving of a relation template with one unknown curve.

/// lhs = mult * X + sum_{i in support} a_i * e_i + known, with X a new curve.
struct RelationTemplate {
  std::vector<mpq_class> lhs;
  std::vector<mpq_class> known;
  std::string curve;
  mpq_class mult = 1;
  std::vector<std::size_t> support;
};

/// Parses "8K = 4C' + ?N1 + ?N3 + N2"; `?` marks an unknown multiplicity.
RelationTemplate parse_template(std::string_view text, const GramLattice& lattice);

struct CurveConstraints {
  /// Allowed values of X . e_j; empty vector means unconstrained (solved for).
  std::vector<std::vector<long>> pairing_sets;
  std::vector<std::pair<std::vector<std::size_t>, std::vector<long>>> sums;
  std::optional<std::vector<long>> self_set;
  bool positive = false;  ///< a_i >= 1 instead of a_i >= 0
  /// Requires X^2 + X.K even (X a smooth curve) for this basis index.
  std::optional<std::size_t> adjunction_with;
};

/// Reads lines `pair <names> : <values>`, `sum <names> : <values>`,
/// `self : <values>`, `positive`, `adjunction <name>`.
CurveConstraints parse_constraints(std::string_view text, const GramLattice& lattice);

struct CurveSolution {
  std::vector<mpq_class> pairings;  ///< X . e_j
  mpq_class self;
  std::vector<mpz_class> multiplicities;  ///< in template support order
  std::vector<mpq_class> relation;        ///< in the extended basis
};

/// Enumerates all constrained pairing assignments and keeps those for which
/// the template is a relation in the extended lattice. Throws NoSolution.
std::vector<CurveSolution> solve_curve_intersections(const GramLattice& lattice, const RelationTemplate& tmpl,
                                                     const CurveConstraints& constraints);

}  // namespace nodehunt
