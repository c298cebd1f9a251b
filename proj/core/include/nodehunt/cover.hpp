#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nodehunt/lattice.hpp"

namespace nodehunt {

using Element = std::vector<int>;

/// G = Z/m1 x ... x Z/mn with elements as exponent tuples.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  int order() const;

  /// All elements in lexicographic order.
  std::vector<Element> elements() const;
  Element zero() const { return Element(orders_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, int k) const;
  int element_order(const Element& g) const;
  /// Reduces entries mod m_j; throws DimensionMismatch on a length mismatch.
  Element normalize(Element g) const;

 private:
  std::vector<int> orders_;
};

/// Exponent tuple (c_j); the value on g is sum c_j g_j / m_j in Q/Z.
struct Character {
  std::vector<int> exps;

  bool operator==(const Character&) const = default;
  auto operator<=>(const Character&) const = default;
};

Character trivial_character(const AbelianGroup& g);
Character multiply(const AbelianGroup& g, const Character& a, const Character& b);
Character conjugate(const AbelianGroup& g, const Character& a);
/// Value in [0, 1).
mpq_class character_value(const AbelianGroup& g, const Character& chi, const Element& x);
int character_order(const AbelianGroup& g, const Character& chi);
std::vector<Character> all_characters(const AbelianGroup& g);
/// True when the subgroup generated by `chis` is the whole character group.
bool generates(const AbelianGroup& g, const std::vector<Character>& chis);

struct CyclicSubgroup {
  Element generator;
  int order = 0;
  std::vector<Element> elements;  ///< generator^j for j = 0..order-1
};

/// Cyclic subgroups of order >= 2, each generated by its lexicographically
/// least element of maximal order; sorted by order, then generator.
std::vector<CyclicSubgroup> cyclic_subgroups(const AbelianGroup& g);

/// psi_s(h^j) = s j / |H|. Generators of H* are the s coprime to |H|, ascending.
std::vector<int> character_generators(const CyclicSubgroup& h);

/// The r in [0, |H|) with chi|_H = psi_s^r. Throws NotAGenerator.
int exponent_from_restriction(const AbelianGroup& g, const Character& chi, const CyclicSubgroup& h, int psi);
/// order(chi) * r / |H|. Throws NonIntegral.
long reduced_coeff(const AbelianGroup& g, const Character& chi, const CyclicSubgroup& h, int psi);

/// 1 iff r + r' >= |H|.
int epsilon(int r, int r_prime, int order_h);
int epsilon(const AbelianGroup& g, const Character& a, const Character& b, const CyclicSubgroup& h, int psi);

struct BranchSlot {
  std::size_t subgroup = 0;  ///< index into the cyclic_subgroups list
  int psi = 1;
  std::vector<mpq_class> divisor;  ///< lattice coefficients; all zero when unused
};

struct CoverData {
  AbelianGroup group;
  std::vector<CyclicSubgroup> subgroups;
  std::vector<BranchSlot> slots;  ///< grouped by subgroup, psi ascending
  GramLattice lattice;
};

/// One zero slot per (H, generator of H*).
CoverData empty_cover(AbelianGroup g, GramLattice lattice);
/// Throws IndexOutOfRange when no slot matches.
BranchSlot& slot_for(CoverData& data, const Element& generator, int psi);

/// Coefficients grouped by subgroup, e.g. [[0],[1],[1],[0,0],[1,1]].
std::vector<std::vector<long>> coefficient_table(const CoverData& data, const Character& chi);
std::string format_table(const std::vector<std::vector<long>>& table);

/// order(chi) L - sum reduced_coeff D_{H,psi}; valid building data puts it in the radical.
std::vector<mpq_class> reduced_building_data(const CoverData& data, const Character& chi,
                                             const std::vector<mpq_class>& l_chi);

/// sum over slots of epsilon(a, b; H, psi) D_{H,psi}.
std::vector<mpq_class> epsilon_correction(const CoverData& data, const Character& a, const Character& b);

struct DerivationStep {
  Character target;
  Character left;
  Character right;
  std::vector<mpq_class> correction;
};

struct Derivation {
  std::map<Character, std::vector<mpq_class>> L;  ///< every character; the trivial one maps to 0
  std::vector<DerivationStep> steps;
  std::size_t checked_pairs = 0;
};

/// L_{ab} = L_a + L_b - epsilon_correction(a, b). Uses `plan` (target, left, right)
/// first, then fills the rest breadth first from the generators. Every pair (a, b)
/// is then checked modulo the radical; throws InconsistentData on disagreement.
Derivation derive_all_L(const CoverData& data, const std::map<Character, std::vector<mpq_class>>& generators,
                        const std::vector<std::pair<Character, std::pair<Character, Character>>>& plan = {});

/// Equality in the lattice: the difference lies in the radical.
bool numerically_equal(const GramLattice& lattice, const std::vector<mpq_class>& a, const std::vector<mpq_class>& b);

struct ChiCover {
  mpq_class total;
  std::map<Character, mpq_class> terms;  ///< 1/2 L (K + L) per nontrivial character
};

/// |G| chi(X) + sum 1/2 L_chi (K + L_chi). Needs a basis element named K; throws NonIntegral.
ChiCover chi_cover(const SurfaceInvariants& base, const CoverData& data, const std::map<Character, std::vector<mpq_class>>& L);
/// pg(X) + sum h0(K + L_chi). Throws NegativeH0.
long pg_cover(long pg_base, const std::vector<long>& h0);
/// |G| K^2 of the base; assumes K of the cover pulls back from the base.
long cover_canonical_square(long order_g, long k2_base);

Element parse_element(std::string_view text);
std::string format_element(const Element& e);

/// Cover description file:
///   group 2 4
///   base 1 1 0 0            chi K2 q pg of the base
///   slot (1,0) 1 : N1       subgroup generator, psi, divisor
///   L (1,1) : 2K - C'       generator classes
///   label (1,1) L5          optional display names
///   h0 (1,1) : 0            optional h0(K + L) inputs
///   step (0,1) = (1,1) * (1,0)   optional derivation plan
struct CoverSpec {
  CoverData data;
  SurfaceInvariants base;
  std::map<Character, std::vector<mpq_class>> generators;
  std::map<Character, std::string> labels;
  std::map<Character, long> h0;
  std::vector<std::pair<Character, std::pair<Character, Character>>> plan;

  std::string label(const Character& chi) const;
};

CoverSpec parse_cover(std::string_view text, const GramLattice& lattice);

}  // namespace nodehunt
