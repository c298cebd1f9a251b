#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nodehunt/poly.hpp"

namespace nodehunt {

inline constexpr std::uint64_t kDefaultPointBudget = 2'000'000;
inline constexpr int kDefaultDegreeCap = 8;

/// Local analytic type of an isolated hypersurface singularity, as far as
/// (corank, Tjurina number) can tell.
struct LocalType {
  int corank = -1;
  std::optional<int> tjurina;
  std::optional<int> ak;  ///< k for an A_k label; empty means unclassified
  std::string diagnostic;

  std::string label() const { return ak ? "A" + std::to_string(*ak) : "U"; }
};

struct SingularPoint {
  std::vector<Fq> coords;  ///< canonical projective representative
  LocalType type;
};

struct SingularMember {
  std::vector<Fq> params;
  std::vector<SingularPoint> points;

  /// Canonical multiset label such as "2A1+2A3"; unclassified points count as "U".
  std::string signature() const;
  bool has_unclassified() const;
};

std::string signature_of(std::span<const LocalType> types);

std::string format_point(std::span<const Fq> coords);

/// Every point of P^{n-1}(GF(q)) where f and all partials vanish, in
/// enumeration order (first nonzero coordinate equal to 1).
std::vector<std::vector<Fq>> singular_points(const FqPoly& f, std::uint64_t budget = kDefaultPointBudget);

/// Number of points of P^{n-1}(GF(q)), saturating at UINT64_MAX.
std::uint64_t projective_point_count(std::uint64_t q, int n);

/// Classifies the singularity of an affine polynomial at `pt` through
/// corank of the Hessian and the Tjurina number of the truncated local algebra.
template <class D>
LocalType classify_affine(const Poly<D>& g, std::span<const typename D::value_type> pt, int degree_cap = kDefaultDegreeCap);

/// Dehomogenizes f on the chart of `pt` and classifies there.
template <class D>
LocalType classify(const Poly<D>& f, std::span<const typename D::value_type> pt, int degree_cap = kDefaultDegreeCap);

/// Tjurina number of g at the origin truncated at monomials of degree < cap.
template <class D>
int truncated_tjurina(const Poly<D>& g, int cap);

enum class HuntStrategy { RandomParams, SolveAtPoint };

struct HuntConfig {
  HuntStrategy strategy = HuntStrategy::RandomParams;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultPointBudget;
  bool classify = false;
  int degree_cap = kDefaultDegreeCap;
  unsigned threads = 1;
  /// solve-at-point only: use this x-point for every trial instead of a random one.
  std::optional<std::vector<Fq>> fixed_point;
};

/// Searches a parametric family for members with a nonempty singular locus.
/// Output is sorted by parameter point and independent of `threads`.
std::vector<SingularMember> hunt_members(const ParametricFamily& fam, const FieldCtx& field, const HuntConfig& config);

/// Exhaustive scan over every parameter point (oracle for hunt_members).
std::vector<std::vector<Fq>> scan_singular_parameters(const ParametricFamily& fam, const FieldCtx& field,
                                                      std::uint64_t budget = kDefaultPointBudget);

}  // namespace nodehunt
