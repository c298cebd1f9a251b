#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nodehunt/poly.hpp"

namespace nodehunt {

inline constexpr std::size_t kDefaultColumnCap = 20000;

struct PointSet {
  const FieldCtx* ctx = nullptr;
  std::vector<std::vector<Fq>> points;
  bool dedup = true;

  /// Validates a common context and dimension; removes duplicates when `dedup`.
  static PointSet make(const FieldCtx& ctx, std::vector<std::vector<Fq>> points, bool dedup = true);

  std::size_t size() const { return points.size(); }
  int nvars() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
};

/// Polynomials of a fixed degree vanishing on a point set, as an RREF basis
/// of coefficient vectors over `monomials` (descending graded-lex).
struct VanishingSystem {
  int degree = 0;
  int nvars = 0;
  bool homogeneous = false;
  std::vector<Exponents> monomials;
  std::vector<std::vector<Fq>> basis;

  std::size_t dim() const { return basis.size(); }
  std::vector<FqPoly> polys(const FieldCtx& ctx) const;
};

VanishingSystem vanishing_system(const PointSet& pts, int degree, bool homogeneous,
                                 std::size_t column_cap = kDefaultColumnCap);

struct OversampleConfig {
  int slack = 2;
  int draws = 4;
  std::uint64_t seed = 1;
  std::size_t column_cap = kDefaultColumnCap;
};

/// Intersects vanishing systems of several random draws of |monomials| + slack
/// points each.
VanishingSystem oversampled_system(const PointSet& pts, int degree, bool homogeneous, const OversampleConfig& config);

/// Ambient dimension minus the rank of the Jacobian of `gens` at `pt`.
int tangent_dim(std::span<const FqPoly> gens, std::span<const Fq> pt);

/// Points whose tangent space (for `gens`) has positive dimension.
PointSet filter_isolated(const PointSet& pts, std::span<const FqPoly> gens);

/// One point per line, whitespace-separated field elements (`#` comments).
PointSet parse_points(std::string_view text, const FieldCtx& ctx, bool dedup = true);

}  // namespace nodehunt
