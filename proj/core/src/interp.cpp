#include "nodehunt/interp.hpp"

#include <set>
#include <sstream>

#include "nodehunt/exactla.hpp"
#include "nodehunt/rng.hpp"

namespace nodehunt {

namespace {

std::vector<Exponents> monomials_for(int nvars, int degree, bool homogeneous, std::size_t cap) {
  if (degree < 0) throw Error(Errc::InvalidDegree, "interpolation degree must be nonnegative");
  auto monos = monomial_basis(nvars, degree, homogeneous ? DegreeMode::Exactly : DegreeMode::AtMost);
  if (monos.size() > cap) {
    throw Error(Errc::BudgetExceeded, std::to_string(monos.size()) + " monomials exceed the column cap of " +
                                          std::to_string(cap));
  }
  return monos;
}

std::vector<Fq> evaluation_row(const FieldCtx& ctx, const std::vector<Exponents>& monos, std::span<const Fq> pt,
                               int degree) {
  const std::size_t n = pt.size();
  std::vector<std::vector<std::uint64_t>> pw(n, std::vector<std::uint64_t>(degree + 1, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (int e = 1; e <= degree; ++e) pw[i][e] = ctx.mul(pw[i][e - 1], pt[i].code());
  std::vector<Fq> row;
  row.reserve(monos.size());
  for (const auto& m : monos) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i]) v = ctx.mul(v, pw[i][m[i]]);
    }
    row.push_back(ctx.from_code(v));
  }
  return row;
}

VanishingSystem system_from(const FieldCtx& ctx, const std::vector<std::vector<Fq>>& points,
                            std::span<const std::size_t> indices, int nvars, int degree, bool homogeneous,
                            std::vector<Exponents> monos) {
  const FiniteField dom(ctx);
  RowReducer<FiniteField> red(dom, monos.size());
  for (auto i : indices) {
    if (red.rank() == monos.size()) break;
    red.add_row(evaluation_row(ctx, monos, points[i], degree));
  }
  VanishingSystem vs;
  vs.degree = degree;
  vs.nvars = nvars;
  vs.homogeneous = homogeneous;
  vs.basis = canonical_span(dom, monos.size(), red.kernel());
  vs.monomials = std::move(monos);
  return vs;
}

}  // namespace

PointSet PointSet::make(const FieldCtx& ctx, std::vector<std::vector<Fq>> points, bool dedup) {
  PointSet ps;
  ps.ctx = &ctx;
  ps.dedup = dedup;
  std::set<std::vector<std::uint64_t>> seen;
  for (auto& p : points) {
    if (!ps.points.empty() && p.size() != ps.points.front().size()) {
      throw Error(Errc::DimensionMismatch, "points of different dimensions");
    }
    std::vector<std::uint64_t> key;
    for (const auto& v : p) {
      if (v.ctx() != &ctx) throw Error(Errc::ContextMismatch, "point coordinate from another field");
      key.push_back(v.code());
    }
    if (dedup && !seen.insert(key).second) continue;
    ps.points.push_back(std::move(p));
  }
  return ps;
}

std::vector<FqPoly> VanishingSystem::polys(const FieldCtx& ctx) const {
  std::vector<FqPoly> out;
  for (const auto& v : basis) {
    FqPoly f(FiniteField(ctx), nvars);
    for (std::size_t j = 0; j < monomials.size(); ++j) f.add_term(monomials[j], v[j]);
    out.push_back(std::move(f));
  }
  return out;
}

VanishingSystem vanishing_system(const PointSet& pts, int degree, bool homogeneous, std::size_t column_cap) {
  if (pts.size() == 0) throw Error(Errc::InsufficientPoints, "empty point set");
  auto monos = monomials_for(pts.nvars(), degree, homogeneous, column_cap);
  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return system_from(*pts.ctx, pts.points, all, pts.nvars(), degree, homogeneous, std::move(monos));
}

VanishingSystem oversampled_system(const PointSet& pts, int degree, bool homogeneous, const OversampleConfig& config) {
  if (config.slack < 1) throw Error(Errc::Usage, "slack must be at least 1");
  if (config.draws < 1) throw Error(Errc::Usage, "draws must be at least 1");
  if (pts.size() == 0) throw Error(Errc::InsufficientPoints, "empty point set");
  const auto monos = monomials_for(pts.nvars(), degree, homogeneous, config.column_cap);
  const std::size_t need = monos.size() + static_cast<std::size_t>(config.slack);
  if (pts.size() < need) {
    throw Error(Errc::InsufficientPoints, std::to_string(pts.size()) + " points, need " + std::to_string(need) +
                                              " (monomials + slack)");
  }
  const FiniteField dom(*pts.ctx);
  Rng rng(config.seed);
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  VanishingSystem acc;
  for (int d = 0; d < config.draws; ++d) {
    rng.shuffle(order);
    auto vs = system_from(*pts.ctx, pts.points, std::span<const std::size_t>(order.data(), need), pts.nvars(), degree,
                          homogeneous, monos);
    if (d == 0) {
      acc = std::move(vs);
    } else {
      acc.basis = intersect_spans(dom, monos.size(), acc.basis, vs.basis);
    }
  }
  return acc;
}

int tangent_dim(std::span<const FqPoly> gens, std::span<const Fq> pt) {
  if (gens.empty()) return static_cast<int>(pt.size());
  const FiniteField dom = gens.front().domain();
  const int n = static_cast<int>(pt.size());
  FqMatrix jac(dom, gens.size(), n);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (gens[r].nvars() != n) throw Error(Errc::DimensionMismatch, "generator and point dimensions differ");
    if (!gens[r].eval(pt).is_zero()) {
      throw Error(Errc::NotOnVariety, "generator " + std::to_string(r) + " does not vanish at the point");
    }
    for (int j = 0; j < n; ++j) jac(r, j) = gens[r].partial(j).eval(pt);
  }
  return n - static_cast<int>(rank(jac));
}

PointSet filter_isolated(const PointSet& pts, std::span<const FqPoly> gens) {
  PointSet out;
  out.ctx = pts.ctx;
  out.dedup = pts.dedup;
  for (const auto& p : pts.points) {
    if (tangent_dim(gens, p) >= 1) out.points.push_back(p);
  }
  return out;
}

PointSet parse_points(std::string_view text, const FieldCtx& ctx, bool dedup) {
  std::vector<std::vector<Fq>> points;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<Fq> pt;
    std::string tok;
    while (ls >> tok) {
      try {
        pt.push_back(ctx.parse(tok));
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(lineno) + ": " + std::string(e.message()));
      }
    }
    if (pt.empty()) continue;
    if (!points.empty() && pt.size() != points.front().size()) {
      throw Error(Errc::DimensionMismatch, "line " + std::to_string(lineno) + ": expected " +
                                               std::to_string(points.front().size()) + " coordinates");
    }
    points.push_back(std::move(pt));
  }
  return PointSet::make(ctx, std::move(points), dedup);
}

}  // namespace nodehunt
