#include "nodehunt/hunt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nodehunt/exactla.hpp"
#include "nodehunt/parallel.hpp"
#include "nodehunt/rng.hpp"

namespace nodehunt {

namespace {

// Polynomial over GF(q) flattened to packed codes for the point scan.
struct CompiledPoly {
  struct Term {
    std::uint64_t coeff;
    std::vector<std::uint32_t> exps;
  };
  std::vector<Term> terms;
  int degree = 0;

  explicit CompiledPoly(const FqPoly& f) {
    for (const auto& [e, c] : f.terms()) terms.push_back({c.code(), e});
    degree = std::max(f.degree(), 0);
  }

  std::uint64_t eval(const FieldCtx& ctx, const std::vector<std::vector<std::uint64_t>>& pw) const {
    std::uint64_t acc = 0;
    for (const auto& t : terms) {
      std::uint64_t v = t.coeff;
      for (std::size_t i = 0; i < t.exps.size(); ++i) {
        if (t.exps[i]) v = ctx.mul(v, pw[i][t.exps[i]]);
      }
      acc = ctx.add(acc, v);
    }
    return acc;
  }
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t q, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r = sat_mul(r, q);
  return r;
}

template <class D>
Poly<D> compose(const Poly<D>& f, const std::vector<Poly<D>>& subs, int nvars) {
  const D& dom = f.domain();
  std::vector<std::vector<Poly<D>>> powers(subs.size());
  Poly<D> out(dom, nvars);
  for (const auto& [e, c] : f.terms()) {
    Poly<D> t = Poly<D>::constant(dom, nvars, c);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!e[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly<D>::constant(dom, nvars, dom.one()));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * subs[i]);
      t = t * pw[e[i]];
    }
    out += t;
  }
  return out;
}

template <class D>
void require_singular(const Poly<D>& g, std::span<const typename D::value_type> pt) {
  if (!D::is_zero(g.eval(pt))) throw Error(Errc::NotSingular, "polynomial does not vanish at the point");
  for (int i = 0; i < g.nvars(); ++i) {
    if (!D::is_zero(g.partial(i).eval(pt))) {
      throw Error(Errc::NotSingular, "partial derivative d/d" + VarNames{g.nvars()}.name(i) + " does not vanish");
    }
  }
}

template <class D>
std::optional<std::uint32_t> characteristic(const D&) {
  return std::nullopt;
}
std::optional<std::uint32_t> characteristic(const FiniteField& d) { return d.ctx->p(); }

}  // namespace

std::uint64_t projective_point_count(std::uint64_t q, int n) {
  if (n <= 0) return 0;
  std::uint64_t total = 0;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t block = sat_pow(q, n - 1 - j);
    if (block == UINT64_MAX || total > UINT64_MAX - block) return UINT64_MAX;
    total += block;
  }
  return total;
}

std::vector<std::vector<Fq>> singular_points(const FqPoly& f, std::uint64_t budget) {
  const FieldCtx& ctx = *f.domain().ctx;
  const int n = f.nvars();
  const std::uint64_t q = ctx.order();
  const std::uint64_t count = projective_point_count(q, n);
  if (count > budget) {
    throw Error(Errc::BudgetExceeded, "P^" + std::to_string(n - 1) + "(GF(" + std::to_string(q) + ")) has " +
                                          (count == UINT64_MAX ? std::string("too many") : std::to_string(count)) +
                                          " points, budget is " + std::to_string(budget));
  }
  std::vector<CompiledPoly> eqs;
  eqs.emplace_back(f);
  for (int i = 0; i < n; ++i) eqs.emplace_back(f.partial(i));
  const int deg = f.degree() < 0 ? 0 : f.degree();

  std::vector<std::vector<Fq>> out;
  std::vector<std::uint64_t> x(n, 0);
  std::vector<std::vector<std::uint64_t>> pw(n, std::vector<std::uint64_t>(deg + 1, 0));
  auto set_power = [&](int i) {
    pw[i][0] = 1;
    for (int e = 1; e <= deg; ++e) pw[i][e] = ctx.mul(pw[i][e - 1], x[i]);
  };
  for (int lead = 0; lead < n; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    for (int i = 0; i < n; ++i) set_power(i);
    for (;;) {
      bool singular = true;
      for (const auto& eq : eqs) {
        if (eq.eval(ctx, pw) != 0) {
          singular = false;
          break;
        }
      }
      if (singular) {
        std::vector<Fq> pt;
        pt.reserve(n);
        for (int i = 0; i < n; ++i) pt.push_back(ctx.from_code(x[i]));
        out.push_back(std::move(pt));
      }
      // Advance the free coordinates lead+1..n-1, last one fastest.
      int i = n - 1;
      while (i > lead) {
        if (++x[i] < q) {
          set_power(i);
          break;
        }
        x[i] = 0;
        set_power(i);
        --i;
      }
      if (i == lead) break;
    }
  }
  return out;
}

std::string format_point(std::span<const Fq> coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ":";
    s += coords[i].str();
  }
  return s + ")";
}

std::string signature_of(std::span<const LocalType> types) {
  std::map<int, int> counts;
  int unclassified = 0;
  for (const auto& t : types) {
    if (t.ak) {
      ++counts[*t.ak];
    } else {
      ++unclassified;
    }
  }
  std::string s;
  for (const auto& [k, c] : counts) {
    if (!s.empty()) s += "+";
    s += std::to_string(c) + "A" + std::to_string(k);
  }
  if (unclassified) {
    if (!s.empty()) s += "+";
    s += std::to_string(unclassified) + "U";
  }
  return s;
}

std::string SingularMember::signature() const {
  std::vector<LocalType> types;
  for (const auto& p : points) types.push_back(p.type);
  return signature_of(types);
}

bool SingularMember::has_unclassified() const {
  return std::any_of(points.begin(), points.end(), [](const SingularPoint& p) { return !p.type.ak; });
}

template <class D>
int truncated_tjurina(const Poly<D>& g, int cap) {
  const int m = g.nvars();
  const D& dom = g.domain();
  const auto monos = monomial_basis(m, cap - 1, DegreeMode::AtMost);
  std::map<Exponents, std::size_t> column;
  for (std::size_t i = 0; i < monos.size(); ++i) column.emplace(monos[i], i);

  std::vector<Poly<D>> gens{g};
  for (int i = 0; i < m; ++i) gens.push_back(g.partial(i));

  RowReducer<D> red(dom, monos.size());
  for (const auto& h : gens) {
    for (const auto& u : monos) {
      const int du = static_cast<int>(total_degree(u));
      Vec<D> row(monos.size(), dom.zero());
      bool any = false;
      for (const auto& [e, c] : h.terms()) {
        if (du + static_cast<int>(total_degree(e)) >= cap) continue;
        Exponents s(m);
        for (int i = 0; i < m; ++i) s[i] = e[i] + u[i];
        row[column.at(s)] += c;
        any = true;
      }
      if (any) red.add_row(std::move(row));
    }
  }
  return static_cast<int>(monos.size() - red.rank());
}

template <class D>
LocalType classify_affine(const Poly<D>& g, std::span<const typename D::value_type> pt, int degree_cap) {
  const int m = g.nvars();
  const D& dom = g.domain();
  if (static_cast<int>(pt.size()) != m) {
    throw Error(Errc::DimensionMismatch, "point has " + std::to_string(pt.size()) + " coordinates, expected " +
                                             std::to_string(m));
  }
  if (degree_cap < 2) throw Error(Errc::InvalidDegree, "degree cap must be at least 2");
  require_singular(g, pt);

  LocalType out;
  if (auto p = characteristic(dom); p && static_cast<int>(*p) <= g.degree()) {
    out.diagnostic = "characteristic " + std::to_string(*p) + " <= degree " + std::to_string(g.degree());
    return out;
  }

  std::vector<Poly<D>> subs;
  for (int i = 0; i < m; ++i) {
    Poly<D> s = Poly<D>::variable(dom, m, i);
    s += Poly<D>::constant(dom, m, pt[i]);
    subs.push_back(std::move(s));
  }
  const Poly<D> h = compose(g, subs, m);

  Matrix<D> hess(dom, m, m);
  const Exponents origin(m, 0);
  for (int i = 0; i < m; ++i) {
    const Poly<D> di = h.partial(i);
    for (int j = 0; j < m; ++j) hess(i, j) = di.partial(j).coeff(origin);
  }
  out.corank = m - static_cast<int>(rank(hess));

  const int lo = truncated_tjurina(h, degree_cap - 1);
  const int hi = truncated_tjurina(h, degree_cap);
  if (lo != hi) {
    out.diagnostic = "Unstable: tau " + std::to_string(lo) + " at cap " + std::to_string(degree_cap - 1) + ", " +
                     std::to_string(hi) + " at cap " + std::to_string(degree_cap);
    return out;
  }
  out.tjurina = hi;
  if (out.corank <= 1) {
    out.ak = hi;
  } else {
    out.diagnostic = "corank " + std::to_string(out.corank);
  }
  return out;
}

template <class D>
LocalType classify(const Poly<D>& f, std::span<const typename D::value_type> pt, int degree_cap) {
  using T = typename D::value_type;
  const int n = f.nvars();
  const D& dom = f.domain();
  if (static_cast<int>(pt.size()) != n) {
    throw Error(Errc::DimensionMismatch, "point has " + std::to_string(pt.size()) + " coordinates, expected " +
                                             std::to_string(n));
  }
  int chart = 0;
  while (chart < n && D::is_zero(pt[chart])) ++chart;
  if (chart == n) throw Error(Errc::DimensionMismatch, "the zero vector is not a projective point");
  require_singular(f, pt);

  const T s = dom.inv(pt[chart]);
  std::vector<T> affine;
  std::vector<Poly<D>> subs;
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    if (i == chart) {
      subs.push_back(Poly<D>::constant(dom, n - 1, dom.one()));
    } else {
      subs.push_back(Poly<D>::variable(dom, n - 1, idx++));
      affine.push_back(pt[i] * s);
    }
  }
  const Poly<D> g = compose(f, subs, n - 1);
  return classify_affine(g, std::span<const T>(affine), degree_cap);
}

template LocalType classify_affine<Rationals>(const RatPoly&, std::span<const mpq_class>, int);
template LocalType classify_affine<FiniteField>(const FqPoly&, std::span<const Fq>, int);
template LocalType classify<Rationals>(const RatPoly&, std::span<const mpq_class>, int);
template LocalType classify<FiniteField>(const FqPoly&, std::span<const Fq>, int);
template int truncated_tjurina<Rationals>(const RatPoly&, int);
template int truncated_tjurina<FiniteField>(const FqPoly&, int);

namespace {

std::vector<Fq> tuple_from_index(const FieldCtx& field, std::uint64_t index, int len) {
  std::vector<Fq> out(len);
  for (int i = len - 1; i >= 0; --i) {
    out[i] = field.from_code(index % field.order());
    index /= field.order();
  }
  return out;
}

std::optional<SingularMember> examine(const ParametricFamily& fam, std::span<const Fq> params,
                                      const HuntConfig& config) {
  const FqPoly f = specialize(fam, params);
  auto pts = singular_points(f, config.budget);
  if (pts.empty()) return std::nullopt;
  SingularMember m;
  m.params.assign(params.begin(), params.end());
  for (auto& pt : pts) {
    SingularPoint sp{std::move(pt), {}};
    if (config.classify) {
      sp.type = classify(f, std::span<const Fq>(sp.coords), config.degree_cap);
    } else {
      sp.type.diagnostic = "not classified";
    }
    m.points.push_back(std::move(sp));
  }
  return m;
}

std::vector<Fq> random_projective_point(const FieldCtx& field, int n, Rng& rng) {
  std::vector<std::uint64_t> codes(n);
  for (;;) {
    bool nonzero = false;
    for (auto& c : codes) {
      c = rng.below(field.order());
      nonzero |= c != 0;
    }
    if (nonzero) break;
  }
  std::vector<Fq> pt;
  for (auto c : codes) pt.push_back(field.from_code(c));
  std::size_t lead = 0;
  while (pt[lead].is_zero()) ++lead;
  const Fq s = pt[lead].inv();
  for (auto& v : pt) v *= s;
  return pt;
}

// Affine-linear system in the parameters: rows f, d f/d x_i evaluated at x.
struct ParamSystem {
  FqMatrix a;
  std::vector<Fq> rhs;
};

ParamSystem linear_system_at(const std::vector<FqPoly>& eqs, int nvars, int nparams, std::span<const Fq> x,
                             const FieldCtx& field) {
  const FiniteField dom(field);
  ParamSystem sys{FqMatrix(dom, eqs.size(), nparams), std::vector<Fq>(eqs.size(), field.zero())};
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    for (const auto& [e, c] : eqs[r].terms()) {
      Fq v = c;
      for (int i = 0; i < nvars; ++i) {
        if (e[i]) v *= x[i].pow(e[i]);
      }
      int col = -1;
      for (int j = 0; j < nparams; ++j) {
        if (e[nvars + j]) col = j;
      }
      if (col < 0) {
        sys.rhs[r] -= v;
      } else {
        sys.a(r, col) += v;
      }
    }
  }
  return sys;
}

}  // namespace

std::vector<std::vector<Fq>> scan_singular_parameters(const ParametricFamily& fam, const FieldCtx& field,
                                                      std::uint64_t budget) {
  const std::uint64_t total = sat_pow(field.order(), fam.nparams);
  if (total > budget) {
    throw Error(Errc::BudgetExceeded, "parameter space too large for an exhaustive scan");
  }
  std::vector<std::vector<Fq>> out;
  for (std::uint64_t i = 0; i < total; ++i) {
    auto params = tuple_from_index(field, i, fam.nparams);
    if (!singular_points(specialize(fam, params), budget).empty()) out.push_back(std::move(params));
  }
  return out;
}

std::vector<SingularMember> hunt_members(const ParametricFamily& fam, const FieldCtx& field, const HuntConfig& config) {
  if (config.trials < 1) throw Error(Errc::Usage, "trials must be at least 1");
  const unsigned threads = std::max(1u, config.threads);
  std::vector<std::optional<SingularMember>> found;

  if (config.strategy == HuntStrategy::RandomParams) {
    const std::uint64_t space = sat_pow(field.order(), fam.nparams);
    std::vector<std::vector<Fq>> candidates;
    if (space != UINT64_MAX && config.trials >= space) {
      for (std::uint64_t i = 0; i < space; ++i) candidates.push_back(tuple_from_index(field, i, fam.nparams));
    } else {
      std::set<std::vector<Fq>> seen;
      for (std::uint64_t t = 0; t < config.trials; ++t) {
        Rng rng(config.seed, t);
        std::vector<Fq> params;
        for (int j = 0; j < fam.nparams; ++j) params.push_back(field.from_code(rng.below(field.order())));
        if (seen.insert(params).second) candidates.push_back(std::move(params));
      }
    }
    found.resize(candidates.size());
    parallel_for(candidates.size(), threads,
                 [&](std::size_t i) { found[i] = examine(fam, candidates[i], config); });
  } else {
    if (!is_linear_in_params(fam)) {
      throw Error(Errc::NotLinearInParams, "solve-at-point needs a family linear in the parameters");
    }
    const FqPoly full = reduce_mod(fam.poly, field);
    std::vector<FqPoly> eqs{full};
    for (int i = 0; i < fam.nvars; ++i) eqs.push_back(full.partial(i));
    if (config.fixed_point && static_cast<int>(config.fixed_point->size()) != fam.nvars) {
      throw Error(Errc::DimensionMismatch, "fixed point has wrong number of coordinates");
    }
    found.resize(config.trials);
    parallel_for(config.trials, threads, [&](std::size_t t) {
      Rng rng(config.seed, t);
      const std::vector<Fq> x = config.fixed_point ? *config.fixed_point : random_projective_point(field, fam.nvars, rng);
      const auto sys = linear_system_at(eqs, fam.nvars, fam.nparams, x, field);
      const auto part = solve_particular(sys.a, std::span<const Fq>(sys.rhs));
      if (!part) return;
      std::vector<Fq> params = *part;
      for (const auto& k : nullspace(sys.a)) {
        const Fq r = field.from_code(rng.below(field.order()));
        for (int j = 0; j < fam.nparams; ++j) params[j] += r * k[j];
      }
      for (const auto& eq : eqs) {
        std::vector<Fq> full_pt(x);
        full_pt.insert(full_pt.end(), params.begin(), params.end());
        if (!eq.eval(full_pt).is_zero()) {
          throw Error(Errc::InconsistentData, "solve-at-point produced a member that is smooth at the chosen point");
        }
      }
      found[t] = examine(fam, params, config);
    });
  }

  std::map<std::vector<Fq>, SingularMember> unique;
  for (auto& m : found) {
    if (m) unique.try_emplace(m->params, std::move(*m));
  }
  std::vector<SingularMember> out;
  out.reserve(unique.size());
  for (auto& [k, v] : unique) out.push_back(std::move(v));
  return out;
}

}  // namespace nodehunt
