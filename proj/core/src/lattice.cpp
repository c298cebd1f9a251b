#include "nodehunt/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "nodehunt/rng.hpp"

namespace nodehunt {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\''; }

struct Term {
  mpq_class coeff;
  bool unknown = false;
  std::string name;  // empty for a bare constant
};

// Terms of the form [+|-] [rational] [*] [?] name.
std::vector<Term> scan_terms(std::string_view text) {
  std::vector<Term> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw Error(Errc::SyntaxError, "column " + std::to_string(i + 1) + ": " + what + " in `" + std::string(text) + "`");
  };
  skip();
  if (i == text.size()) fail("empty expression");
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Term t;
    t.coeff = sign;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
      mpq_class c;
      if (c.set_str(std::string(text.substr(i, j - i)), 10) != 0 || c.get_den() == 0) fail("bad coefficient");
      c.canonicalize();
      t.coeff *= c;
      i = j;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    if (i < text.size() && text[i] == '?') {
      t.unknown = true;
      ++i;
      skip();
    }
    if (i < text.size() && name_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && name_char(text[j])) ++j;
      t.name = std::string(text.substr(i, j - i));
      i = j;
    } else if (t.unknown) {
      fail("expected a name after ?");
    }
    out.push_back(std::move(t));
    skip();
  }
  return out;
}

int display_rank(const std::string& name) {
  if (name == "K") return 0;
  if (!name.empty() && name.back() == '\'') return 1;
  return 2;
}

std::uint64_t box_size(const PairingBounds& b) {
  std::uint64_t total = 1;
  for (const auto& [lo, hi] : b.ranges) {
    const auto w = static_cast<std::uint64_t>(hi - lo + 1);
    if (total > UINT64_MAX / w) return UINT64_MAX;
    total *= w;
  }
  return total;
}

std::vector<long> parse_values(std::string_view text, const std::string& where) {
  std::vector<long> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const auto dots = tok.find("..");
    try {
      if (dots != std::string::npos) {
        const long lo = std::stol(tok.substr(0, dots)), hi = std::stol(tok.substr(dots + 2));
        for (long v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        std::size_t used = 0;
        out.push_back(std::stol(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      }
    } catch (const std::logic_error&) {
      throw Error(Errc::SyntaxError, where + "bad value `" + tok + "`");
    }
  }
  if (out.empty()) throw Error(Errc::SyntaxError, where + "empty value list");
  return out;
}

// Expands "N1-N8" into basis indices when both ends share a prefix.
std::vector<std::size_t> expand_names(std::string_view token, const GramLattice& lattice, const std::string& where) {
  if (token == "*") {
    std::vector<std::size_t> all(lattice.dim());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  if (auto single = lattice.find(token)) return {*single};
  const auto dash = token.find('-');
  if (dash != std::string_view::npos) {
    auto a = lattice.find(token.substr(0, dash));
    auto b = lattice.find(token.substr(dash + 1));
    if (a && b && *a <= *b) {
      std::vector<std::size_t> out;
      for (std::size_t i = *a; i <= *b; ++i) out.push_back(i);
      return out;
    }
  }
  throw Error(Errc::UnknownName, where + "unknown basis name `" + std::string(token) + "`");
}

}  // namespace

GramLattice::GramLattice(std::vector<std::string> names, RatMatrix gram) : names_(std::move(names)), gram_(std::move(gram)) {
  if (gram_.rows() != names_.size() || gram_.cols() != names_.size()) {
    throw Error(Errc::DimensionMismatch, std::to_string(names_.size()) + " names for a " + std::to_string(gram_.rows()) +
                                             "x" + std::to_string(gram_.cols()) + " Gram matrix");
  }
  if (!gram_.is_symmetric()) throw Error(Errc::InconsistentData, "Gram matrix is not symmetric");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw Error(Errc::InconsistentData, "basis name `" + n + "` repeated");
  }
}

std::optional<std::size_t> GramLattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t GramLattice::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(Errc::UnknownName, "unknown basis name `" + std::string(name) + "`");
}

RatMatrix GramLattice::block(const std::vector<std::size_t>& indices) const {
  RatMatrix m(Rationals{}, indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) m(i, j) = gram_(indices[i], indices[j]);
  return m;
}

GramLattice parse_lattice(std::string_view text) {
  std::string body;
  std::optional<std::vector<std::string>> names;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line.compare(first, 6, "names:") == 0) {
      if (names) throw Error(Errc::SyntaxError, "lattice file has two `names:` lines");
      std::istringstream ns(line.substr(first + 6));
      names.emplace();
      std::string n;
      while (ns >> n) names->push_back(n);
      line.clear();
    }
    body += line + "\n";
  }
  if (!names) throw Error(Errc::SyntaxError, "lattice file needs a `names:` line");
  return GramLattice(std::move(*names), parse_matrix(body));
}

std::string format_lattice(const GramLattice& lattice) {
  std::string s = "names:";
  for (const auto& n : lattice.names()) s += " " + n;
  return s + "\n" + format_matrix(lattice.gram());
}

DivisorClass parse_divisor(std::string_view text, const GramLattice& lattice) {
  DivisorClass d{std::vector<mpq_class>(lattice.dim(), 0), std::string(text)};
  for (const auto& t : scan_terms(text)) {
    if (t.unknown) throw Error(Errc::SyntaxError, "unknown multiplicity `?` not allowed in a divisor class");
    if (t.name.empty()) {
      if (t.coeff == 0) continue;
      throw Error(Errc::SyntaxError, "bare constant in divisor class `" + std::string(text) + "`");
    }
    d.coeffs[lattice.index(t.name)] += t.coeff;
  }
  return d;
}

std::string format_divisor(const std::vector<mpq_class>& coeffs, const GramLattice& lattice) {
  std::vector<std::size_t> order(lattice.dim());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return display_rank(lattice.names()[a]) < display_rank(lattice.names()[b]);
  });
  std::string s;
  for (auto i : order) {
    const mpq_class& c = coeffs.at(i);
    if (c == 0) continue;
    const mpq_class mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += mag.get_str() + (mag.get_den() == 1 ? "" : " ");
    s += lattice.names()[i];
  }
  return s.empty() ? "0" : s;
}

DivisorClass basis_class(const GramLattice& lattice, std::string_view name) {
  DivisorClass d{std::vector<mpq_class>(lattice.dim(), 0), std::string(name)};
  d.coeffs[lattice.index(name)] = 1;
  return d;
}

mpq_class pairing(const GramLattice& lattice, const std::vector<mpq_class>& u, const std::vector<mpq_class>& v) {
  if (u.size() != lattice.dim() || v.size() != lattice.dim()) {
    throw Error(Errc::DimensionMismatch, "divisor class length does not match lattice rank " +
                                             std::to_string(lattice.dim()));
  }
  const auto gv = lattice.gram().apply(v);
  mpq_class acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * gv[i];
  return acc;
}

bool in_radical(const GramLattice& lattice, const std::vector<mpq_class>& v) {
  if (v.size() != lattice.dim()) throw Error(Errc::DimensionMismatch, "vector length does not match lattice rank");
  for (const auto& x : lattice.gram().apply(v))
    if (x != 0) return false;
  return true;
}

std::vector<mpq_class> canonical_relation(const GramLattice& lattice, std::vector<mpq_class> v) {
  v = primitive_integer(std::move(v));
  if (auto k = lattice.find("K"); k && v[*k] < 0) {
    for (auto& x : v) x = -x;
  }
  return v;
}

std::vector<std::vector<mpq_class>> radical(const GramLattice& lattice) {
  auto basis = nullspace(lattice.gram());
  for (auto& v : basis) v = canonical_relation(lattice, std::move(v));
  return basis;
}

GramLattice extend_with_curve(const GramLattice& lattice, std::string name, const std::vector<mpq_class>& pairings,
                              const mpq_class& self) {
  const std::size_t n = lattice.dim();
  if (pairings.size() != n) {
    throw Error(Errc::DimensionMismatch, std::to_string(pairings.size()) + " pairings for a lattice of rank " +
                                             std::to_string(n));
  }
  RatMatrix g(Rationals{}, n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = lattice.gram()(i, j);
    g(i, n) = pairings[i];
    g(n, i) = pairings[i];
  }
  g(n, n) = self;
  auto names = lattice.names();
  names.push_back(std::move(name));
  return GramLattice(std::move(names), std::move(g));
}

Inertia inertia(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw Error(Errc::InconsistentData, "inertia of a non-symmetric matrix");
  RatMatrix a = symmetric;
  const std::size_t n = a.rows();
  Inertia out;
  auto sym_swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv == n) {
      // Zero diagonal: add a row/column with a nonzero off-diagonal entry,
      // which makes the diagonal 2 a(i,j) != 0.
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = k; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n && !off; ++j)
          if (a(i, j) != 0) off = std::make_pair(i, j);
      if (!off) {
        out.zero += n - k;
        break;
      }
      const auto [i, j] = *off;
      for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
      piv = i;
    }
    sym_swap(k, piv);
    const mpq_class p = a(k, k);
    (p > 0 ? out.positive : out.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const mpq_class f = a(i, k) / p;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t r = k; r < n; ++r) a(r, i) = (r == i) ? a(i, i) : a(i, r);
    }
  }
  return out;
}

bool is_negative_definite(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric()) return false;
  for (std::size_t k = 1; k <= symmetric.rows(); ++k) {
    RatMatrix lead(Rationals{}, k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = symmetric(i, j);
    const int s = sgn(determinant(lead));
    if (s != (k % 2 == 1 ? -1 : 1)) return false;
  }
  return true;
}

long b2(const SurfaceInvariants& inv) { return 12 * inv.chi - inv.K2 + 4 * inv.q - 2; }

GramLattice godeaux_fixture() {
  // Nodes N1, N2; A3 chains N3-N4-N5 and N6-N7-N8; canonical class K with K^2 = 1.
  const std::vector<std::vector<long>> rows = {
      {-2, 0, 0, 0, 0, 0, 0, 0, 0}, {0, -2, 0, 0, 0, 0, 0, 0, 0}, {0, 0, -2, 1, 0, 0, 0, 0, 0},
      {0, 0, 1, -2, 1, 0, 0, 0, 0}, {0, 0, 0, 1, -2, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -2, 1, 0, 0},
      {0, 0, 0, 0, 0, 1, -2, 1, 0}, {0, 0, 0, 0, 0, 0, 1, -2, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1},
  };
  RatMatrix g(Rationals{}, 9, 9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) g(i, j) = rows[i][j];
  return GramLattice({"N1", "N2", "N3", "N4", "N5", "N6", "N7", "N8", "K"}, std::move(g));
}

GramLattice godeaux_extended() {
  auto to_q = [](std::initializer_list<long> v) { return std::vector<mpq_class>(v.begin(), v.end()); };
  auto base = godeaux_fixture();
  auto with_c = extend_with_curve(base, "C'", to_q({1, 0, 0, 0, 1, 1, 0, 0, 2}), 2);
  return extend_with_curve(with_c, "D'", to_q({1, 1, 0, 0, 0, 0, 1, 0, 2, 3}), 2);
}

PairingBounds parse_bounds(std::string_view text, const GramLattice& lattice, std::pair<long, long> fallback) {
  PairingBounds b;
  b.ranges.assign(lattice.dim() + 1, fallback);
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    const auto colon = tok.find(':', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || colon == std::string::npos) {
      throw Error(Errc::SyntaxError, "bound `" + tok + "` is not of the form name=lo:hi");
    }
    long lo = 0, hi = 0;
    try {
      lo = std::stol(tok.substr(eq + 1, colon - eq - 1));
      hi = std::stol(tok.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw Error(Errc::SyntaxError, "bound `" + tok + "` has a bad range");
    }
    if (lo > hi) throw Error(Errc::SyntaxError, "bound `" + tok + "` has lo > hi");
    const std::string name = tok.substr(0, eq);
    if (name == "self") {
      b.ranges.back() = {lo, hi};
    } else {
      for (auto i : expand_names(name, lattice, "")) b.ranges[i] = {lo, hi};
    }
  }
  return b;
}

std::vector<FoundRelation> search_relations(const GramLattice& lattice, const PairingBounds& bounds,
                                            const SearchConfig& config, const std::string& curve_name) {
  const std::size_t n = lattice.dim();
  if (bounds.ranges.size() != n + 1) {
    throw Error(Errc::DimensionMismatch, "bounds need one range per basis element plus one for the self-intersection");
  }
  for (const auto& [lo, hi] : bounds.ranges) {
    if (lo > hi) throw Error(Errc::Usage, "empty pairing range");
  }
  // With a nondegenerate base, the extension is degenerate exactly when
  // c = v^T G^{-1} v, and the radical is spanned by (G^{-1} v, -1).
  std::optional<RatMatrix> ginv;
  if (rank(lattice.gram()) == n) {
    RatMatrix inv(Rationals{}, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<mpq_class> e(n, 0);
      e[j] = 1;
      const auto col = solve_particular(lattice.gram(), std::span<const mpq_class>(e));
      for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
    }
    ginv = std::move(inv);
  }

  const std::uint64_t size = box_size(bounds);
  const bool exhaustive = size <= config.exhaustive_limit;
  const std::uint64_t count = exhaustive ? size : config.trials;
  std::map<std::vector<long>, FoundRelation> found;
  std::vector<long> point(n + 1);
  for (std::uint64_t t = 0; t < count; ++t) {
    if (exhaustive) {
      std::uint64_t r = t;
      for (std::size_t i = n + 1; i-- > 0;) {
        const auto [lo, hi] = bounds.ranges[i];
        const auto w = static_cast<std::uint64_t>(hi - lo + 1);
        point[i] = lo + static_cast<long>(r % w);
        r /= w;
      }
    } else {
      Rng rng(config.seed, t);
      for (std::size_t i = 0; i <= n; ++i) point[i] = rng.range(bounds.ranges[i].first, bounds.ranges[i].second);
    }
    if (found.count(point)) continue;
    std::vector<mpq_class> v(point.begin(), point.begin() + static_cast<std::ptrdiff_t>(n));
    const mpq_class self = point[n];
    std::vector<std::vector<mpq_class>> rels;
    if (ginv) {
      const auto w = ginv->apply(v);
      mpq_class s = 0;
      for (std::size_t i = 0; i < n; ++i) s += v[i] * w[i];
      if (s == self) {
        std::vector<mpq_class> rel(w);
        rel.push_back(-1);
        rels.push_back(canonical_relation(extend_with_curve(lattice, curve_name, v, self), std::move(rel)));
      }
    } else {
      rels = radical(extend_with_curve(lattice, curve_name, v, self));
    }
    if (!rels.empty()) found.emplace(point, FoundRelation{point, std::move(rels)});
  }
  std::vector<FoundRelation> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));
  return out;
}

RelationTemplate parse_template(std::string_view text, const GramLattice& lattice) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw Error(Errc::SyntaxError, "template needs `lhs = rhs`");
  RelationTemplate t;
  t.lhs = parse_divisor(text.substr(0, eq), lattice).coeffs;
  t.known.assign(lattice.dim(), 0);
  std::set<std::size_t> seen;
  for (const auto& term : scan_terms(text.substr(eq + 1))) {
    if (term.name.empty()) throw Error(Errc::SyntaxError, "bare constant in template");
    auto idx = lattice.find(term.name);
    if (!idx) {
      if (term.unknown) throw Error(Errc::SyntaxError, "unknown multiplicity on the new curve `" + term.name + "`");
      if (!t.curve.empty() && t.curve != term.name) {
        throw Error(Errc::SyntaxError, "template mentions two new curves, `" + t.curve + "` and `" + term.name + "`");
      }
      t.curve = term.name;
      t.mult = term.coeff;
      continue;
    }
    if (term.unknown) {
      if (term.coeff != 1) throw Error(Errc::SyntaxError, "`?` terms take no coefficient");
      if (!seen.insert(*idx).second) throw Error(Errc::SyntaxError, "`?" + term.name + "` repeated");
      t.support.push_back(*idx);
    } else {
      t.known[*idx] += term.coeff;
    }
  }
  if (t.curve.empty()) throw Error(Errc::SyntaxError, "template has no new curve");
  if (t.mult == 0) throw Error(Errc::SyntaxError, "new curve has multiplicity 0");
  return t;
}

CurveConstraints parse_constraints(std::string_view text, const GramLattice& lattice) {
  CurveConstraints c;
  c.pairing_sets.assign(lattice.dim(), {});
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (kw == "positive") {
      c.positive = true;
      continue;
    }
    if (kw == "adjunction") {
      std::string name;
      if (!(ls >> name)) throw Error(Errc::SyntaxError, where + "adjunction needs a basis name");
      c.adjunction_with = lattice.index(name);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(Errc::SyntaxError, where + "expected `" + kw + " ... : values`");
    const auto values = parse_values(std::string_view(line).substr(colon + 1), where);
    std::istringstream names(line.substr(0, colon));
    names >> kw;
    std::vector<std::size_t> idx;
    std::string tok;
    while (names >> tok) {
      for (auto i : expand_names(tok, lattice, where)) idx.push_back(i);
    }
    if (kw == "self") {
      c.self_set = values;
    } else if (kw == "pair") {
      if (idx.empty()) throw Error(Errc::SyntaxError, where + "pair needs basis names");
      for (auto i : idx) c.pairing_sets[i] = values;
    } else if (kw == "sum") {
      if (idx.empty()) throw Error(Errc::SyntaxError, where + "sum needs basis names");
      c.sums.emplace_back(idx, values);
    } else {
      throw Error(Errc::SyntaxError, where + "unknown constraint `" + kw + "`");
    }
  }
  return c;
}

std::vector<CurveSolution> solve_curve_intersections(const GramLattice& lattice, const RelationTemplate& tmpl,
                                                     const CurveConstraints& constraints) {
  const std::size_t n = lattice.dim();
  if (tmpl.lhs.size() != n || tmpl.known.size() != n || constraints.pairing_sets.size() != n) {
    throw Error(Errc::DimensionMismatch, "template or constraints do not match the lattice rank");
  }
  std::vector<mpq_class> fixed(n);
  for (std::size_t i = 0; i < n; ++i) fixed[i] = tmpl.lhs[i] - tmpl.known[i];
  const auto gf = lattice.gram().apply(fixed);

  std::vector<std::size_t> constrained, free;
  for (std::size_t j = 0; j < n; ++j) (constraints.pairing_sets[j].empty() ? free : constrained).push_back(j);
  const std::size_t u = tmpl.support.size();

  // Row j: sum_i a_i G(i, j) + mult * x_j = <fixed, e_j> for free x_j; constrained
  // x_j move to the right-hand side.
  RatMatrix a(Rationals{}, n, u + free.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < u; ++k) a(j, k) = lattice.gram()(tmpl.support[k], j);
    for (std::size_t k = 0; k < free.size(); ++k)
      if (free[k] == j) a(j, u + k) = tmpl.mult;
  }
  if (rank(a) < a.cols()) {
    throw Error(Errc::InconsistentData, "template does not determine its unknowns; constrain more pairings");
  }

  std::uint64_t total = 1;
  for (auto j : constrained) {
    total *= constraints.pairing_sets[j].size();
    if (total > 50'000'000) throw Error(Errc::BudgetExceeded, "too many constrained pairing assignments");
  }

  std::vector<CurveSolution> out;
  std::vector<mpq_class> x(n, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t r = t;
    for (std::size_t c = constrained.size(); c-- > 0;) {
      const auto& set = constraints.pairing_sets[constrained[c]];
      x[constrained[c]] = set[r % set.size()];
      r /= set.size();
    }
    bool sums_ok = true;
    for (const auto& [idx, allowed] : constraints.sums) {
      bool all_known = true;
      mpq_class s = 0;
      for (auto i : idx) {
        all_known = all_known && !constraints.pairing_sets[i].empty();
        s += x[i];
      }
      if (all_known && std::find(allowed.begin(), allowed.end(), s) == allowed.end()) sums_ok = false;
    }
    if (!sums_ok) continue;

    std::vector<mpq_class> rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
      rhs[j] = gf[j];
      if (!constraints.pairing_sets[j].empty()) rhs[j] -= tmpl.mult * x[j];
    }
    const auto sol = solve_particular(a, std::span<const mpq_class>(rhs));
    if (!sol) continue;

    CurveSolution cs;
    bool ok = true;
    for (std::size_t k = 0; k < u && ok; ++k) {
      const mpq_class& m = (*sol)[k];
      ok = m.get_den() == 1 && m >= (constraints.positive ? 1 : 0);
      if (ok) cs.multiplicities.push_back(m.get_num());
    }
    if (!ok) continue;
    cs.pairings = x;
    for (std::size_t k = 0; k < free.size() && ok; ++k) {
      const mpq_class& v = (*sol)[u + k];
      ok = v.get_den() == 1;
      cs.pairings[free[k]] = v;
    }
    if (!ok) continue;
    for (const auto& [idx, allowed] : constraints.sums) {
      mpq_class s = 0;
      for (auto i : idx) s += cs.pairings[i];
      if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) ok = false;
    }
    if (!ok) continue;

    // <relation, X> = 0 fixes X^2.
    mpq_class num = 0;
    for (std::size_t j = 0; j < n; ++j) num += fixed[j] * cs.pairings[j];
    for (std::size_t k = 0; k < u; ++k) num -= mpq_class(cs.multiplicities[k]) * cs.pairings[tmpl.support[k]];
    cs.self = num / tmpl.mult;
    if (cs.self.get_den() != 1) continue;
    if (constraints.self_set &&
        std::find(constraints.self_set->begin(), constraints.self_set->end(), cs.self) == constraints.self_set->end()) {
      continue;
    }
    if (constraints.adjunction_with) {
      const mpz_class genus2 = cs.self.get_num() + cs.pairings[*constraints.adjunction_with].get_num();
      if (mpz_odd_p(genus2.get_mpz_t())) continue;
    }

    const GramLattice ext = extend_with_curve(lattice, tmpl.curve, cs.pairings, cs.self);
    std::vector<mpq_class> rel(fixed);
    for (std::size_t k = 0; k < u; ++k) rel[tmpl.support[k]] -= mpq_class(cs.multiplicities[k]);
    rel.push_back(-tmpl.mult);
    if (!in_radical(ext, rel)) throw Error(Errc::InconsistentData, "solved relation is not in the radical");
    cs.relation = canonical_relation(ext, std::move(rel));
    out.push_back(std::move(cs));
  }
  if (out.empty()) throw Error(Errc::NoSolution, "no pairing assignment makes the template a relation");
  return out;
}

}  // namespace nodehunt
