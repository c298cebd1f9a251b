#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nodehunt/domain.hpp"
#include "nodehunt/error.hpp"

namespace nodehunt {

using Exponents = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto v : e) d += v;
  return d;
}

/// Graded-lex order: total degree first, then lexicographic with x0 largest.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;  // larger x0 exponent is the larger monomial
  }
};

inline bool grlex_greater(const Exponents& a, const Exponents& b) { return GrlexLess{}(b, a); }

enum class DegreeMode { AtMost, Exactly };

/// Exponent vectors in descending graded-lex order (leading monomial first).
std::vector<Exponents> monomial_basis(int nvars, int degree, DegreeMode mode);

/// Sparse multivariate polynomial with coefficients in domain D.
template <class D>
class Poly {
 public:
  using Coeff = typename D::value_type;
  using Terms = std::map<Exponents, Coeff, GrlexLess>;

  Poly() = default;
  Poly(D dom, int nvars) : dom_(dom), nvars_(nvars) {}

  static Poly constant(D dom, int nvars, const Coeff& c) {
    Poly f(dom, nvars);
    f.add_term(Exponents(nvars, 0), c);
    return f;
  }
  static Poly variable(D dom, int nvars, int index) {
    Poly f(dom, nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    f.add_term(e, dom.one());
    return f;
  }

  const D& domain() const { return dom_; }
  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * x^e, dropping the entry if it cancels.
  void add_term(const Exponents& e, const Coeff& c) {
    if (static_cast<int>(e.size()) != nvars_) {
      throw Error(Errc::DimensionMismatch, "exponent vector length " + std::to_string(e.size()) + " for " +
                                               std::to_string(nvars_) + " variables");
    }
    if (D::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (D::is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? dom_.zero() : it->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, static_cast<int>(total_degree(e)));
    return d;
  }

  /// Degree in the variables [first, last).
  int degree_in(int first, int last) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int i = first; i < last; ++i) s += static_cast<int>(e[i]);
      d = std::max(d, s);
    }
    return d;
  }

  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const auto d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) != d) return std::nullopt;
    }
    return static_cast<int>(d);
  }

  Coeff eval(std::span<const Coeff> x) const {
    if (static_cast<int>(x.size()) != nvars_) {
      throw Error(Errc::DimensionMismatch, "evaluation point has " + std::to_string(x.size()) + " coordinates, expected " +
                                               std::to_string(nvars_));
    }
    const int deg = std::max(degree(), 0);
    std::vector<std::vector<Coeff>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      auto& pw = powers[i];
      pw.reserve(deg + 1);
      pw.push_back(dom_.one());
      for (int j = 1; j <= deg; ++j) pw.push_back(pw.back() * x[i]);
    }
    Coeff acc = dom_.zero();
    for (const auto& [e, c] : terms_) {
      Coeff t = c;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i]) t *= powers[i][e[i]];
      }
      acc += t;
    }
    return acc;
  }

  /// Formal partial derivative; coefficients are multiplied in D, so the
  /// characteristic applies (d/dx x^p = 0 over GF(p)).
  Poly partial(int var) const {
    if (var < 0 || var >= nvars_) {
      throw Error(Errc::IndexOutOfRange, "variable index " + std::to_string(var) + " out of range for " +
                                             std::to_string(nvars_) + " variables");
    }
    Poly out(dom_, nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      --d[var];
      out.add_term(d, c * dom_.from_int(e[var]));
    }
    return out;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.dom_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Poly scaled(const Coeff& s) const {
    Poly out(dom_, nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }

  /// Change of coefficient domain through `map` (e.g. reduction mod p).
  template <class D2, class F>
  Poly<D2> map_coeffs(D2 target, F&& map) const {
    Poly<D2> out(target, nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, map(c));
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  D dom_{};
  int nvars_ = 0;
  Terms terms_;
};

using IntPoly = Poly<Integers>;
using RatPoly = Poly<Rationals>;
using FqPoly = Poly<FiniteField>;

/// Variable naming for printing: the first `nvars` are x0..x{nvars-1}, the
/// remaining ones p1, p2, ...
struct VarNames {
  int nvars = 0;
  std::string name(int index) const {
    if (index < nvars) return "x" + std::to_string(index);
    return "p" + std::to_string(index - nvars + 1);
  }
};

namespace detail {

std::string format_monomial(const Exponents& e, const VarNames& names);

// Signed coefficient printing: returns (negative, magnitude text) so that
// terms can be joined with " + " / " - ".
inline std::pair<bool, std::string> split_sign(const mpz_class& c) { return {sgn(c) < 0, mpz_class(abs(c)).get_str()}; }
inline std::pair<bool, std::string> split_sign(const mpq_class& c) {
  std::string s = mpq_class(abs(c)).get_str();
  if (c.get_den() != 1) s = "(" + s + ")";
  return {sgn(c) < 0, s};
}
inline std::pair<bool, std::string> split_sign(const Fq& c) {
  std::string s = c.str();
  if (c.ctx()->k() > 1 && s.find_first_of("t+") != std::string::npos) s = "(" + s + ")";
  return {false, s};
}

}  // namespace detail

/// Canonical text in the family grammar, leading (graded-lex largest) term first.
template <class D>
std::string to_string(const Poly<D>& f, const VarNames& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    auto [neg, mag] = detail::split_sign(c);
    const std::string mono = detail::format_monomial(e, names);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + "*" + mono;
    }
  }
  return out;
}

template <class D>
std::string to_string(const Poly<D>& f) {
  return to_string(f, VarNames{f.nvars()});
}

/// A polynomial in nvars geometric variables followed by nparams parameters.
struct ParametricFamily {
  IntPoly poly;
  int nvars = 0;
  int nparams = 0;
  std::optional<int> homogeneous_degree;

  VarNames names() const { return VarNames{nvars}; }
  std::string str() const { return to_string(poly, names()); }
};

/// Parses the family grammar: terms joined by + / -, each an optional integer
/// coefficient followed by *-separated powers x<i>^<e> or p<j>^<e>.
ParametricFamily parse_family(std::string_view text, int nvars, int nparams);

/// Same grammar over a finite field; coefficients may additionally be
/// parenthesized field elements such as (3*t+1).
FqPoly parse_poly_over(std::string_view text, const FieldCtx& field, int nvars, int nparams = 0);

/// Reads a file with one polynomial per line (`#` starts a comment).
std::vector<std::string> read_poly_lines(std::string_view contents);

FqPoly reduce_mod(const IntPoly& f, const FieldCtx& field);
RatPoly to_rational(const IntPoly& f);

/// Substitutes a parameter point; the result is a polynomial in the x-variables only.
FqPoly specialize(const ParametricFamily& fam, std::span<const Fq> params);
IntPoly specialize(const ParametricFamily& fam, std::span<const mpz_class> params);

/// True when every term has total degree <= 1 in the parameters.
bool is_linear_in_params(const ParametricFamily& fam);

}  // namespace nodehunt
