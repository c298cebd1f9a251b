#include "nodehunt/poly.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

namespace nodehunt {

namespace {

void fill_exact(int nvars, int var, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (var == nvars - 1) {
    cur[var] = static_cast<std::uint32_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = static_cast<std::uint32_t>(e);
    fill_exact(nvars, var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

// Recursive-descent parser for the family grammar. The coefficient hook
// lets the same grammar produce integer or finite-field coefficients.
template <class Coeff>
class TermParser {
 public:
  using CoeffFromInt = std::function<Coeff(const mpz_class&)>;
  using CoeffFromParen = std::function<Coeff(std::string_view)>;

  TermParser(std::string_view text, int nvars, int nparams, CoeffFromInt from_int, CoeffFromParen from_paren)
      : text_(text), nvars_(nvars), nparams_(nparams), from_int_(std::move(from_int)),
        from_paren_(std::move(from_paren)) {}

  template <class Sink>
  void parse(Sink&& sink) {
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      sink(e, c, negative);
    }
  }

 private:
  char peek() const { return text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<Exponents, std::optional<Coeff>> term() {
    Exponents e(nvars_ + nparams_, 0);
    std::optional<Coeff> coeff;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = from_int_(mpz_class(digits()));
      skip();
      need_factor = false;
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip();
        need_factor = true;
      }
    } else if (peek() == '(') {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      const std::size_t inner_start = pos_ + 1;
      try {
        coeff = from_paren_(text_.substr(inner_start, close - inner_start));
      } catch (const Error& err) {
        if (err.code() == Errc::SyntaxError || err.code() == Errc::Usage) fail(err.what());
        throw;
      }
      pos_ = close + 1;
      skip();
      need_factor = false;
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip();
        need_factor = true;
      }
    }
    if (!need_factor) return {e, coeff};
    while (true) {
      factor(e);
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip();
        continue;
      }
      break;
    }
    return {e, coeff};
  }

  void factor(Exponents& e) {
    if (at_end()) fail("expected variable");
    const char kind = peek();
    const std::size_t start = pos_;
    if (kind != 'x' && kind != 'p') {
      // Consume an identifier for a useful message.
      while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail(std::string("unexpected character '") + kind + "'");
      throw Error(Errc::UnknownVariable, "'" + std::string(text_.substr(start, pos_ - start)) + "'");
    }
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
    const std::string idx_text = digits();
    const long idx = std::stol(idx_text);
    int slot = -1;
    if (kind == 'x' && idx < nvars_) slot = static_cast<int>(idx);
    if (kind == 'p' && idx >= 1 && idx <= nparams_) slot = nvars_ + static_cast<int>(idx) - 1;
    if (slot < 0) throw Error(Errc::UnknownVariable, "'" + std::string(1, kind) + idx_text + "'");
    skip();
    std::uint32_t power = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      power = static_cast<std::uint32_t>(std::stoul(digits()));
    }
    e[slot] += power;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int nvars_;
  int nparams_;
  CoeffFromInt from_int_;
  CoeffFromParen from_paren_;
};

}  // namespace

std::vector<Exponents> monomial_basis(int nvars, int degree, DegreeMode mode) {
  std::vector<Exponents> out;
  if (nvars < 1 || degree < 0) return out;
  Exponents cur(nvars, 0);
  const int lowest = mode == DegreeMode::Exactly ? degree : 0;
  for (int d = degree; d >= lowest; --d) fill_exact(nvars, 0, d, cur, out);
  return out;
}

namespace detail {

std::string format_monomial(const Exponents& e, const VarNames& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.name(static_cast<int>(i));
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace detail

ParametricFamily parse_family(std::string_view text, int nvars, int nparams) {
  if (nvars < 0 || nparams < 0) throw Error(Errc::Usage, "negative variable count");
  TermParser<mpz_class> parser(
      text, nvars, nparams, [](const mpz_class& v) { return v; },
      [](std::string_view inner) -> mpz_class {
        throw Error(Errc::SyntaxError, "parenthesized coefficient '" + std::string(inner) +
                                           "' is only valid over an extension field");
      });
  ParametricFamily fam;
  fam.nvars = nvars;
  fam.nparams = nparams;
  fam.poly = IntPoly(Integers{}, nvars + nparams);
  parser.parse([&](const Exponents& e, const std::optional<mpz_class>& c, bool negative) {
    mpz_class v = c.value_or(1);
    fam.poly.add_term(e, negative ? mpz_class(-v) : v);
  });
  std::optional<int> hdeg;
  bool homogeneous = !fam.poly.is_zero();
  for (const auto& [e, c] : fam.poly.terms()) {
    int d = 0;
    for (int i = 0; i < nvars; ++i) d += static_cast<int>(e[i]);
    if (!hdeg) hdeg = d;
    if (*hdeg != d) homogeneous = false;
  }
  if (homogeneous) fam.homogeneous_degree = hdeg;
  return fam;
}

FqPoly parse_poly_over(std::string_view text, const FieldCtx& field, int nvars, int nparams) {
  FiniteField dom(field);
  TermParser<Fq> parser(
      text, nvars, nparams, [&](const mpz_class& v) { return dom.from_integer(v); },
      [&](std::string_view inner) { return field.parse(inner); });
  FqPoly f(dom, nvars + nparams);
  parser.parse([&](const Exponents& e, const std::optional<Fq>& c, bool negative) {
    Fq v = c.value_or(field.one());
    f.add_term(e, negative ? -v : v);
  });
  return f;
}

std::vector<std::string> read_poly_lines(std::string_view contents) {
  std::vector<std::string> out;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

FqPoly reduce_mod(const IntPoly& f, const FieldCtx& field) {
  FiniteField dom(field);
  return f.map_coeffs(dom, [&](const mpz_class& c) { return dom.from_integer(c); });
}

RatPoly to_rational(const IntPoly& f) {
  return f.map_coeffs(Rationals{}, [](const mpz_class& c) { return mpq_class(c); });
}

namespace {

template <class D, class Param>
Poly<D> specialize_impl(const ParametricFamily& fam, std::span<const Param> params, D dom,
                        const std::function<typename D::value_type(const mpz_class&)>& embed) {
  if (static_cast<int>(params.size()) != fam.nparams) {
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(fam.nparams) + " parameter values, got " +
                                             std::to_string(params.size()));
  }
  Poly<D> out(dom, fam.nvars);
  for (const auto& [e, c] : fam.poly.terms()) {
    typename D::value_type v = embed(c);
    for (int j = 0; j < fam.nparams; ++j) {
      for (std::uint32_t k = 0; k < e[fam.nvars + j]; ++k) v *= params[j];
    }
    out.add_term(Exponents(e.begin(), e.begin() + fam.nvars), v);
  }
  return out;
}

}  // namespace

FqPoly specialize(const ParametricFamily& fam, std::span<const Fq> params) {
  if (params.empty()) {
    throw Error(Errc::ContextMismatch, "specialize over a finite field needs a field; use reduce_mod for 0 parameters");
  }
  const FieldCtx* ctx = params.front().ctx();
  for (const auto& v : params) {
    if (v.ctx() != ctx) throw Error(Errc::ContextMismatch, "parameter values over different fields");
  }
  FiniteField dom(*ctx);
  return specialize_impl<FiniteField, Fq>(fam, params, dom, [&](const mpz_class& c) { return dom.from_integer(c); });
}

IntPoly specialize(const ParametricFamily& fam, std::span<const mpz_class> params) {
  return specialize_impl<Integers, mpz_class>(fam, params, Integers{}, [](const mpz_class& c) { return c; });
}

bool is_linear_in_params(const ParametricFamily& fam) {
  return fam.poly.degree_in(fam.nvars, fam.nvars + fam.nparams) <= 1;
}

}  // namespace nodehunt
