#pragma once

// Coefficient domains. Each domain is a small value object that knows how to
// build constants of its element type; polynomials and matrices carry one so
// that zero/one can be produced without a sample element.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "nodehunt/fields.hpp"

namespace nodehunt {

struct Integers {
  using value_type = mpz_class;
  static constexpr bool is_field = false;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return mpz_class(static_cast<long>(v)); }
  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  static std::string str(const value_type& v) { return v.get_str(); }
  friend bool operator==(const Integers&, const Integers&) { return true; }
};

struct Rationals {
  using value_type = mpq_class;
  static constexpr bool is_field = true;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  value_type inv(const value_type& v) const {
    if (sgn(v) == 0) throw Error(Errc::DivisionByZero, "inverse of zero rational");
    return 1 / v;
  }
  static std::string str(const value_type& v) { return v.get_str(); }
  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

struct FiniteField {
  using value_type = Fq;
  static constexpr bool is_field = true;

  FiniteField() = default;
  explicit FiniteField(const FieldCtx& c) : ctx(&c) {}

  value_type zero() const { return ctx->zero(); }
  value_type one() const { return ctx->one(); }
  value_type from_int(std::int64_t v) const { return ctx->from_int(v); }
  value_type from_integer(const mpz_class& v) const {
    mpz_class r = v % ctx->p();
    if (r < 0) r += ctx->p();
    return ctx->from_int(static_cast<std::int64_t>(r.get_ui()));
  }
  static bool is_zero(const value_type& v) { return v.is_zero(); }
  value_type inv(const value_type& v) const { return v.inv(); }
  static std::string str(const value_type& v) { return v.str(); }
  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.ctx == b.ctx; }

  const FieldCtx* ctx = nullptr;
};

}  // namespace nodehunt
