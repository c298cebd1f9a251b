#pragma once

// Prime and extension finite fields GF(p^k) with a fixed power basis
// {1, t, ..., t^(k-1)}. Contexts are interned: field_create(p, k) always
// returns the same object for the same (p, k), so elements can carry a raw
// context pointer and cross-context arithmetic is detected by pointer compare.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nodehunt/error.hpp"

namespace nodehunt {

bool is_prime(std::uint64_t n) noexcept;

class Fq;

class FieldCtx {
 public:
  std::uint32_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  /// Number of elements, p^k.
  std::uint64_t order() const noexcept { return order_; }
  /// Monic modulus coefficients, low degree first (length k+1). Empty when k == 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Fq zero() const;
  Fq one() const;
  Fq from_int(std::int64_t v) const;
  /// Element with the given packed code sum c_i p^i, 0 <= code < p^k.
  Fq from_code(std::uint64_t code) const;
  Fq from_basis_tuple(std::span<const std::uint32_t> coeffs) const;
  Fq generator_t() const;

  /// Parses decimal integers (prime fields) or polynomials in t such as `3*t+1`.
  Fq parse(std::string_view text) const;

  // Raw packed-code arithmetic; used by the Fq operators and by hot loops.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t neg(std::uint64_t a) const noexcept;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;

  std::string describe() const;

 private:
  friend const FieldCtx& field_create(std::uint64_t p, int k);
  FieldCtx(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

  void unpack(std::uint64_t code, std::uint32_t* digits) const noexcept;
  std::uint64_t pack(const std::uint32_t* digits) const noexcept;
  std::uint64_t mul_ext(std::uint64_t a, std::uint64_t b) const noexcept;

  std::uint32_t p_;
  unsigned k_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> powers_;  // p^i
};

/// Returns the interned context for GF(p^k). The modulus is the first monic
/// irreducible of degree k when candidates are ordered by their packed code
/// (constant term least significant).
const FieldCtx& field_create(std::uint64_t p, int k = 1);

/// Element of a finite field. Plain value type: a context pointer plus a packed code.
class Fq {
 public:
  Fq() = default;
  Fq(const FieldCtx* ctx, std::uint64_t code) : ctx_(ctx), code_(code) {}

  const FieldCtx* ctx() const noexcept { return ctx_; }
  std::uint64_t code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept { return code_ == 1; }

  std::vector<std::uint32_t> to_basis_tuple() const;
  Fq inv() const;
  Fq pow(std::uint64_t e) const;
  std::string str() const;

  Fq& operator+=(const Fq& o);
  Fq& operator-=(const Fq& o);
  Fq& operator*=(const Fq& o);
  Fq& operator/=(const Fq& o) { return *this *= o.inv(); }

  friend Fq operator+(Fq a, const Fq& b) { return a += b; }
  friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
  friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
  friend Fq operator/(Fq a, const Fq& b) { return a /= b; }
  Fq operator-() const { return {ctx_, ctx_->neg(code_)}; }

  friend bool operator==(const Fq& a, const Fq& b) noexcept {
    return a.ctx_ == b.ctx_ && a.code_ == b.code_;
  }
  friend auto operator<=>(const Fq& a, const Fq& b) noexcept { return a.code_ <=> b.code_; }

 private:
  void check_same(const Fq& o) const;

  const FieldCtx* ctx_ = nullptr;
  std::uint64_t code_ = 0;
};

inline Fq inv(const Fq& a) { return a.inv(); }

/// Parses `p` or `p,k` (CLI field syntax).
const FieldCtx& parse_field_spec(std::string_view spec);

}  // namespace nodehunt
