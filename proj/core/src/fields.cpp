#include "nodehunt/fields.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>

namespace nodehunt {

std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::InvalidDegree: return "InvalidDegree";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotSquare: return "NotSquare";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotLinearInParams: return "NotLinearInParams";
    case Errc::NotSingular: return "NotSingular";
    case Errc::InsufficientPoints: return "InsufficientPoints";
    case Errc::NotOnVariety: return "NotOnVariety";
    case Errc::DuplicatePrime: return "DuplicatePrime";
    case Errc::NoReconstruction: return "NoReconstruction";
    case Errc::HeldOutMismatch: return "HeldOutMismatch";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NotAGenerator: return "NotAGenerator";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::InconsistentData: return "InconsistentData";
    case Errc::NegativeH0: return "NegativeH0";
    case Errc::UnknownName: return "UnknownName";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Dense polynomials over GF(p), low degree first, used only for the
// irreducibility search.
using Dense = std::vector<u64>;

void trim(Dense& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Dense poly_mod(Dense a, const Dense& m, u64 p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const u64 lead_inv = powmod64(m.back(), p - 2, p);
  while (a.size() > dm && !a.empty()) {
    const u64 c = mulmod64(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod64(c, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Dense poly_mulmod(const Dense& a, const Dense& b, const Dense& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod64(a[i], b[j], p)) % p;
  }
  return poly_mod(std::move(r), m, p);
}

Dense poly_powmod(Dense base, u64 e, const Dense& m, u64 p) {
  Dense r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Dense poly_gcd(Dense a, Dense b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// t^(p^j) mod f, by repeated p-th powering.
Dense frobenius_iterate(const Dense& f, unsigned j, u64 p) {
  Dense x{0, 1};
  x = poly_mod(x, f, p);
  for (unsigned i = 0; i < j; ++i) x = poly_powmod(x, p, f, p);
  return x;
}

// Rabin's test for monic f of degree k.
bool is_irreducible(const Dense& f, unsigned k, u64 p) {
  if (k == 1) return true;
  if (f[0] == 0) return false;
  Dense full = frobenius_iterate(f, k, p);
  Dense t = poly_mod(Dense{0, 1}, f, p);
  if (full != t) return false;
  for (unsigned r = 2; r <= k; ++r) {
    if (k % r != 0 || !is_prime(r)) continue;
    Dense h = frobenius_iterate(f, k / r, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    Dense g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

[[noreturn]] void syntax(std::string_view text, std::size_t pos, const std::string& msg) {
  throw Error(Errc::SyntaxError, "column " + std::to_string(pos + 1) + " in '" + std::string(text) + "': " + msg);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldCtx::FieldCtx(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  powers_.resize(k_ + 1);
  powers_[0] = 1;
  for (unsigned i = 1; i <= k_; ++i) powers_[i] = powers_[i - 1] * p_;
  order_ = powers_[k_];
}

const FieldCtx& field_create(std::uint64_t p, int k) {
  if (k < 1) throw Error(Errc::InvalidDegree, "extension degree must be >= 1, got " + std::to_string(k));
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  u128 order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > (u128{1} << 32)) throw Error(Errc::InvalidDegree, "p^k exceeds 2^32");
  }

  static std::mutex mu;
  static std::map<std::pair<u64, int>, std::unique_ptr<FieldCtx>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, k}];
  if (slot) return *slot;

  std::vector<std::uint32_t> modulus;
  if (k > 1) {
    const u64 candidates = static_cast<u64>(order);
    for (u64 code = 0; code < candidates; ++code) {
      Dense f(k + 1);
      u64 c = code;
      for (int i = 0; i < k; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[k] = 1;
      if (is_irreducible(f, static_cast<unsigned>(k), p)) {
        modulus.assign(f.begin(), f.end());
        break;
      }
    }
  }
  slot.reset(new FieldCtx(static_cast<std::uint32_t>(p), static_cast<unsigned>(k), std::move(modulus)));
  return *slot;
}

void FieldCtx::unpack(u64 code, std::uint32_t* digits) const noexcept {
  for (unsigned i = 0; i < k_; ++i) {
    digits[i] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
}

u64 FieldCtx::pack(const std::uint32_t* digits) const noexcept {
  u64 code = 0;
  for (unsigned i = k_; i-- > 0;) code = code * p_ + digits[i];
  return code;
}

u64 FieldCtx::add(u64 a, u64 b) const noexcept {
  if (k_ == 1) {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t da[32], db[32];
  unpack(a, da);
  unpack(b, db);
  for (unsigned i = 0; i < k_; ++i) {
    u64 s = u64{da[i]} + db[i];
    da[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return pack(da);
}

u64 FieldCtx::neg(u64 a) const noexcept {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t da[32];
  unpack(a, da);
  for (unsigned i = 0; i < k_; ++i) da[i] = da[i] == 0 ? 0 : p_ - da[i];
  return pack(da);
}

u64 FieldCtx::sub(u64 a, u64 b) const noexcept { return add(a, neg(b)); }

u64 FieldCtx::mul(u64 a, u64 b) const noexcept {
  if (k_ == 1) return a * b % p_;
  return mul_ext(a, b);
}

u64 FieldCtx::mul_ext(u64 a, u64 b) const noexcept {
  std::uint32_t da[32], db[32];
  u64 prod[64] = {};
  unpack(a, da);
  unpack(b, db);
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + u64{da[i]} * db[j]) % p_;
  }
  // Reduce by the monic modulus: t^k = -sum m_i t^i.
  for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
    const u64 c = prod[d];
    if (c != 0) {
      prod[d] = 0;
      for (unsigned i = 0; i < k_; ++i) {
        prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
      }
    }
    if (d == k_) break;
  }
  std::uint32_t out[32];
  for (unsigned i = 0; i < k_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return pack(out);
}

u64 FieldCtx::inv(u64 a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in " + describe());
  if (k_ == 1) return powmod64(a, p_ - 2, p_);
  // a^(q-2) by square-and-multiply in the extension.
  u64 e = order_ - 2, r = 1, b = a;
  while (e) {
    if (e & 1) r = mul_ext(r, b);
    b = mul_ext(b, b);
    e >>= 1;
  }
  return r;
}

Fq FieldCtx::zero() const { return {this, 0}; }
Fq FieldCtx::one() const { return {this, 1}; }

Fq FieldCtx::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<u64>(r)};
}

Fq FieldCtx::from_code(u64 code) const {
  if (code >= order_) throw Error(Errc::ContextMismatch, "code out of range for " + describe());
  return {this, code};
}

Fq FieldCtx::from_basis_tuple(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != k_) {
    throw Error(Errc::ContextMismatch,
                "basis tuple of length " + std::to_string(coeffs.size()) + " for degree " + std::to_string(k_));
  }
  std::uint32_t d[32];
  for (unsigned i = 0; i < k_; ++i) d[i] = coeffs[i] % p_;
  return {this, pack(d)};
}

Fq FieldCtx::generator_t() const {
  if (k_ == 1) throw Error(Errc::ContextMismatch, "prime field has no basis element t");
  return {this, p_};
}

std::string FieldCtx::describe() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

Fq FieldCtx::parse(std::string_view text) const {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&](u64& out) {
    const auto* first = text.data() + i;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), out);
    if (ec != std::errc{} || ptr == first) syntax(text, i, "expected integer");
    i += static_cast<std::size_t>(ptr - first);
  };

  Fq acc = zero();
  skip();
  if (i == text.size()) syntax(text, i, "empty element");
  bool first_term = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
      skip();
    } else if (!first_term) {
      syntax(text, i, "expected '+' or '-'");
    }
    first_term = false;
    Fq coeff = one();
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      u64 v = 0;
      read_uint(v);
      coeff = from_int(static_cast<std::int64_t>(v % p_));
      have_coeff = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        if (i == text.size() || text[i] != 't') syntax(text, i, "expected 't' after '*'");
      }
    }
    Fq term = coeff;
    if (i < text.size() && text[i] == 't') {
      if (k_ == 1) syntax(text, i, "symbol 't' in a prime field");
      ++i;
      skip();
      u64 e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        read_uint(e);
      }
      term = coeff * generator_t().pow(e);
    } else if (!have_coeff) {
      syntax(text, i, "expected coefficient or 't'");
    }
    acc += negative ? -term : term;
  }
  return acc;
}

std::vector<std::uint32_t> Fq::to_basis_tuple() const {
  std::vector<std::uint32_t> out(ctx_->k());
  u64 c = code_;
  for (auto& d : out) {
    d = static_cast<std::uint32_t>(c % ctx_->p());
    c /= ctx_->p();
  }
  return out;
}

void Fq::check_same(const Fq& o) const {
  if (ctx_ != o.ctx_) {
    throw Error(Errc::ContextMismatch, "mixing elements of " + (ctx_ ? ctx_->describe() : std::string("?")) +
                                           " and " + (o.ctx_ ? o.ctx_->describe() : std::string("?")));
  }
}

Fq& Fq::operator+=(const Fq& o) {
  check_same(o);
  code_ = ctx_->add(code_, o.code_);
  return *this;
}

Fq& Fq::operator-=(const Fq& o) {
  check_same(o);
  code_ = ctx_->sub(code_, o.code_);
  return *this;
}

Fq& Fq::operator*=(const Fq& o) {
  check_same(o);
  code_ = ctx_->mul(code_, o.code_);
  return *this;
}

Fq Fq::inv() const { return {ctx_, ctx_->inv(code_)}; }

Fq Fq::pow(std::uint64_t e) const {
  Fq r = ctx_->one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string Fq::str() const {
  if (ctx_->k() == 1) return std::to_string(code_);
  const auto digits = to_basis_tuple();
  std::string out;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(digits[i]);
      continue;
    }
    if (digits[i] != 1) out += std::to_string(digits[i]) + "*";
    out += 't';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

const FieldCtx& parse_field_spec(std::string_view spec) {
  u64 p = 0;
  int k = 1;
  const auto comma = spec.find(',');
  auto num = spec.substr(0, comma);
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
  if (ec != std::errc{} || ptr != num.data() + num.size()) {
    throw Error(Errc::Usage, "field spec must be p or p,k; got '" + std::string(spec) + "'");
  }
  if (comma != std::string_view::npos) {
    auto deg = spec.substr(comma + 1);
    auto [p2, ec2] = std::from_chars(deg.data(), deg.data() + deg.size(), k);
    if (ec2 != std::errc{} || p2 != deg.data() + deg.size()) {
      throw Error(Errc::Usage, "field spec must be p or p,k; got '" + std::string(spec) + "'");
    }
  }
  return field_create(p, k);
}

}  // namespace nodehunt
