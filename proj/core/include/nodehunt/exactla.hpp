#pragma once

// Dense exact linear algebra over a coefficient domain. Finite fields use
// plain Gaussian elimination; the rational overloads (declared at the bottom)
// go through fraction-free Bareiss elimination on integer rows.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nodehunt/domain.hpp"
#include "nodehunt/error.hpp"

namespace nodehunt {

template <class D>
class Matrix {
 public:
  using value_type = typename D::value_type;

  Matrix() = default;
  Matrix(D dom, std::size_t rows, std::size_t cols)
      : dom_(dom), rows_(rows), cols_(cols), data_(rows * cols, dom.zero()) {}

  static Matrix identity(D dom, std::size_t n) {
    Matrix m(dom, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = dom.one();
    return m;
  }

  static Matrix from_rows(D dom, const std::vector<std::vector<value_type>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(dom, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const D& domain() const { return dom_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void append_row(std::span<const value_type> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "appended row has wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(dom_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<value_type> apply(std::span<const value_type> v) const {
    if (v.size() != cols_) {
      throw Error(Errc::DimensionMismatch, "vector of length " + std::to_string(v.size()) + " against " +
                                               std::to_string(cols_) + " columns");
    }
    std::vector<value_type> out(rows_, dom_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      value_type acc = dom_.zero();
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!D::is_zero(v[j])) acc += (*this)(i, j) * v[j];
      }
      out[i] = acc;
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(a.dom_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (D::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

 private:
  D dom_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

using RatMatrix = Matrix<Rationals>;
using FqMatrix = Matrix<FiniteField>;

template <class D>
struct Rref {
  Matrix<D> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

template <class D>
using Vec = std::vector<typename D::value_type>;

/// Reduced row-echelon form by Gauss-Jordan elimination over a field.
template <class D>
Rref<D> rref(Matrix<D> a) {
  const D dom = a.domain();
  Rref<D> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && D::is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    const typename D::value_type scale = dom.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= scale;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || D::is_zero(a(i, c))) continue;
      const typename D::value_type f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!D::is_zero(a(r, j))) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(a);
  return out;
}

/// Right kernel basis read off the RREF: one vector per free column.
template <class D>
std::vector<Vec<D>> nullspace_from_rref(const Rref<D>& r) {
  const auto& m = r.reduced;
  const D dom = m.domain();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vec<D>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<D> v(m.cols(), dom.zero());
    v[free] = dom.one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class D>
std::vector<Vec<D>> nullspace(const Matrix<D>& a) {
  return nullspace_from_rref(rref(a));
}

template <class D>
std::size_t rank(const Matrix<D>& a) {
  return rref(a).rank;
}

template <class D>
typename D::value_type determinant(Matrix<D> a) {
  if (a.rows() != a.cols()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  const D dom = a.domain();
  typename D::value_type det = dom.one();
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && D::is_zero(a(piv, c))) ++piv;
    if (piv == n) return dom.zero();
    if (piv != c) {
      a.swap_rows(piv, c);
      det = -det;
    }
    det *= a(c, c);
    const typename D::value_type inv = dom.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (D::is_zero(a(i, c))) continue;
      const typename D::value_type f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// One solution of A x = b, or nullopt when the system is inconsistent.
template <class D>
std::optional<Vec<D>> solve_particular(const Matrix<D>& a, std::span<const typename D::value_type> b) {
  if (b.size() != a.rows()) throw Error(Errc::DimensionMismatch, "right-hand side length mismatch");
  const D dom = a.domain();
  Matrix<D> aug(dom, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto r = rref(std::move(aug));
  if (r.rank > 0 && r.pivots[r.rank - 1] == a.cols()) return std::nullopt;
  Vec<D> x(a.cols(), dom.zero());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

/// Row-streamed reducer: keeps only an RREF basis of the rows seen so far, so
/// memory is rank x cols regardless of how many rows are fed in.
template <class D>
class RowReducer {
 public:
  RowReducer(D dom, std::size_t cols) : dom_(dom), cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return basis_.size(); }

  /// Returns true if the row increased the rank.
  bool add_row(Vec<D> row) {
    if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "streamed row has wrong length");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const auto c = pivots_[k];
      if (D::is_zero(row[c])) continue;
      const typename D::value_type f = row[c];
      for (std::size_t j = c; j < cols_; ++j) {
        if (!D::is_zero(basis_[k][j])) row[j] -= f * basis_[k][j];
      }
    }
    std::size_t lead = 0;
    while (lead < cols_ && D::is_zero(row[lead])) ++lead;
    if (lead == cols_) return false;
    const typename D::value_type s = dom_.inv(row[lead]);
    for (std::size_t j = lead; j < cols_; ++j) row[j] *= s;
    for (auto& b : basis_) {
      if (D::is_zero(b[lead])) continue;
      const typename D::value_type f = b[lead];
      for (std::size_t j = lead; j < cols_; ++j) {
        if (!D::is_zero(row[j])) b[j] -= f * row[j];
      }
    }
    // Keep pivots sorted so the basis stays in RREF.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    return true;
  }

  Rref<D> result() const {
    Matrix<D> m(dom_, basis_.size(), cols_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = basis_[i][j];
    return Rref<D>{std::move(m), pivots_, basis_.size()};
  }

  std::vector<Vec<D>> kernel() const { return nullspace_from_rref(result()); }

 private:
  D dom_;
  std::size_t cols_;
  std::vector<Vec<D>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical RREF basis of the span of `vectors` (empty input allowed).
template <class D>
std::vector<Vec<D>> canonical_span(D dom, std::size_t dim, const std::vector<Vec<D>>& vectors) {
  RowReducer<D> red(dom, dim);
  for (const auto& v : vectors) red.add_row(v);
  const auto r = red.result();
  std::vector<Vec<D>> out;
  for (std::size_t i = 0; i < r.rank; ++i) {
    auto row = r.reduced.row(i);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

/// Intersection of two subspaces given by spanning sets: each is rewritten
/// as the kernel of its annihilator, and the stacked annihilators are solved.
template <class D>
std::vector<Vec<D>> intersect_spans(D dom, std::size_t dim, const std::vector<Vec<D>>& a,
                                    const std::vector<Vec<D>>& b) {
  auto annihilator = [&](const std::vector<Vec<D>>& span) {
    RowReducer<D> red(dom, dim);
    for (const auto& v : span) red.add_row(v);
    return red.kernel();
  };
  RowReducer<D> stacked(dom, dim);
  for (auto& v : annihilator(a)) stacked.add_row(std::move(v));
  for (auto& v : annihilator(b)) stacked.add_row(std::move(v));
  return canonical_span(dom, dim, stacked.kernel());
}

// Exact rational overloads (fraction-free elimination).

/// Bareiss elimination of an integer matrix to row-echelon form in place.
/// Returns pivot columns; `sign` receives the row-swap parity.
std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<mpz_class>>& m, int& sign);

Rref<Rationals> rref(const RatMatrix& a);
/// Kernel vectors normalized to primitive integers with a positive first nonzero entry.
std::vector<Vec<Rationals>> nullspace(const RatMatrix& a);
mpq_class determinant(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);

/// Parses the matrix text format: one row per line, whitespace separated
/// integers or a/b rationals; brackets are ignored.
RatMatrix parse_matrix(std::string_view text);
std::string format_matrix(const RatMatrix& m);

/// Scales a rational vector to a primitive integer vector whose first nonzero
/// entry is positive.
Vec<Rationals> primitive_integer(Vec<Rationals> v);

}  // namespace nodehunt
