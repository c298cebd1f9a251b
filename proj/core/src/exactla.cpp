#include "nodehunt/exactla.hpp"

#include <numeric>
#include <sstream>

namespace nodehunt {

namespace {

// Row-scales a rational matrix to integers. Returns the per-row scale factors.
std::vector<std::vector<mpz_class>> integer_rows(const RatMatrix& a, std::vector<mpz_class>* scales) {
  std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols()));
  if (scales) scales->assign(a.rows(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    if (scales) (*scales)[i] = l;
  }
  return m;
}

}  // namespace

std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<mpz_class>>& m, int& sign) {
  sign = 1;
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Rref<Rationals> rref(const RatMatrix& a) {
  auto m = integer_rows(a, nullptr);
  int sign = 0;
  const auto pivots = bareiss_echelon(m, sign);
  const std::size_t rk = pivots.size();
  RatMatrix red(Rationals{}, a.rows(), a.cols());
  for (std::size_t i = 0; i < rk; ++i) {
    // Divide by the gcd of the row first to keep the back-substitution small.
    mpz_class g = 0;
    for (const auto& v : m[i]) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) red(i, j) = mpq_class(m[i][j] / g);
  }
  for (std::size_t k = rk; k-- > 0;) {
    const std::size_t c = pivots[k];
    const mpq_class piv = red(k, c);
    for (std::size_t j = c; j < a.cols(); ++j) red(k, j) /= piv;
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(red(i, c)) == 0) continue;
      const mpq_class f = red(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) red(i, j) -= f * red(k, j);
    }
  }
  return Rref<Rationals>{std::move(red), pivots, rk};
}

Vec<Rationals> primitive_integer(Vec<Rationals> v) {
  mpz_class den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  mpz_class g = 0;
  for (auto& x : v) {
    x *= den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g == 0) return v;
  int lead = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      lead = sgn(x);
      break;
    }
  }
  if (lead < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

std::vector<Vec<Rationals>> nullspace(const RatMatrix& a) {
  auto basis = nullspace_from_rref(rref(a));
  for (auto& v : basis) v = primitive_integer(std::move(v));
  return basis;
}

mpq_class determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  std::vector<mpz_class> scales;
  auto m = integer_rows(a, &scales);
  int sign = 0;
  const auto pivots = bareiss_echelon(m, sign);
  if (pivots.size() < a.rows()) return 0;
  mpq_class det(m.back().back() * sign);
  for (const auto& s : scales) det /= s;
  det.canonicalize();
  return det;
}

std::size_t rank(const RatMatrix& a) {
  auto m = integer_rows(a, nullptr);
  int sign = 0;
  return bareiss_echelon(m, sign).size();
}

RatMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<mpq_class>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line) {
      if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
    }
    std::istringstream tokens(line);
    std::vector<mpq_class> row;
    std::string tok;
    while (tokens >> tok) {
      mpq_class v;
      if (v.set_str(tok, 10) != 0) {
        throw Error(Errc::SyntaxError, "line " + std::to_string(lineno) + ": bad matrix entry '" + tok + "'");
      }
      if (v.get_den() == 0) throw Error(Errc::DivisionByZero, "line " + std::to_string(lineno) + ": zero denominator");
      v.canonicalize();
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(Errc::DimensionMismatch, "line " + std::to_string(lineno) + ": row has " +
                                               std::to_string(row.size()) + " entries, expected " +
                                               std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  return RatMatrix::from_rows(Rationals{}, rows);
}

std::string format_matrix(const RatMatrix& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i * m.cols() + j] = m(i, j).get_str();
      width = std::max(width, cells[i * m.cols() + j].size());
    }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[i * m.cols() + j];
      if (j) out += ' ';
      out += std::string(width - c.size(), ' ') + c;
    }
    out += "]\n";
  }
  return out;
}

}  // namespace nodehunt
