#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sexpansion/error.hpp"
#include "sexpansion/rational.hpp"

namespace sexpansion {

/// Dense rational matrix, 1-based accessors like everything else here.
/// 0×0 matrices are legal (they arise as Killing forms of dimension-0
/// algebras) and have determinant 1.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(checked_size(rows, cols)) {}

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw ShapeMismatch("ragged rows");
      for (int j = 0; j < c; ++j) m.at(i + 1, j + 1) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[index(r, c)]; }
  const Rational& at(int r, int c) const { return a_[index(r, c)]; }

  bool is_zero() const {
    for (const Rational& x : a_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  static std::size_t checked_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }

  std::size_t index(int r, int c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_)
      throw IndexOutOfRange("matrix index (" + std::to_string(r) + "," +
                            std::to_string(c) + ") outside " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
    return static_cast<std::size_t>(r - 1) * cols_ + (c - 1);
  }

  int rows_, cols_;
  std::vector<Rational> a_;
};

namespace detail {

/// Row echelon form of the integer matrix by Bareiss fraction-free
/// elimination: every division is exact, intermediate entries are minors of
/// the input. Returns pivot count (= rank); `det_sign` accumulates row-swap
/// signs; on return `m` holds the echelon rows.
inline int bareiss_echelon(std::vector<std::vector<Int>>& m, int& det_sign) {
  det_sign = 1;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  Int prev = 1;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      det_sign = -det_sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        Int num = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        Int q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0)
          throw std::logic_error("fraction-free elimination: inexact division");
        m[i][j] = std::move(q);
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

/// Clears denominators row by row; returns the integer matrix and per-row
/// scale factors (original row × scale = integer row).
inline std::vector<std::vector<Int>> scale_to_integers(const RationalMatrix& m,
                                                       std::vector<Int>& scales) {
  std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols()));
  scales.assign(m.rows(), Int(1));
  for (int r = 1; r <= m.rows(); ++r) {
    Int l = 1;
    for (int c = 1; c <= m.cols(); ++c) {
      Int den = denominator(m.at(r, c));
      l = boost::multiprecision::lcm(l, den);
    }
    scales[r - 1] = l;
    for (int c = 1; c <= m.cols(); ++c) {
      Rational v = m.at(r, c) * l;
      out[r - 1][c - 1] = numerator(v);
    }
  }
  return out;
}

}  // namespace detail

inline int exact_rank(const RationalMatrix& m) {
  std::vector<Int> scales;
  auto im = detail::scale_to_integers(m, scales);
  int sign;
  return detail::bareiss_echelon(im, sign);
}

/// Exact determinant; requires a square matrix. det of the 0×0 matrix is 1.
inline Rational exact_det(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw ShapeMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  std::vector<Int> scales;
  auto im = detail::scale_to_integers(m, scales);
  int sign;
  int rank = detail::bareiss_echelon(im, sign);
  if (rank < m.rows()) return Rational(0);
  // Bareiss leaves det(integer matrix) = sign · last pivot.
  Rational det(im[m.rows() - 1][m.rows() - 1]);
  if (sign < 0) det = -det;
  for (const Int& s : scales) det /= Rational(s);
  return det;
}

/// Basis of the row space: the nonzero echelon rows, each scaled to
/// coprime integer entries with positive leading coefficient. Deterministic.
inline std::vector<std::vector<Rational>> row_space_basis(const RationalMatrix& m) {
  std::vector<Int> scales;
  auto im = detail::scale_to_integers(m, scales);
  int sign;
  int rank = detail::bareiss_echelon(im, sign);
  std::vector<std::vector<Rational>> basis;
  basis.reserve(rank);
  for (int r = 0; r < rank; ++r) {
    Int g = 0;
    for (const Int& x : im[r]) g = boost::multiprecision::gcd(g, x);
    const Int* lead = nullptr;
    for (const Int& x : im[r])
      if (x != 0) {
        lead = &x;
        break;
      }
    if (!lead) continue;  // unreachable: rows above rank are nonzero
    if (*lead < 0) g = -g;
    std::vector<Rational> row(im[r].size());
    for (std::size_t c = 0; c < im[r].size(); ++c) row[c] = Rational(im[r][c] / g);
    basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace sexpansion
