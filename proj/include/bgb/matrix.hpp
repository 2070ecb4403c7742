#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bgb/poly.hpp"

namespace bgb {

/// Dense row-major matrix of ring elements.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill = E{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<E> column(std::size_t j) const {
    std::vector<E> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(std::size_t j, const std::vector<E>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }
  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

template <CoefficientRing R>
using PolyMatrix = Matrix<UniPoly<R>>;

/// Product of two matrices over a ring (or over UniPolyRing).
template <class Ring>
Matrix<typename Ring::value_type> multiply(const Ring& ring, const Matrix<typename Ring::value_type>& a,
                                           const Matrix<typename Ring::value_type>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix dimensions do not match");
  Matrix<typename Ring::value_type> c(a.rows(), b.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = ring.add(c(i, j), ring.mul(a(i, k), b(k, j)));
    }
  return c;
}

/// Greedy column rank profile over a field: the lexicographically first set
/// of column indices whose columns are linearly independent and span the
/// column space.
template <Field F>
std::vector<std::size_t> column_rank_profile(const F& field, const Matrix<typename F::value_type>& m) {
  using E = typename F::value_type;
  std::vector<std::vector<E>> basis;  // reduced columns, each normalized at its pivot
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> profile;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<E> v = m.column(j);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const E coef = v[pivot_rows[b]];
      if (field.is_zero(coef)) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = field.sub(v[i], field.mul(coef, basis[b][i]));
    }
    std::size_t piv = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!field.is_zero(v[i])) {
        piv = i;
        break;
      }
    if (piv == v.size()) continue;
    const E inv = field.inv(v[piv]);
    for (auto& a : v) a = field.mul(a, inv);
    basis.push_back(std::move(v));
    pivot_rows.push_back(piv);
    profile.push_back(j);
  }
  return profile;
}

}  // namespace bgb
