#pragma once

#include <cstddef>
#include <vector>

#include "polarmap/form.hpp"

namespace polarmap {

/// A small dense matrix of ternary forms sharing one field. Rows are not
/// required to be homogeneous of a common degree; determinants of weighted
/// matrices (Sylvester, Hessian) are still homogeneous.
class FormMatrix {
 public:
  FormMatrix(std::size_t rows, std::size_t cols, Field field = Field::rationals());
  explicit FormMatrix(std::vector<std::vector<TernaryForm>> entries);

  std::size_t rows() const { return entries_.size(); }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  const TernaryForm& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  TernaryForm& operator()(std::size_t i, std::size_t j) { return entries_[i][j]; }

  FormMatrix transposed() const;
  bool is_symmetric() const;
  /// Deletes row `row` and column `col`.
  FormMatrix minor_matrix(std::size_t row, std::size_t col) const;

  friend bool operator==(const FormMatrix& a, const FormMatrix& b) = default;

 private:
  std::vector<std::vector<TernaryForm>> entries_;
  std::size_t cols_;
  Field field_;
};

/// Cofactor expansion for sizes 1 to 3, fraction-free elimination above.
/// Throws DomainError on non-square input.
TernaryForm determinant(const FormMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix with polynomial
/// entries. Every intermediate division is exact.
TernaryForm bareiss_determinant(std::vector<std::vector<TernaryForm>> m, Field field);

}  // namespace polarmap
