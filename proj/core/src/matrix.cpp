#include "polarmap/matrix.hpp"

#include "polarmap/elimination.hpp"
#include "polarmap/error.hpp"

namespace polarmap {

FormMatrix::FormMatrix(std::size_t rows, std::size_t cols, Field field)
    : entries_(rows, std::vector<TernaryForm>(cols, TernaryForm(0, field))),
      cols_(cols),
      field_(field) {}

FormMatrix::FormMatrix(std::vector<std::vector<TernaryForm>> entries)
    : entries_(std::move(entries)),
      cols_(entries_.empty() ? 0 : entries_[0].size()),
      field_(entries_.empty() || entries_[0].empty() ? Field::rationals()
                                                     : entries_[0][0].field()) {
  for (const auto& row : entries_) {
    if (row.size() != cols_) throw DomainError("ragged form matrix");
    for (const auto& e : row) {
      if (e.field() != field_) throw FieldMismatch("form matrix entries from different fields");
    }
  }
}

FormMatrix FormMatrix::transposed() const {
  FormMatrix t(cols_, rows(), field_);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = entries_[i][j];
  }
  return t;
}

bool FormMatrix::is_symmetric() const { return rows() == cols_ && transposed() == *this; }

FormMatrix FormMatrix::minor_matrix(std::size_t row, std::size_t col) const {
  std::vector<std::vector<TernaryForm>> out;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i == row) continue;
    std::vector<TernaryForm> r;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != col) r.push_back(entries_[i][j]);
    }
    out.push_back(std::move(r));
  }
  FormMatrix result(std::move(out));
  result.field_ = field_;
  return result;
}

TernaryForm determinant(const FormMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DomainError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + " matrix");
  }
  const Field field = m.field();
  switch (m.rows()) {
    case 0:
      return TernaryForm::constant(Scalar::one(field));
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default: {
      std::vector<std::vector<TernaryForm>> entries(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) entries[i].push_back(m(i, j));
      }
      return bareiss_determinant(std::move(entries), field);
    }
  }
}

TernaryForm bareiss_determinant(std::vector<std::vector<TernaryForm>> m, Field field) {
  const std::size_t n = m.size();
  if (n == 0) return TernaryForm::constant(Scalar::one(field));
  bool negate = false;
  TernaryForm previous = TernaryForm::constant(Scalar::one(field));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return TernaryForm(0, field);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        TernaryForm numerator = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_quotient(numerator, previous);
      }
      m[i][k] = TernaryForm(0, field);
    }
    previous = m[k][k];
  }
  TernaryForm det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace polarmap
