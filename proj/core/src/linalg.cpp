#include "polarmap/linalg.hpp"

#include "polarmap/error.hpp"

namespace polarmap {

RowEchelon row_reduce(ScalarMatrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[row]);
    const Scalar inv = m[row][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Scalar factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        if (!m[row][j].is_zero()) m[i][j] -= factor * m[row][j];
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ScalarMatrix& m, std::size_t cols) {
  return row_reduce(m, cols).pivots.size();
}

std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m, std::size_t cols, Field field) {
  const RowEchelon ech = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(field));
    v[free] = Scalar::one(field);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      v[ech.pivots[r]] = -ech.reduced[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, std::span<const Scalar> rhs,
                                         std::size_t cols, Field field) {
  if (rhs.size() != m.size()) throw DomainError("right-hand side length mismatch");
  ScalarMatrix augmented = m;
  for (std::size_t i = 0; i < augmented.size(); ++i) augmented[i].push_back(rhs[i]);
  const RowEchelon ech = row_reduce(std::move(augmented), cols + 1);
  std::vector<Scalar> solution(cols, Scalar::zero(field));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == cols) return std::nullopt;
    solution[ech.pivots[r]] = ech.reduced[r][cols];
  }
  return solution;
}

std::size_t monomial_index(const Exponents& e) {
  // Order: e2 ascending, then e1 ascending; block for e2 = k has d - k + 1 entries.
  const int d = total_degree(e);
  std::size_t index = 0;
  for (int k = 0; k < e[2]; ++k) index += static_cast<std::size_t>(d - k + 1);
  return index + static_cast<std::size_t>(e[1]);
}

std::vector<Scalar> coefficient_vector(const TernaryForm& f, int degree) {
  const std::size_t n = static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
  std::vector<Scalar> v(n, Scalar::zero(f.field()));
  if (f.is_zero()) return v;
  if (f.degree() != degree) {
    throw DegreeMismatch("coefficient vector of degree " + std::to_string(degree) +
                         " requested for a form of degree " + std::to_string(f.degree()));
  }
  for (const auto& [e, c] : f.terms()) v[monomial_index(e)] = c;
  return v;
}

TernaryForm form_from_vector(std::span<const Scalar> coords, int degree, Field field) {
  const auto monomials = monomials_of_degree(degree);
  if (coords.size() != monomials.size()) throw DomainError("coefficient vector length mismatch");
  TernaryForm::Terms terms;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (!coords[i].is_zero()) terms.emplace(monomials[i], coords[i]);
  }
  return TernaryForm::from_terms(std::move(terms), degree, field);
}

}  // namespace polarmap
