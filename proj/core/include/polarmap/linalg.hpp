#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polarmap/form.hpp"

namespace polarmap {

/// Dense row-major matrix of scalars from one field.
using ScalarMatrix = std::vector<std::vector<Scalar>>;

struct RowEchelon {
  ScalarMatrix reduced;               ///< reduced row echelon form
  std::vector<std::size_t> pivots;    ///< pivot column of each nonzero row
};

/// Exact Gauss-Jordan elimination. `cols` is needed when `m` has no rows.
RowEchelon row_reduce(ScalarMatrix m, std::size_t cols);

std::size_t rank(const ScalarMatrix& m, std::size_t cols);

/// Basis of {v : m v = 0}, one vector per free column, each with a 1 in its
/// free position.
std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m, std::size_t cols, Field field);

/// Some solution of m v = rhs, or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, std::span<const Scalar> rhs,
                                         std::size_t cols, Field field);

/// Coordinates of f in the monomial basis of degree `degree`, indexed as in
/// monomials_of_degree(). A zero form yields the zero vector.
std::vector<Scalar> coefficient_vector(const TernaryForm& f, int degree);
TernaryForm form_from_vector(std::span<const Scalar> coords, int degree, Field field);

/// Index of the exponent triple e within monomials_of_degree(total_degree(e)).
std::size_t monomial_index(const Exponents& e);

}  // namespace polarmap
