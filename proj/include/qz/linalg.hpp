#pragma once

#include <vector>

#include "qz/field.hpp"

namespace qz {

using Matrix = std::vector<std::vector<Elem>>;

Matrix identity_matrix(const FieldPtr& k, int n);

Elem det(const FieldPtr& k, Matrix a);

/* one solution of A x = b if the system is consistent */
bool solve_linear(const FieldPtr& k, Matrix a, std::vector<Elem> b,
                  std::vector<Elem>& out);

std::vector<std::vector<Elem>> kernel_basis(const FieldPtr& k, Matrix a);

/* Symmetric congruence diagonalization by completion of squares.  Pivot rule:
 * first nonzero diagonal entry of the trailing block; if the diagonal is all
 * zero, the first nonzero off-diagonal pair creates one.  Returns the diagonal
 * (zeros included when the form is degenerate). */
std::vector<Elem> congruence_diagonalize(const FieldPtr& k, Matrix g);

}  // namespace qz
