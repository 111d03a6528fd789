#pragma once

#include "conedual/rational.hpp"

namespace conedual {

/// In-place reduced row echelon form. Returns the rank; zero rows are
/// dropped, pivots are scaled to 1 and cleared above and below.
int rref(RatMatrix& m);

int rank(RatMatrix m);

/// Basis of the null space of `m` acting on R^dim (each basis vector made
/// primitive integer).
RatMatrix kernel_basis(const RatMatrix& m, int dim);

/// Solve m x = rhs; nullopt if inconsistent. Free variables are set to 0.
std::optional<RatVector> solve_linear(RatMatrix m, RatVector rhs);

/// Orthogonal projection of x onto the hyperplane {y : a.y = 0}
/// (a must be nonzero).
RatVector project_onto_hyperplane(const RatVector& x, const RatVector& a);

/// Orthogonal projection of x onto the orthogonal complement of
/// span(basis rows).
RatVector project_off_span(const RatVector& x, const RatMatrix& basis);

}  // namespace conedual
