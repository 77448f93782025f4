#pragma once

#include <cstddef>
#include <vector>

#include "sector_radius/complex_matrix.hpp"

// Reference computations that share no code path with the library: Eigen's
// eigensolvers and SVD instead of the in-house Jacobi routines, and plain
// grids instead of the library's scan-and-refine searches.
namespace sector_radius::oracle {

/// Ascending eigenvalues of a Hermitian matrix (Eigen::SelfAdjointEigenSolver).
std::vector<double> eigenvalues(const ComplexMatrix& hermitian);

/// Descending singular values (Eigen::JacobiSVD).
std::vector<double> singular_values(const ComplexMatrix& m);

double spectral_norm(const ComplexMatrix& m);

/// lambda_max(Re(e^{-i theta} T)).
double support(const ComplexMatrix& t, double theta);

/// max_k support(T, 2 pi k / points), evaluating every grid point.
double grid_radius_exhaustive(const ComplexMatrix& t, std::size_t points);

/// Same quantity as grid_radius_exhaustive, computed by branch and bound over
/// index ranges of the grid. Pruning uses only that the support function is
/// convex and positively homogeneous in (cos, sin): on an arc of half-width
/// h the support is at most max(f(ends), f(mid)/cos h). The result is the
/// exact grid maximum up to eigensolver rounding.
double grid_radius(const ComplexMatrix& t, std::size_t points);

/// Distance from z to the curve c + u (a cos s + i b sin s), by dense
/// sampling and local golden-section refinement.
double distance_to_ellipse(Complex z, Complex center, Complex direction, double semi_major,
                           double semi_minor);

}  // namespace sector_radius::oracle
