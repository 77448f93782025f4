#pragma once

#include <functional>
#include <vector>

#include "sector_radius/complex_matrix.hpp"
#include "sector_radius/tolerances.hpp"

namespace sector_radius {

/// T = H + iG with H = (T + T*)/2 and G = i(T* - T)/2, both Hermitian.
struct CartesianPair {
    ComplexMatrix hermitian;  // H
    ComplexMatrix skew;       // G
};

CartesianPair cartesian_decompose(const ComplexMatrix& t);

/// Ascending eigenvalues with the matching orthonormal eigenvectors stored
/// as columns. Each eigenvector has its first non-negligible component real
/// and positive.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexVector eigenvector(std::size_t k) const;
};

/// Cyclic Jacobi diagonalization. Throws ShapeError if m is not Hermitian
/// within tol.hermitian.
HermitianSpectrum hermitian_spectrum(const ComplexMatrix& m,
                                     const Tolerances& tol = default_tolerances());

/// Ascending eigenvalues only; same algorithm, no eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          const Tolerances& tol = default_tolerances());

double lambda_max(const ComplexMatrix& m, const Tolerances& tol = default_tolerances());
double lambda_min(const ComplexMatrix& m, const Tolerances& tol = default_tolerances());

/// f(M) = V diag(f(lambda)) V* for Hermitian M.
ComplexMatrix hermitian_function(const HermitianSpectrum& spectrum,
                                 const std::function<double(double)>& f);

/// Largest singular value, computed as sqrt(lambda_max(T*T)).
double operator_norm(const ComplexMatrix& t, const Tolerances& tol = default_tolerances());

/// Unit vectors spanning the right singular subspace of the largest singular
/// value. More than one vector when sigma_1 is repeated within tol.singular_tie.
struct TopSingularSpace {
    double sigma;
    std::vector<ComplexVector> vectors;
};

TopSingularSpace top_right_singular_space(const ComplexMatrix& t,
                                          const Tolerances& tol = default_tolerances());

/// Singular values (descending) of a dense rows x cols matrix given row-major,
/// by one-sided Jacobi. Accurate in the small singular values as well.
std::vector<double> singular_values(std::size_t rows, std::size_t cols,
                                    std::span<const Complex> row_major,
                                    const Tolerances& tol = default_tolerances());

/// Dimension of {X : XH = HX, XG = GX}. Equals 1 exactly when T is unitarily
/// irreducible.
int commutant_dimension(const ComplexMatrix& t, const Tolerances& tol = default_tolerances());

/// Matrix [<M b_j, b_i>] of m compressed to the span of an orthonormal basis.
ComplexMatrix compress(const ComplexMatrix& m, std::span<const ComplexVector> basis);

/// Orthonormal basis of the orthogonal complement of span(basis) in C^n.
/// `basis` must be orthonormal.
std::vector<ComplexVector> orthonormal_complement(std::span<const ComplexVector> basis, std::size_t n);

/// Complete unitary-similarity invariants of a 2x2 matrix.
struct SimilarityInvariants2x2 {
    Complex trace;
    Complex determinant;
    double frobenius_sq;  // tr(A*A)
};

SimilarityInvariants2x2 similarity_invariants_2x2(const ComplexMatrix& a);

/// Largest absolute deviation between two invariant triples.
double invariants_distance(const SimilarityInvariants2x2& a, const SimilarityInvariants2x2& b);

}  // namespace sector_radius
