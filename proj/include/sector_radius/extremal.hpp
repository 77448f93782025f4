#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sector_radius/complex_matrix.hpp"
#include "sector_radius/numrange.hpp"
#include "sector_radius/tolerances.hpp"

namespace sector_radius {

/// Parameters of the norm-to-radius maximizer for a given sector angle:
/// s = sin^2(alpha), c = s / sqrt(1 + 2s), sin^2(theta) = (s + s^2)/(1 + 2s),
/// theta in [0, alpha], norm = sqrt(1 + 2s).
struct ExtremalParameters {
    double alpha;
    double s;
    double c;
    double theta;
    double norm;
};

/// Throws ParameterError for alpha = 0.
ExtremalParameters extremal_params(SectorAngle alpha);

/// Unit-norm 2x2 matrix attaining |T| / w(T) = sqrt(1 + sin^2 alpha):
///
///   1/(1+2s) [ sqrt(1+s-s^2) + i sqrt(s+s^2)   2s                          ]
///            [ 0                               sqrt(1+s-s^2) - i sqrt(s+s^2) ]
ComplexMatrix extremal_2x2(SectorAngle alpha);

/// Real form B = [[cos(theta)+c, sin(alpha)], [-sin(alpha), cos(theta)-c]] of
/// the extremal matrix, together with the unit vector x (first component
/// positive) satisfying D B x = |B| x for D = diag(1, -1).
struct CanonicalB {
    ComplexMatrix matrix;
    std::vector<double> x;
    double norm;
};

CanonicalB canonical_B(SectorAngle alpha);

/// [[r e^{i theta}, 2c], [0, e^{-i theta}/r]] with c = sqrt(sin^2 alpha - sin^2 theta).
/// Requires r >= 1 and 0 <= theta <= alpha.
ComplexMatrix r_alpha_matrix(double r, double theta, SectorAngle alpha);

/// Parameters of the 3x3 family attaining |T| / w(T) = sqrt(2) on S(pi/2).
struct ThreeByThreeParams {
    double d;
    double b1;
    double b2;
};

/// Empty when feasible, otherwise a description of the first violated
/// condition among d >= 0, b1 >= 3d^2/2, 18d^2 + sqrt(2(12d^2+b1)^2 + 2b2^2) <= 1.
std::optional<std::string> three_by_three_violation(const ThreeByThreeParams& p);

/// Rows [[2/3, 1/sqrt3, d], [-1/sqrt3, 0, sqrt3 d], [d, -sqrt3 d, b1 + i b2]].
/// Throws ConstraintError naming the violated inequality.
ComplexMatrix three_by_three(const ThreeByThreeParams& p);

/// Upper bound (exclusive) on d for the n x n irreducible family: 1/sqrt(45).
double irreducible_d_limit();

struct IrreducibleFamily {
    ComplexMatrix matrix;
    double epsilon;
};

/// Unitarily irreducible n x n matrix (n >= 4) with H PSD, |T| = 1 and
/// w(T) = 1/sqrt 2. Built from the 3x3 family with b1 = 3d^2/2, b2 = 0 by
/// adding epsilon to the (3,3) entry and the chain
/// sum_k eps^k (E_{k+2,k+3} + E_{k+3,k+3}). Without an explicit epsilon,
/// epsilon is halved from a feasibility seed until the postconditions hold.
IrreducibleFamily irreducible_family(int n, double d, std::optional<double> epsilon = std::nullopt,
                                     const Tolerances& tol = default_tolerances());

/// Vectors x_4, ..., x_n (0-based indices 3..n-1) with T* x_k = eps^{k-3} x_k.
std::vector<ComplexVector> irreducible_eigen_vectors(int n, double epsilon);

}  // namespace sector_radius
