#pragma once

namespace sector_radius {

/// Every numerical threshold used by the library, gathered in one place.
///
/// Functions take a `const Tolerances&` defaulting to default_tolerances();
/// the CLI builds its own copy from flags and the SECTOR_RADIUS_TOL
/// environment variable.
struct Tolerances {
    // Hermitian input check: max |M - M*| <= hermitian * max(1, |M|_F).
    double hermitian = 1e-12;

    // Jacobi stops once the off-diagonal Frobenius mass drops below
    // jacobi_offdiag * |M|_F, or after jacobi_max_sweeps sweeps.
    double jacobi_offdiag = 1e-14;
    int jacobi_max_sweeps = 60;

    // Singular values below rank * sigma_max count as zero.
    double rank = 1e-9;

    // PSD test: lambda_min >= -psd * |T|. Also the kernel threshold for H.
    double psd = 1e-10;

    // Numerical radius search: coarse grid size, number of refined
    // brackets, and the golden-section stopping width in theta.
    int radius_grid = 1024;
    int radius_brackets = 8;
    double radius_theta = 1e-12;

    // Default tolerance of certify_extremal.
    double certify = 1e-7;

    // Eigenvalue match against +-tan(alpha) in the canonical-family test.
    double canonical = 1e-8;

    // Slack allowed in ratio <= bound.
    double ratio_slack = 1e-8;

    // Relative gap under which the top singular value counts as repeated.
    double singular_tie = 1e-10;

    // Degenerate span test in compression_2x2: |Tx - <Tx,x>x| <= degenerate * |Tx|.
    double degenerate = 1e-10;
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

}  // namespace sector_radius
