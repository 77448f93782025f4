#pragma once

#include <optional>
#include <string>

#include "sector_radius/complex_matrix.hpp"
#include "sector_radius/numrange.hpp"
#include "sector_radius/tolerances.hpp"

namespace sector_radius {

struct RatioCheck {
    std::optional<SectorAngle> alpha_min;
    double ratio;  // |T| / w(T)
    double bound;  // tau(alpha_min), or 2 when no sector contains W(T)
    bool ok;
};

/// Throws DegenerateError for the zero matrix.
RatioCheck ratio_check(const ComplexMatrix& t, const Tolerances& tol = default_tolerances());

/// Membership of A or A* in R(alpha), with the recovered form parameters.
struct CanonicalFamilyMatch {
    bool member;
    std::optional<double> r;      // r >= 1
    std::optional<double> theta;  // in [0, alpha]
    bool adjoint = false;         // true when A* (not A) is in R(alpha)
};

CanonicalFamilyMatch canonical_family_test(const ComplexMatrix& a, SectorAngle alpha,
                                           const Tolerances& tol = default_tolerances());

/// Orthonormal basis (x, e2) of span{x, Tx}; e2 is Tx with its x component removed.
struct CompressionBasis {
    ComplexVector e1;
    ComplexVector e2;
};

/// Throws DegenerateError when Tx is parallel to x.
CompressionBasis compression_basis(const ComplexMatrix& t, std::span<const Complex> x,
                                   const Tolerances& tol = default_tolerances());

/// 2x2 matrix [<T e_j, e_i>] of T compressed to span{x, Tx}.
ComplexMatrix compression_2x2(const ComplexMatrix& t, std::span<const Complex> x,
                              const Tolerances& tol = default_tolerances());

enum class Verdict { extremal, not_extremal, not_in_sector, degenerate };

const char* to_string(Verdict v);

struct CertificationReport {
    Verdict verdict;
    SectorAngle alpha;
    double ratio;
    double tau;
    std::optional<ComplexVector> attaining_vector;
    std::optional<ComplexMatrix> compression;
    std::optional<double> block_offdiag_norm;
    std::optional<double> tail_radius;
    std::string detail;
};

/// Decides whether T attains |T| / w(T) = tau(alpha) with W(T) in S(alpha),
/// and if so exposes the block structure: the compression to
/// V = span{x, Tx} for a norm-attaining x is unitarily similar to B/|B|,
/// and for alpha < pi/2 T/|T| splits as T1 (+) T2 on V (+) V-perp with
/// w(T2) <= 1/tau. At alpha = pi/2 only the compression and w(T/|T|) are
/// required; the split is still reported when T happens to have one.
/// For n = 2 the split is vacuous and both block fields stay empty.
/// Throws DegenerateError for the zero matrix.
CertificationReport certify_extremal(const ComplexMatrix& t, SectorAngle alpha,
                                     std::optional<double> tolerance = std::nullopt,
                                     const Tolerances& tol = default_tolerances());

}  // namespace sector_radius
