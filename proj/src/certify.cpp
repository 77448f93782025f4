#include "sector_radius/certify.hpp"

#include <algorithm>
#include <cmath>

#include "sector_radius/errors.hpp"
#include "sector_radius/extremal.hpp"
#include "sector_radius/matcore.hpp"

namespace sector_radius {
namespace {

void require_nonzero(const ComplexMatrix& t) {
    if (!t.is_finite()) throw ShapeError("matrix has non-finite entries");
    if (t.max_abs() == 0.0) throw DegenerateError("the zero matrix has no norm-to-radius ratio");
}

// Spectral norm of the n x 2 matrix whose columns are u and v.
double two_column_norm(const ComplexVector& u, const ComplexVector& v, const Tolerances& tol) {
    const Complex uv = inner(u, v);
    ComplexMatrix gram{{inner(u, u), uv}, {std::conj(uv), inner(v, v)}};
    return std::sqrt(std::max(0.0, lambda_max(gram, tol)));
}

// Columns (I - QQ*) M e_j for the orthonormal pair Q = (e1, e2).
std::pair<ComplexVector, ComplexVector> leakage(const ComplexMatrix& m, const CompressionBasis& q) {
    auto strip = [&](ComplexVector y) {
        for (const auto* b : {&q.e1, &q.e2}) {
            const Complex proj = inner(*b, y);
            for (std::size_t i = 0; i < y.size(); ++i) y[i] -= proj * (*b)[i];
        }
        return y;
    };
    return {strip(m.apply(q.e1)), strip(m.apply(q.e2))};
}

}  // namespace

RatioCheck ratio_check(const ComplexMatrix& t, const Tolerances& tol) {
    require_nonzero(t);
    const auto alpha = min_sector_angle(t, tol);
    const double ratio = operator_norm(t, tol) / numerical_radius(t, tol);
    const double bound = alpha ? alpha->tau() : 2.0;
    return {alpha, ratio, bound, ratio <= bound + tol.ratio_slack};
}

CanonicalFamilyMatch canonical_family_test(const ComplexMatrix& a, SectorAngle alpha,
                                           const Tolerances& tol) {
    if (a.size() != 2) throw DimensionError("canonical family test needs a 2x2 matrix");
    if (!a.is_finite()) throw ShapeError("matrix has non-finite entries");
    const CanonicalFamilyMatch no{false, std::nullopt, std::nullopt, false};
    if (a.max_abs() == 0.0) return no;

    // det(A) must be real and positive; A / det^{1/2} then has determinant 1.
    const auto inv = similarity_invariants_2x2(a);
    const Complex det = inv.determinant;
    if (det.real() <= 0.0 || std::abs(det.imag()) > tol.canonical * std::abs(det)) return no;
    const double scale = std::sqrt(det.real());
    const ComplexMatrix m = a / scale;

    // Eigenvalues r e^{i theta} and e^{-i theta}/r of the normalized matrix.
    const auto ellipse = ellipse_2x2(m);
    const Complex big =
        std::abs(ellipse.focus1) >= std::abs(ellipse.focus2) ? ellipse.focus1 : ellipse.focus2;
    const double r = std::max(1.0, std::abs(big));
    double theta = std::arg(big);
    bool adjoint = false;
    if (r - 1.0 <= tol.canonical) {
        theta = std::abs(theta);
    } else if (theta < 0.0) {
        adjoint = true;
        theta = -theta;
    }
    if (theta > alpha.radians() + tol.canonical) return no;
    theta = std::min(theta, alpha.radians());

    // |off-diagonal of the Schur form|^2 = 4c^2 must equal 4(sin^2 a - sin^2 theta).
    const double fro2 = m.frobenius_norm() * m.frobenius_norm();
    const double c2 = 0.25 * (fro2 - r * r - 1.0 / (r * r));
    const double sa = std::sin(alpha.radians());
    const double st = std::sin(theta);
    if (std::abs(c2 - (sa * sa - st * st)) > tol.canonical) return no;

    if (!alpha.is_right_half_plane() && alpha.radians() > 0.0) {
        // Touching test: H > 0 and H^{-1/2} G H^{-1/2} has eigenvalues +-tan(alpha).
        const auto [h, g] = cartesian_decompose(a);
        const auto hs = hermitian_spectrum(h, tol);
        if (hs.eigenvalues.front() <= 0.0) return no;
        const auto inv_sqrt = hermitian_function(hs, [](double x) { return 1.0 / std::sqrt(x); });
        const auto mu = hermitian_eigenvalues(inv_sqrt * g * inv_sqrt, tol);
        const double ta = std::tan(alpha.radians());
        const double slack = tol.canonical * std::max(1.0, ta);
        if (std::abs(mu.front() + ta) > slack || std::abs(mu.back() - ta) > slack) return no;
    }
    return {true, r, theta, adjoint};
}

CompressionBasis compression_basis(const ComplexMatrix& t, std::span<const Complex> x,
                                   const Tolerances& tol) {
    if (x.size() != t.size()) throw DimensionError("vector length does not match matrix dimension");
    const double len = norm(x);
    if (std::abs(len - 1.0) > 1e-8) throw ParameterError("compression needs a unit vector");
    CompressionBasis q{ComplexVector(x.begin(), x.end()), t.apply(x)};
    const double tx = norm(q.e2);
    for (int pass = 0; pass < 2; ++pass) {
        const Complex proj = inner(q.e1, q.e2);
        for (std::size_t i = 0; i < q.e2.size(); ++i) q.e2[i] -= proj * q.e1[i];
    }
    const double rest = norm(q.e2);
    if (tx == 0.0 || rest <= tol.degenerate * tx)
        throw DegenerateError("Tx is parallel to x; span{x, Tx} is one-dimensional");
    for (auto& z : q.e2) z /= rest;
    return q;
}

ComplexMatrix compression_2x2(const ComplexMatrix& t, std::span<const Complex> x, const Tolerances& tol) {
    const auto q = compression_basis(t, x, tol);
    const ComplexVector basis[] = {q.e1, q.e2};
    return compress(t, basis);
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::extremal: return "extremal";
        case Verdict::not_extremal: return "not_extremal";
        case Verdict::not_in_sector: return "not_in_sector";
        case Verdict::degenerate: return "degenerate";
    }
    return "unknown";
}

CertificationReport certify_extremal(const ComplexMatrix& t, SectorAngle alpha,
                                     std::optional<double> tolerance, const Tolerances& tol) {
    require_nonzero(t);
    const double eps = tolerance.value_or(tol.certify);
    if (!(eps > 0.0)) throw ParameterError("certification tolerance must be positive");
    if (alpha.radians() <= 0.0) throw ParameterError("certification needs alpha > 0");

    const double nrm = operator_norm(t, tol);
    const double w = numerical_radius(t, tol);
    CertificationReport report{Verdict::not_extremal, alpha, nrm / w, alpha.tau(),
                               std::nullopt, std::nullopt, std::nullopt, std::nullopt, {}};

    if (!sector_contains(t, alpha, tol)) {
        report.verdict = Verdict::not_in_sector;
        report.detail = "W(T) is not contained in S(alpha)";
        return report;
    }
    if (std::abs(report.ratio - report.tau) > eps) {
        report.detail = "|T|/w(T) differs from tau(alpha)";
        return report;
    }

    const ComplexMatrix unit = t / nrm;
    const auto canonical = canonical_B(alpha);
    const auto target = similarity_invariants_2x2(canonical.matrix / canonical.norm);
    const std::size_t n = t.size();
    const bool half_plane = alpha.is_right_half_plane();

    // Any norm-attaining vector will do; try each when sigma_1 is repeated.
    std::optional<CertificationReport> first_failure;
    bool all_degenerate = true;
    for (auto x : top_right_singular_space(unit, tol).vectors) {
        normalize_phase(x);
        CertificationReport candidate = report;
        candidate.attaining_vector = x;

        CompressionBasis q;
        try {
            q = compression_basis(unit, x, tol);
        } catch (const DegenerateError&) {
            continue;
        }
        all_degenerate = false;
        const ComplexVector basis[] = {q.e1, q.e2};
        candidate.compression = compress(unit, basis);

        // Split of T/|T| along span{x, Tx}; required below pi/2, informational at pi/2.
        std::optional<double> offdiag, tail;
        if (n > 2) {
            const auto [t21a, t21b] = leakage(unit, q);
            const auto [t12a, t12b] = leakage(unit.adjoint(), q);
            offdiag = std::max(two_column_norm(t21a, t21b, tol), two_column_norm(t12a, t12b, tol));
            tail = numerical_radius(compress(unit, orthonormal_complement(basis, n)), tol);
        }
        if (!half_plane || (offdiag && *offdiag <= eps)) {
            candidate.block_offdiag_norm = offdiag;
            candidate.tail_radius = tail;
        }

        bool pass = true;
        if (invariants_distance(similarity_invariants_2x2(*candidate.compression), target) > eps) {
            pass = false;
            candidate.detail = "compression onto span{x, Tx} is not unitarily similar to B/|B|";
        } else if (half_plane) {
            // Norm-attaining compression ~ B/|B| and w(T/|T|) <= 1/sqrt2 suffice here.
            if (w / nrm > 1.0 / report.tau + eps) {
                pass = false;
                candidate.detail = "w(T/|T|) exceeds 1/sqrt(2)";
            }
        } else if (offdiag && *offdiag > eps) {
            pass = false;
            candidate.detail = "T/|T| does not split as T1 (+) T2 on span{x, Tx}";
        } else if (tail && *tail > 1.0 / report.tau + eps) {
            pass = false;
            candidate.detail = "w(T2) exceeds 1/tau(alpha)";
        }
        if (pass) {
            candidate.verdict = Verdict::extremal;
            candidate.detail = "certified";
            return candidate;
        }
        if (!first_failure) first_failure = std::move(candidate);
    }
    if (all_degenerate) {
        report.verdict = Verdict::degenerate;
        report.detail = "every norm-attaining x is an eigenvector of T";
        return report;
    }
    return *first_failure;
}

}  // namespace sector_radius
