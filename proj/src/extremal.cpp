#include "sector_radius/extremal.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sector_radius/errors.hpp"
#include "sector_radius/matcore.hpp"

namespace sector_radius {
namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt2 = std::sqrt(2.0);

void require_positive_angle(SectorAngle alpha) {
    if (alpha.radians() <= 0.0)
        throw ParameterError("the extremal family needs alpha > 0 (tau(0) = 1 is attained by every PSD matrix)");
}

}  // namespace

ExtremalParameters extremal_params(SectorAngle alpha) {
    require_positive_angle(alpha);
    const double sa = std::sin(alpha.radians());
    const double s = sa * sa;
    const double root = std::sqrt(1.0 + 2.0 * s);
    const double sin_theta = std::sqrt((s + s * s) / (1.0 + 2.0 * s));
    return {alpha.radians(), s, s / root, std::asin(std::min(sin_theta, 1.0)), root};
}

ComplexMatrix extremal_2x2(SectorAngle alpha) {
    require_positive_angle(alpha);
    const double sa = std::sin(alpha.radians());
    const double s = sa * sa;
    const double re = std::sqrt(1.0 + s - s * s);
    const double im = std::sqrt(s + s * s);
    const double scale = 1.0 / (1.0 + 2.0 * s);
    return ComplexMatrix{{scale * Complex{re, im}, scale * 2.0 * s},
                         {0.0, scale * Complex{re, -im}}};
}

CanonicalB canonical_B(SectorAngle alpha) {
    const auto p = extremal_params(alpha);
    const double sa = std::sin(p.alpha);
    const double ct = std::cos(p.theta);
    ComplexMatrix b{{ct + p.c, sa}, {-sa, ct - p.c}};
    const double x1 = sa;
    const double x2 = std::sqrt(1.0 + p.c * p.c) - ct;
    const double len = std::hypot(x1, x2);
    return {std::move(b), {x1 / len, x2 / len}, p.norm};
}

ComplexMatrix r_alpha_matrix(double r, double theta, SectorAngle alpha) {
    if (!std::isfinite(r) || r < 1.0)
        throw ParameterError("r-family requires r >= 1, got " + std::to_string(r));
    if (!std::isfinite(theta) || theta < 0.0 || theta > alpha.radians())
        throw ParameterError("r-family requires 0 <= theta <= alpha, got theta = " + std::to_string(theta));
    const double sa = std::sin(alpha.radians());
    const double st = std::sin(theta);
    const double c = std::sqrt(std::max(0.0, sa * sa - st * st));
    return ComplexMatrix{{r * std::polar(1.0, theta), 2.0 * c}, {0.0, std::polar(1.0, -theta) / r}};
}

std::optional<std::string> three_by_three_violation(const ThreeByThreeParams& p) {
    std::ostringstream msg;
    msg.precision(17);
    if (!std::isfinite(p.d) || !std::isfinite(p.b1) || !std::isfinite(p.b2))
        return std::string("parameters must be finite");
    if (p.d < 0.0) {
        msg << "constraint d >= 0 violated (d = " << p.d << ")";
        return msg.str();
    }
    const double d2 = p.d * p.d;
    // 1e-12 admits the boundary b1 = 3d^2/2 used by the n x n family.
    if (p.b1 < 1.5 * d2 - 1e-12) {
        msg << "constraint b1 >= 3d^2/2 violated (b1 = " << p.b1 << ", 3d^2/2 = " << 1.5 * d2 << ")";
        return msg.str();
    }
    const double q = 12.0 * d2 + p.b1;
    const double lhs = 18.0 * d2 + std::sqrt(2.0 * q * q + 2.0 * p.b2 * p.b2);
    if (lhs > 1.0) {
        msg << "constraint 18d^2 + sqrt(2(12d^2+b1)^2 + 2b2^2) <= 1 violated (lhs = " << lhs << ")";
        return msg.str();
    }
    return std::nullopt;
}

ComplexMatrix three_by_three(const ThreeByThreeParams& p) {
    if (auto violation = three_by_three_violation(p)) throw ConstraintError(*violation);
    const double d = p.d;
    return ComplexMatrix{{2.0 / 3.0, 1.0 / kSqrt3, d},
                         {-1.0 / kSqrt3, 0.0, kSqrt3 * d},
                         {d, -kSqrt3 * d, Complex{p.b1, p.b2}}};
}

double irreducible_d_limit() { return 1.0 / std::sqrt(45.0); }

namespace {

ComplexMatrix irreducible_matrix(int n, double d, double eps) {
    const auto base = three_by_three({d, 1.5 * d * d, 0.0});
    ComplexMatrix t(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) t(i, j) = base(i, j);
    t(2, 2) += eps;
    double power = 1.0;
    for (int k = 1; k <= n - 3; ++k) {
        power *= eps;
        // 1-based E_{k+2,k+3} and E_{k+3,k+3}.
        t(k + 1, k + 2) += power;
        t(k + 2, k + 2) += power;
    }
    return t;
}

// Empty when the construction has H PSD, |T| = 1, w(T) = 1/sqrt2 and a
// trivial commutant; otherwise the first failed condition.
std::optional<std::string> irreducible_failure(const ComplexMatrix& t, const Tolerances& tol) {
    const auto [h, g] = cartesian_decompose(t);
    if (lambda_min(h, tol) < -tol.psd) return std::string("Re(T) is not positive semidefinite");
    const double target = 1.0 / kSqrt2;
    const double w = numerical_radius(t, tol);
    if (std::abs(w - target) > 1e-10) return "w(T) = " + std::to_string(w) + " differs from 1/sqrt(2)";
    if (std::abs(operator_norm(t, tol) - 1.0) > 1e-10) return std::string("|T| differs from 1");
    if (commutant_dimension(t, tol) != 1) return std::string("T is unitarily reducible");
    return std::nullopt;
}

}  // namespace

IrreducibleFamily irreducible_family(int n, double d, std::optional<double> epsilon,
                                     const Tolerances& tol) {
    if (n < 4) throw ParameterError("irreducible family needs n >= 4, got " + std::to_string(n));
    if (!std::isfinite(d) || d <= 0.0 || d >= irreducible_d_limit())
        throw ParameterError("irreducible family needs 0 < d < 1/sqrt(45), got d = " + std::to_string(d));

    if (epsilon) {
        if (!std::isfinite(*epsilon) || *epsilon <= 0.0 || *epsilon >= 1.0)
            throw ParameterError("epsilon must lie in (0, 1)");
        auto t = irreducible_matrix(n, d, *epsilon);
        if (auto failure = irreducible_failure(t, tol))
            throw ConstructionError("epsilon = " + std::to_string(*epsilon) + " fails: " + *failure);
        return {std::move(t), *epsilon};
    }

    // The (3,3) entry 3d^2/2 + eps must keep the 3x3 corner feasible:
    // 18d^2 + sqrt2 (12d^2 + 3d^2/2 + eps) <= 1. Start at half that slack.
    const double d2 = d * d;
    const double slack = 1.0 - 18.0 * d2 - kSqrt2 * 13.5 * d2;
    double eps = std::min(0.1, slack / (2.0 * kSqrt2));
    std::string last;
    for (int attempt = 0; attempt < 60; ++attempt, eps *= 0.5) {
        auto t = irreducible_matrix(n, d, eps);
        auto failure = irreducible_failure(t, tol);
        if (!failure) return {std::move(t), eps};
        last = *failure;
    }
    throw ConstructionError("no admissible epsilon after 60 halvings: " + last);
}

std::vector<ComplexVector> irreducible_eigen_vectors(int n, double epsilon) {
    if (n < 4) throw ParameterError("irreducible family needs n >= 4");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("epsilon must lie in (0, 1)");
    std::vector<ComplexVector> out;
    // 1-based k = 4..n; coefficient of e_{k+j} is eps^{j(j+1)/2} / prod_{i<=j} (1 - eps^i).
    for (int k = 4; k <= n; ++k) {
        ComplexVector x(static_cast<std::size_t>(n));
        double coeff = 1.0;
        x[k - 1] = coeff;
        for (int j = 1; k + j <= n; ++j) {
            const double ej = std::pow(epsilon, j);
            coeff *= ej / (1.0 - ej);
            x[k + j - 1] = coeff;
        }
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace sector_radius
