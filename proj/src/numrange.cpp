#include "sector_radius/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sector_radius/errors.hpp"
#include "sector_radius/matcore.hpp"

namespace sector_radius {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// theta -> lambda_max(cos(theta) H + sin(theta) G) with H, G precomputed.
class SupportFunction {
public:
    SupportFunction(const ComplexMatrix& t, const Tolerances& tol)
        : pair_(cartesian_decompose(t)), tol_(tol) {}

    ComplexMatrix real_part(double theta) const {
        return std::cos(theta) * pair_.hermitian + std::sin(theta) * pair_.skew;
    }

    double operator()(double theta) const { return lambda_max(real_part(theta), tol_); }

private:
    CartesianPair pair_;
    const Tolerances& tol_;
};

// Maximizes f on [a, b] by golden-section search; returns the best value seen.
template <typename F>
double golden_max(const F& f, double a, double b, double fa, double fb, double width) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double best = std::max(fa, fb);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > width) {
        best = std::max({best, fc, fd});
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return std::max({best, fc, fd});
}

}  // namespace

SectorAngle::SectorAngle(double radians) : alpha_(radians) {
    if (!std::isfinite(radians) || radians < 0.0 || radians > kHalfPi + 1e-12)
        throw ParameterError("sector angle must lie in [0, pi/2], got " + std::to_string(radians));
    alpha_ = std::min(radians, kHalfPi);
}

SectorAngle SectorAngle::right_half_plane() { return SectorAngle(kHalfPi); }

bool SectorAngle::is_right_half_plane() const noexcept { return kHalfPi - alpha_ <= 1e-12; }

double SectorAngle::tau() const noexcept { return sector_radius::tau(alpha_); }

double tau(double alpha) {
    const double s = std::sin(alpha);
    return std::sqrt(1.0 + s * s);
}

BoundarySample support_value(const ComplexMatrix& t, double theta, const Tolerances& tol) {
    const SupportFunction f(t, tol);
    const auto spectrum = hermitian_spectrum(f.real_part(theta), tol);
    const auto v = spectrum.eigenvector(t.size() - 1);
    return {theta, spectrum.eigenvalues.back(), inner(v, t.apply(v))};
}

double numerical_radius(const ComplexMatrix& t, const Tolerances& tol) {
    if (!t.is_finite()) throw ShapeError("matrix has non-finite entries");
    if (t.max_abs() == 0.0) return 0.0;
    const SupportFunction f(t, tol);
    const int grid = std::max(tol.radius_grid, 3);
    const double step = kTwoPi / grid;

    std::vector<double> values(grid);
    for (int k = 0; k < grid; ++k) values[k] = f(k * step);

    std::vector<int> peaks;
    for (int k = 0; k < grid; ++k) {
        const double prev = values[(k + grid - 1) % grid];
        const double next = values[(k + 1) % grid];
        if (values[k] >= prev && values[k] >= next) peaks.push_back(k);
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [&](int x, int y) { return values[x] > values[y]; });
    if (peaks.size() > static_cast<std::size_t>(tol.radius_brackets))
        peaks.resize(tol.radius_brackets);

    double best = *std::max_element(values.begin(), values.end());
    for (const int k : peaks) {
        const double lo = (k - 1) * step;
        const double hi = (k + 1) * step;
        best = std::max(best, golden_max(f, lo, hi, values[(k + grid - 1) % grid],
                                         values[(k + 1) % grid], tol.radius_theta));
    }
    return best;
}

std::vector<BoundarySample> boundary_points(const ComplexMatrix& t, int m, const Tolerances& tol) {
    if (m < 3) throw ParameterError("boundary sampling needs m >= 3, got " + std::to_string(m));
    const SupportFunction f(t, tol);
    std::vector<BoundarySample> out;
    out.reserve(m);
    for (int k = 0; k < m; ++k) {
        const double theta = kTwoPi * k / m;
        const auto spectrum = hermitian_spectrum(f.real_part(theta), tol);
        const auto v = spectrum.eigenvector(t.size() - 1);
        out.push_back({theta, spectrum.eigenvalues.back(), inner(v, t.apply(v))});
    }
    return out;
}

Complex EllipseDescriptor::major_direction() const {
    const Complex d = focus1 - focus2;
    const double len = std::abs(d);
    return len > 0.0 ? d / len : Complex{1.0, 0.0};
}

Complex EllipseDescriptor::point(double t) const {
    const double a = 0.5 * major_axis_length;
    const double b = 0.5 * minor_axis_length;
    return center() + major_direction() * Complex{a * std::cos(t), b * std::sin(t)};
}

Complex EllipseDescriptor::support_point(double theta) const {
    const double a = 0.5 * major_axis_length;
    const double b = 0.5 * minor_axis_length;
    const double psi = theta - std::arg(major_direction());
    return point(std::atan2(b * std::sin(psi), a * std::cos(psi)));
}

EllipseDescriptor ellipse_2x2(const ComplexMatrix& a) {
    if (a.size() != 2) throw DimensionError("elliptical range law applies to 2x2 matrices");
    if (!a.is_finite()) throw ShapeError("matrix has non-finite entries");
    const Complex tr = a.trace();
    const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const Complex disc = std::sqrt(tr * tr - 4.0 * det);
    // Pick the sign that avoids cancellation, then recover the other root from det.
    const Complex big = std::abs(tr + disc) >= std::abs(tr - disc) ? tr + disc : tr - disc;
    const Complex lambda1 = 0.5 * big;

    // Unit eigenvector for lambda1; the Schur form [[l1, x], [0, l2]] in the
    // basis (u, u_perp) gives l2 and |x| = sqrt(tr(AA*) - |l1|^2 - |l2|^2)
    // without cancellation.
    Complex u0 = a(0, 1);
    Complex u1 = lambda1 - a(0, 0);
    const Complex w0 = lambda1 - a(1, 1);
    const Complex w1 = a(1, 0);
    if (std::norm(w0) + std::norm(w1) > std::norm(u0) + std::norm(u1)) {
        u0 = w0;
        u1 = w1;
    }
    const double ulen = std::hypot(std::abs(u0), std::abs(u1));
    if (ulen == 0.0) {
        // A = lambda I.
        return {lambda1, lambda1, 0.0, 0.0};
    }
    u0 /= ulen;
    u1 /= ulen;
    const Complex p0 = -std::conj(u1);
    const Complex p1 = std::conj(u0);
    const Complex ap0 = a(0, 0) * p0 + a(0, 1) * p1;
    const Complex ap1 = a(1, 0) * p0 + a(1, 1) * p1;
    const Complex offdiag = std::conj(u0) * ap0 + std::conj(u1) * ap1;
    const Complex lambda2 = std::conj(p0) * ap0 + std::conj(p1) * ap1;

    const double minor = std::abs(offdiag);
    const double major = std::hypot(std::abs(lambda1 - lambda2), minor);
    return {lambda1, lambda2, minor, major};
}

bool sector_contains(const ComplexMatrix& t, SectorAngle alpha, const Tolerances& tol) {
    const auto [h, g] = cartesian_decompose(t);
    const double floor = -tol.psd * operator_norm(t, tol);
    if (alpha.is_right_half_plane()) return lambda_min(h, tol) >= floor;
    const double sa = std::sin(alpha.radians());
    const double ca = std::cos(alpha.radians());
    return lambda_min(sa * h + ca * g, tol) >= floor && lambda_min(sa * h - ca * g, tol) >= floor;
}

std::optional<SectorAngle> min_sector_angle(const ComplexMatrix& t, const Tolerances& tol) {
    const double tnorm = operator_norm(t, tol);
    if (tnorm == 0.0) return SectorAngle(0.0);
    const auto [h, g] = cartesian_decompose(t);
    const auto spectrum = hermitian_spectrum(h, tol);
    const double threshold = tol.psd * tnorm;
    if (spectrum.eigenvalues.front() < -threshold) return std::nullopt;

    std::vector<ComplexVector> kernel, range;
    std::vector<double> range_values;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (spectrum.eigenvalues[k] <= threshold) {
            kernel.push_back(spectrum.eigenvector(k));
        } else {
            range.push_back(spectrum.eigenvector(k));
            range_values.push_back(spectrum.eigenvalues[k]);
        }
    }

    if (!kernel.empty()) {
        // W(T) lies in a sector narrower than the half-plane only if G vanishes
        // on ker H and leaves it invariant, i.e. T = 0 (+) T' on ker H (+) ran H.
        double leak = 0.0;
        for (const auto& k : kernel) {
            const auto gk = g.apply(k);
            leak = std::max(leak, norm(gk));
        }
        if (leak > threshold) return SectorAngle::right_half_plane();
        if (range.empty()) return SectorAngle(0.0);
    }

    // H^{-1/2} G H^{-1/2} on the range of H, in the eigenbasis of H.
    ComplexMatrix scaled = compress(g, range);
    for (std::size_t i = 0; i < range.size(); ++i)
        for (std::size_t j = 0; j < range.size(); ++j)
            scaled(i, j) /= std::sqrt(range_values[i] * range_values[j]);
    const auto mu = hermitian_eigenvalues(scaled, tol);
    const double spread = std::max(std::abs(mu.front()), std::abs(mu.back()));
    return SectorAngle(std::min(std::atan(spread), kHalfPi));
}

}  // namespace sector_radius
