#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "sector_radius/errors.hpp"
#include "sector_radius/extremal.hpp"
#include "sector_radius/matcore.hpp"
#include "sector_radius/numrange.hpp"
#include "sector_radius/random.hpp"
#include "sector_radius/verify/oracles.hpp"

using namespace testing;

namespace {

const ComplexMatrix shift{{0.0, 1.0}, {0.0, 0.0}};

ComplexMatrix b1() {
    const double r3 = std::sqrt(3.0);
    return {{2.0 / 3.0, 1.0 / r3}, {-1.0 / r3, 0.0}};
}

// W(T) inside S(alpha) by construction: H = R*R + 0.1 I, G = H^{1/2} K H^{1/2}, |K| <= tan(alpha).
ComplexMatrix random_sectorial(CounterRng& rng, std::size_t n, double alpha) {
    const auto r = random_complex_matrix(rng, n);
    const auto h = r.adjoint() * r + ComplexMatrix::identity(n) * 0.1;
    auto k = random_hermitian(rng, n);
    k *= rng.uniform(0.5, 1.0) * std::tan(alpha) / operator_norm(k);
    const auto h_half = hermitian_function(hermitian_spectrum(h), [](double x) { return std::sqrt(x); });
    auto g = h_half * k * h_half;
    g = (g + g.adjoint()) * 0.5;
    return h + 1i * g;
}

// max |z| on the boundary curve of an ellipse, by dense sampling then golden refinement.
double ellipse_max_modulus(const EllipseDescriptor& e) {
    constexpr int samples = 20000;
    const double step = 2 * pi / samples;
    int best_k = 0;
    for (int k = 1; k < samples; ++k)
        if (std::abs(e.point(k * step)) > std::abs(e.point(best_k * step))) best_k = k;
    double a = (best_k - 1) * step, b = (best_k + 1) * step;
    while (b - a > 1e-13) {
        const double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
        if (std::abs(e.point(m1)) < std::abs(e.point(m2)))
            a = m1;
        else
            b = m2;
    }
    return std::abs(e.point(0.5 * (a + b)));
}

}  // namespace

TEST_CASE("sector angle range") {
    CHECK_THROWS_AS(SectorAngle(-0.1), ParameterError);
    CHECK_THROWS_AS(SectorAngle(2.0), ParameterError);
    CHECK(SectorAngle(pi / 2 + 1e-13).is_right_half_plane());
    CHECK(SectorAngle(0.0).tau() == 1.0);
    CHECK(SectorAngle::right_half_plane().tau() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("support value examples") {
    const std::vector<Complex> d{2.0, -1.0};
    const auto s = support_value(ComplexMatrix::diagonal(d), 0.0);
    CHECK(s.support_value == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::abs(s.boundary_point - 2.0) <= 1e-15);

    for (double theta : {0.0, 0.7, 2.0, 4.5}) CHECK(support_value(shift, theta).support_value == doctest::Approx(0.5).epsilon(1e-14));

    for (double theta : {pi / 4, -pi / 4}) CHECK(support_value(b1(), theta).support_value == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("boundary point lies on the supporting line") {
    CounterRng rng(30);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = random_complex_matrix(rng, static_cast<std::size_t>(rng.integer(1, 6)));
        const double theta = rng.uniform(0, 2 * pi);
        const auto s = support_value(t, theta);
        CHECK(std::abs((std::polar(1.0, -theta) * s.boundary_point).real() - s.support_value) <= 1e-9);
        CHECK(s.support_value == doctest::Approx(oracle::support(t, theta)).epsilon(1e-12));
    }
}

TEST_CASE("numerical radius examples") {
    CHECK(numerical_radius(shift) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(numerical_radius(b1()) - 1 / std::sqrt(2.0)) <= 1e-10);

    const double r = 1.5, alpha = pi / 4;
    const double closed = 0.5 * ((r + 1 / r) + std::sqrt(std::pow(r - 1 / r, 2) + 4 * std::pow(std::sin(alpha), 2)));
    CHECK(closed == doctest::Approx(1.9040714834830086).epsilon(1e-14));
    const auto a = r_alpha_matrix(r, 0.0, SectorAngle(alpha));
    CHECK(std::abs(numerical_radius(a) - closed) <= 1e-10);
    CHECK(std::abs(oracle::grid_radius(a, 1000000) - closed) <= 1e-9);

    CHECK(numerical_radius(ComplexMatrix(3)) == 0.0);
    CHECK(numerical_radius({{-3.0}}) == 3.0);
}

TEST_CASE("numerical radius is rotation invariant") {
    CounterRng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto t = random_complex_matrix(rng, static_cast<std::size_t>(rng.integer(2, 6)));
        const double w = numerical_radius(t);
        for (int k = 0; k < 3; ++k) {
            const auto rotated = std::polar(1.0, rng.uniform(0, 2 * pi)) * t;
            CHECK(std::abs(numerical_radius(rotated) - w) <= 1e-10 * std::max(1.0, w));
        }
    }
}

TEST_CASE("numerical radius is subadditive under scalar shifts") {
    CounterRng rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 6));
        const auto t = random_complex_matrix(rng, n);
        const Complex c = rng.complex_normal() * 2.0;
        CHECK(numerical_radius(t + c * ComplexMatrix::identity(n)) <= numerical_radius(t) + std::abs(c) + 1e-10);
    }
}

TEST_CASE("norm bracket w <= |T| <= 2w") {
    CounterRng rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 8));
        auto t = random_complex_matrix(rng, n);
        if (trial % 4 == 0) t(0, n - 1) += 10.0;  // push toward the nilpotent end
        const double w = numerical_radius(t);
        const double nrm = operator_norm(t);
        CHECK(w <= nrm * (1 + 1e-10));
        CHECK(nrm <= 2 * w * (1 + 1e-10));
    }
}

TEST_CASE("numerical radius agrees with a fine grid oracle") {
    CounterRng rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const auto t = random_complex_matrix(rng, static_cast<std::size_t>(rng.integer(1, 6)));
        CHECK(std::abs(numerical_radius(t) - oracle::grid_radius(t, 1000000)) <= 1e-6);
    }
}

TEST_CASE("branch-and-bound grid oracle equals the exhaustive grid") {
    CounterRng rng(35);
    for (int trial = 0; trial < 10; ++trial) {
        const auto t = random_complex_matrix(rng, static_cast<std::size_t>(rng.integer(1, 5)));
        CHECK(oracle::grid_radius(t, 5000) == doctest::Approx(oracle::grid_radius_exhaustive(t, 5000)).epsilon(1e-14));
    }
}

TEST_CASE("boundary points") {
    CHECK_THROWS_AS(boundary_points(shift, 2), ParameterError);

    const auto pts = boundary_points(shift, 4);
    REQUIRE(pts.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(pts[k].theta == doctest::Approx(2 * pi * k / 4));
        CHECK(std::abs(pts[k].boundary_point) == doctest::Approx(0.5).epsilon(1e-14));
    }

    const std::vector<Complex> d{1.0, 1i};
    const auto seg = boundary_points(ComplexMatrix::diagonal(d), 64);
    auto near = [&](Complex z) {
        return std::any_of(seg.begin(), seg.end(), [&](const BoundarySample& s) { return std::abs(s.boundary_point - z) <= 1e-12; });
    };
    CHECK(near(1.0));
    CHECK(near(1i));

    const auto ext = boundary_points(extremal_2x2(SectorAngle(pi / 4)), 360);
    for (const auto& s : ext) CHECK(std::abs(s.boundary_point.imag()) <= s.boundary_point.real() * std::tan(pi / 4) + 1e-9);
}

TEST_CASE("ellipse examples") {
    const auto disk = ellipse_2x2(shift);
    CHECK(std::abs(disk.focus1) == 0.0);
    CHECK(std::abs(disk.focus2) == 0.0);
    CHECK(disk.minor_axis_length == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(disk.major_axis_length == doctest::Approx(1.0).epsilon(1e-15));

    const std::vector<Complex> d{1.0, 1i};
    const auto seg = ellipse_2x2(ComplexMatrix::diagonal(d));
    CHECK(seg.is_segment());
    CHECK(std::min(std::abs(seg.focus1 - 1.0), std::abs(seg.focus2 - 1.0)) <= 1e-15);
    CHECK(std::min(std::abs(seg.focus1 - 1i), std::abs(seg.focus2 - 1i)) <= 1e-15);

    const auto alpha = SectorAngle::right_half_plane();
    const auto p = extremal_params(alpha);
    const auto e = ellipse_2x2(t_form(1.0, p.theta, p.c));
    const Complex f1 = std::polar(1.0, p.theta), f2 = std::polar(1.0, -p.theta);
    CHECK(std::min(std::abs(e.focus1 - f1), std::abs(e.focus1 - f2)) <= 1e-14);
    CHECK(std::min(std::abs(e.focus2 - f1), std::abs(e.focus2 - f2)) <= 1e-14);
    CHECK(e.minor_axis_length / 2 == doctest::Approx(p.c).epsilon(1e-14));
    const Complex top{std::cos(p.theta), 1.0}, bottom{std::cos(p.theta), -1.0};
    const Complex end0 = e.point(0.0), end1 = e.point(pi);
    CHECK(std::min(std::abs(end0 - top), std::abs(end0 - bottom)) <= 1e-14);
    CHECK(std::min(std::abs(end1 - top), std::abs(end1 - bottom)) <= 1e-14);

    CHECK_THROWS_AS(ellipse_2x2(ComplexMatrix(3)), DimensionError);
}

TEST_CASE("ellipse max modulus equals the numerical radius") {
    CounterRng rng(36);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_complex_matrix(rng, 2);
        CHECK(std::abs(ellipse_max_modulus(ellipse_2x2(a)) - numerical_radius(a)) <= 1e-8);
    }
}

TEST_CASE("ellipse support points match sampled boundary points") {
    CounterRng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_complex_matrix(rng, 2);
        const auto e = ellipse_2x2(a);
        for (const auto& s : boundary_points(a, 90)) CHECK(std::abs(e.support_point(s.theta) - s.boundary_point) <= 1e-9);
    }
}

TEST_CASE("sector containment examples") {
    for (double alpha : {0.0, 0.5, pi / 2}) CHECK(sector_contains(ComplexMatrix::identity(3), SectorAngle(alpha)));
    CHECK_FALSE(sector_contains(shift, SectorAngle::right_half_plane()));
    const auto t = extremal_2x2(SectorAngle(pi / 4));
    CHECK(sector_contains(t, SectorAngle(pi / 4)));
    CHECK_FALSE(sector_contains(t, SectorAngle(pi / 6)));
}

TEST_CASE("minimal sector angle examples") {
    const auto id = min_sector_angle(ComplexMatrix::identity(2));
    REQUIRE(id);
    CHECK(id->radians() == 0.0);

    const std::vector<Complex> d{1.0 + 1i, 1.0 - 1i};
    const auto quarter = min_sector_angle(ComplexMatrix::diagonal(d));
    REQUIRE(quarter);
    CHECK(quarter->radians() == doctest::Approx(pi / 4).epsilon(1e-14));

    const auto third = min_sector_angle(extremal_2x2(SectorAngle(pi / 3)));
    REQUIRE(third);
    CHECK(std::abs(third->radians() - pi / 3) <= 1e-9);

    CHECK_FALSE(min_sector_angle(shift));
}

TEST_CASE("minimal sector angle with singular real part") {
    // Zero matrix: W = {0}, inside every sector.
    auto zero = min_sector_angle(ComplexMatrix(2));
    REQUIRE(zero);
    CHECK(zero->radians() == 0.0);

    // i on the kernel of H: W touches the imaginary axis, only the half-plane works.
    const std::vector<Complex> d{1.0, 1i};
    auto half = min_sector_angle(ComplexMatrix::diagonal(d));
    REQUIRE(half);
    CHECK(half->is_right_half_plane());

    // Kernel of H invariant under G and annihilated by it: angle set by the other block.
    const std::vector<Complex> d2{0.0, 1.0 + 0.5i};
    auto inner_angle = min_sector_angle(ComplexMatrix::diagonal(d2));
    REQUIRE(inner_angle);
    CHECK(inner_angle->radians() == doctest::Approx(std::atan(0.5)).epsilon(1e-12));

    // G maps ker H out of itself.
    auto leak = min_sector_angle(ComplexMatrix{{0.0, 1i}, {1i, 1.0}});
    REQUIRE(leak);
    CHECK(leak->is_right_half_plane());
}

TEST_CASE("minimal sector angle is tight") {
    CounterRng rng(38);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 6));
        const auto t = random_sectorial(rng, n, rng.uniform(0.05, 1.5));
        const auto amin = min_sector_angle(t);
        REQUIRE(amin);
        CHECK(sector_contains(t, *amin));
        if (amin->radians() > 1e-4) CHECK_FALSE(sector_contains(t, SectorAngle(amin->radians() - 1e-4)));
    }
}
