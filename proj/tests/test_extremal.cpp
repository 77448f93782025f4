#include <doctest.h>

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

double ratio(const ComplexMatrix& t) { return operator_norm(t) / numerical_radius(t); }

// The n x n family written out independently of the library, with free d.
ComplexMatrix chain_matrix(int n, double d, double eps) {
    const double r3 = std::sqrt(3.0);
    ComplexMatrix t(static_cast<std::size_t>(n));
    t(0, 0) = 2.0 / 3.0;
    t(0, 1) = 1 / r3;
    t(0, 2) = d;
    t(1, 0) = -1 / r3;
    t(1, 2) = r3 * d;
    t(2, 0) = d;
    t(2, 1) = -r3 * d;
    t(2, 2) = 1.5 * d * d + eps;
    for (int k = 1; k <= n - 3; ++k) {
        t(k + 1, k + 2) += std::pow(eps, k);
        t(k + 2, k + 2) += std::pow(eps, k);
    }
    return t;
}

}  // namespace

TEST_CASE("extremal parameters") {
    SUBCASE("half-plane") {
        const auto p = extremal_params(SectorAngle::right_half_plane());
        CHECK(p.s == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(p.c == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-15));
        CHECK(std::cos(p.theta) == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-12));
        CHECK(p.norm == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    }
    SUBCASE("quarter") {
        const auto p = extremal_params(SectorAngle(pi / 4));
        CHECK(p.s == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(p.c == doctest::Approx(1 / (2 * std::sqrt(2.0))).epsilon(1e-15));
        CHECK(std::pow(std::sin(p.theta), 2) == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
        CHECK(p.norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    }
    SUBCASE("zero angle") { CHECK_THROWS_AS(extremal_params(SectorAngle(0.0)), ParameterError); }
}

TEST_CASE("extremal parameter identities hold across angles") {
    for (int k = 1; k <= 200; ++k) {
        const double alpha = pi / 2 * k / 200;
        const auto p = extremal_params(SectorAngle(alpha));
        const double s = p.s;
        const double st2 = std::pow(std::sin(p.theta), 2);
        CHECK(std::abs(s - std::pow(std::sin(alpha), 2)) <= 1e-12);
        CHECK(std::abs(p.c - s / std::sqrt(1 + 2 * s)) <= 1e-12);
        CHECK(std::abs(st2 - (s + s * s) / (1 + 2 * s)) <= 1e-12);
        CHECK(std::abs(std::pow(std::cos(p.theta), 2) - (1 + s - s * s) / (1 + 2 * s)) <= 1e-12);
        CHECK(std::abs(p.norm * p.norm - (1 + 2 * s)) <= 1e-12);
        CHECK(std::abs(p.c * p.c + st2 - s) <= 1e-12);
        CHECK(p.theta >= 0.0);
        CHECK(p.theta <= alpha + 1e-15);
    }
}

TEST_CASE("extremal 2x2 examples") {
    const double r2 = std::sqrt(2.0);
    check_close(extremal_2x2(SectorAngle::right_half_plane()), ComplexMatrix{{1.0 + r2 * 1i, 2.0}, {0.0, 1.0 - r2 * 1i}} / 3.0, 1e-15);

    const auto q = extremal_2x2(SectorAngle(pi / 4));
    const Complex diag{std::sqrt(1.25) / 2, std::sqrt(0.75) / 2};
    check_close(q, ComplexMatrix{{diag, 0.5}, {0.0, std::conj(diag)}}, 1e-15);
    CHECK(std::abs(q(0, 0) - Complex{0.559017, 0.433013}) <= 1e-6);

    CHECK_THROWS_AS(extremal_2x2(SectorAngle(0.0)), ParameterError);
}

TEST_CASE("extremal 2x2 postconditions and sharp ratio across angles") {
    for (int k = 1; k <= 60; ++k) {
        const double alpha = pi / 2 * k / 60;
        const SectorAngle a(alpha);
        const auto t = extremal_2x2(a);
        const double s = std::pow(std::sin(alpha), 2);
        CHECK(std::abs(operator_norm(t) - 1.0) <= 1e-9);
        CHECK(std::abs(numerical_radius(t) - 1 / std::sqrt(1 + s)) <= 1e-9);
        CHECK(sector_contains(t, a));
        CHECK(std::abs(ratio(t) - a.tau()) <= 1e-8);
    }
    for (double alpha : {pi / 6, pi / 4, pi / 3}) {
        const auto t = extremal_2x2(SectorAngle(alpha));
        CHECK(std::abs(oracle::spectral_norm(t) / oracle::grid_radius(t, 1000000) - tau(alpha)) <= 1e-8);
    }
}

TEST_CASE("canonical real form") {
    SUBCASE("half-plane values") {
        const auto cb = canonical_B(SectorAngle::right_half_plane());
        const double r3 = std::sqrt(3.0);
        check_close(cb.matrix, {{2 / r3, 1.0}, {-1.0, 0.0}}, 1e-15);
        check_close(cb.matrix / cb.norm, {{2.0 / 3.0, 1 / r3}, {-1 / r3, 0.0}}, 1e-15);
        CHECK(cb.norm == doctest::Approx(r3).epsilon(1e-15));
        CHECK(cb.x[0] == doctest::Approx(r3 / 2).epsilon(1e-15));
        CHECK(cb.x[1] == doctest::Approx(0.5).epsilon(1e-14));

        ComplexMatrix db = cb.matrix;
        db(1, 0) *= -1.0;
        db(1, 1) *= -1.0;
        const auto ev = hermitian_eigenvalues(db);
        CHECK(ev[0] == doctest::Approx(-1 / r3).epsilon(1e-14));
        CHECK(ev[1] == doctest::Approx(r3).epsilon(1e-14));
    }
    SUBCASE("structure at every angle") {
        for (int k = 1; k <= 40; ++k) {
            const SectorAngle a(pi / 2 * k / 40);
            const auto cb = canonical_B(a);
            const auto p = extremal_params(a);
            CHECK(cb.x[0] > 0.0);
            CHECK(std::hypot(cb.x[0], cb.x[1]) == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(operator_norm(cb.matrix) == doctest::Approx(p.norm).epsilon(1e-12));

            ComplexMatrix db = cb.matrix;
            db(1, 0) *= -1.0;
            db(1, 1) *= -1.0;
            check_close(db, db.adjoint(), 1e-15);
            const auto ev = hermitian_eigenvalues(db);
            CHECK(ev[0] == doctest::Approx(-1 / p.norm).epsilon(1e-12));
            CHECK(ev[1] == doctest::Approx(p.norm).epsilon(1e-12));
            const std::vector<Complex> x{cb.x[0], cb.x[1]};
            const auto dbx = db.apply(x);
            CHECK(std::abs(dbx[0] - p.norm * x[0]) <= 1e-12);
            CHECK(std::abs(dbx[1] - p.norm * x[1]) <= 1e-12);

            const auto tri = r_alpha_matrix(1.0, p.theta, a);
            CHECK(invariants_distance(similarity_invariants_2x2(cb.matrix), similarity_invariants_2x2(tri)) <= 1e-12);
        }
    }
}

TEST_CASE("sector family constructor") {
    const double alpha = 0.7;
    check_close(r_alpha_matrix(1.0, alpha, SectorAngle(alpha)),
                ComplexMatrix{{std::polar(1.0, alpha), 0.0}, {0.0, std::polar(1.0, -alpha)}}, 1e-15);

    const auto p = extremal_params(SectorAngle(alpha));
    const auto a = r_alpha_matrix(1.0, p.theta, SectorAngle(alpha));
    check_close(a, t_form(1.0, p.theta, p.c), 1e-14);
    CHECK(operator_norm(a) == doctest::Approx(p.norm).epsilon(1e-12));

    const auto b = r_alpha_matrix(2.0, 0.0, SectorAngle(pi / 6));
    check_close(b, {{2.0, 1.0}, {0.0, 0.5}}, 1e-15);
    const auto amin = min_sector_angle(b);
    REQUIRE(amin);
    CHECK(amin->radians() == doctest::Approx(pi / 6).epsilon(1e-10));

    CHECK_THROWS_AS(r_alpha_matrix(0.9, 0.1, SectorAngle(0.5)), ParameterError);
    CHECK_THROWS_AS(r_alpha_matrix(1.5, 0.6, SectorAngle(0.5)), ParameterError);
    CHECK_THROWS_AS(r_alpha_matrix(1.5, -0.1, SectorAngle(0.5)), ParameterError);
}

TEST_CASE("sector family members have unit determinant and touch both rays") {
    CounterRng rng(40);
    for (int trial = 0; trial < 100; ++trial) {
        const double alpha = rng.uniform(0.05, pi / 2 - 0.05);
        const double theta = rng.uniform(0.0, alpha);
        const double r = rng.uniform(1.0, 4.0);
        const auto a = r_alpha_matrix(r, theta, SectorAngle(alpha));
        const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        CHECK(std::abs(det - 1.0) <= 1e-14);
        const auto amin = min_sector_angle(a);
        REQUIRE(amin);
        CHECK(std::abs(amin->radians() - alpha) <= 1e-8);
    }
}

TEST_CASE("off the extremal corner the ratio is strictly below tau") {
    CounterRng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const double alpha = rng.uniform(0.05, pi / 2);
        const double theta = rng.uniform(1e-3, alpha);
        const double r = rng.uniform(1.0 + 1e-3, 5.0);
        CHECK(ratio(r_alpha_matrix(r, theta, SectorAngle(alpha))) < tau(alpha));
    }
    for (double r : {1.1, 1.5, 2.0, 5.0})
        for (double alpha : {pi / 6, pi / 4, pi / 3}) CHECK(ratio(r_alpha_matrix(r, 0.0, SectorAngle(alpha))) < tau(alpha) - 1e-6);
}

TEST_CASE("on the unit-determinant normal-diagonal slice the ratio peaks at c0") {
    for (double alpha : {pi / 6, pi / 4, pi / 3, pi / 2}) {
        const SectorAngle a(alpha);
        const double s = std::pow(std::sin(alpha), 2);
        const double c0 = s / std::sqrt(1 + 2 * s);
        constexpr int points = 2000;
        const double c_max = std::sqrt(s);
        const double step = c_max / (points - 1);
        int best = 0;
        double best_ratio = 0.0;
        for (int k = 0; k < points; ++k) {
            const double c = k * step;
            const double theta = std::asin(std::sqrt(std::max(0.0, s - c * c)));
            const double q = ratio(r_alpha_matrix(1.0, std::min(theta, alpha), a));
            if (q > best_ratio) {
                best_ratio = q;
                best = k;
            }
        }
        CHECK(std::abs(best * step - c0) <= step);
        CHECK(std::abs(best_ratio - a.tau()) <= 1e-6);
    }
}

TEST_CASE("three-by-three examples") {
    const double r3 = std::sqrt(3.0);
    const auto zero = three_by_three({0.0, 0.0, 0.0});
    check_close(zero, direct_sum(canonical_B(SectorAngle::right_half_plane()).matrix / r3, ComplexMatrix(1)), 1e-15);

    CHECK_FALSE(three_by_three_violation({0.1, 0.05, 0.0}));
    const double lhs = 18 * 0.01 + std::sqrt(2 * 0.17 * 0.17);
    CHECK(lhs == doctest::Approx(0.4204163).epsilon(1e-6));
    const auto t = three_by_three({0.1, 0.05, 0.0});
    check_close(t, {{2.0 / 3.0, 1 / r3, 0.1}, {-1 / r3, 0.0, 0.1 * r3}, {0.1, -0.1 * r3, 0.05}}, 1e-15);

    CHECK_THROWS_AS(three_by_three({0.25, 0.09375, 0.0}), ConstraintError);
    try {
        three_by_three({0.25, 0.09375, 0.0});
    } catch (const ConstraintError& e) {
        CHECK(std::string(e.what()).find("18d^2 + sqrt(2(12d^2+b1)^2 + 2b2^2) <= 1") != std::string::npos);
    }
    CHECK_THROWS_AS(three_by_three({-0.1, 0.1, 0.0}), ConstraintError);
    CHECK_THROWS_AS(three_by_three({0.1, 0.01, 0.0}), ConstraintError);
    CHECK_NOTHROW(three_by_three({0.1, 0.015, 0.0}));  // b1 = 3d^2/2 exactly
}

TEST_CASE("three-by-three members attain the half-plane bound") {
    CounterRng rng(42);
    int built = 0;
    while (built < 40) {
        const double d = rng.uniform(0.0, 0.2);
        const ThreeByThreeParams p{d, rng.uniform(1.5 * d * d, 0.6), rng.uniform(-0.6, 0.6)};
        if (three_by_three_violation(p)) continue;
        ++built;
        const auto t = three_by_three(p);
        CHECK(std::abs(operator_norm(t) - 1.0) <= 1e-8);
        CHECK(std::abs(numerical_radius(t) - 1 / std::sqrt(2.0)) <= 1e-8);
        CHECK(std::abs(oracle::grid_radius(t, 100000) - 1 / std::sqrt(2.0)) <= 1e-8);
        CHECK(lambda_min(cartesian_decompose(t).hermitian) >= -1e-10);
        if (d > 1e-3) CHECK(commutant_dimension(t) == 1);
    }
}

TEST_CASE("irreducible family") {
    SUBCASE("n = 4, d = 0.1") {
        const auto fam = irreducible_family(4, 0.1);
        CHECK(fam.epsilon > 0.0);
        CHECK(fam.epsilon <= 0.1);
        check_close(fam.matrix, chain_matrix(4, 0.1, fam.epsilon), 1e-15);
        CHECK(std::abs(operator_norm(fam.matrix) - 1.0) <= 1e-8);
        CHECK(std::abs(oracle::grid_radius(fam.matrix, 1000000) - 1 / std::sqrt(2.0)) <= 1e-8);
        CHECK(lambda_min(cartesian_decompose(fam.matrix).hermitian) >= -1e-10);
        CHECK(commutant_dimension(fam.matrix) == 1);
    }
    SUBCASE("eigenvectors of the adjoint, n = 5, d = 0.05") {
        const auto fam = irreducible_family(5, 0.05);
        const auto xs = irreducible_eigen_vectors(5, fam.epsilon);
        REQUIRE(xs.size() == 2);
        for (std::size_t idx = 0; idx < xs.size(); ++idx) {
            const int k = 4 + static_cast<int>(idx);
            const double lambda = std::pow(fam.epsilon, k - 3);
            auto r = fam.matrix.apply_adjoint(xs[idx]);
            for (std::size_t i = 0; i < r.size(); ++i) r[i] -= lambda * xs[idx][i];
            CHECK(norm(r) <= 1e-8);
        }
    }
    SUBCASE("parameter range") {
        CHECK_THROWS_AS(irreducible_family(5, 0.2), ParameterError);
        CHECK_THROWS_AS(irreducible_family(5, 0.0), ParameterError);
        CHECK_THROWS_AS(irreducible_family(3, 0.1), ParameterError);
        CHECK(irreducible_d_limit() == doctest::Approx(0.1490712).epsilon(1e-6));
    }
    SUBCASE("explicit epsilon") {
        const auto fam = irreducible_family(4, 0.1, 0.01);
        CHECK(fam.epsilon == 0.01);
        CHECK_THROWS_AS(irreducible_family(4, 0.1, 0.9), ConstructionError);
    }
}

TEST_CASE("without the coupling the chain matrix is reducible") {
    for (int n : {4, 5, 6}) {
        const auto fam = irreducible_family(n, 0.1);
        CHECK(commutant_dimension(chain_matrix(n, 0.0, fam.epsilon)) >= 2);
    }
}

TEST_CASE("direct sums of unit-norm extremal blocks are pinned by the first block") {
    // w of a direct sum is the largest block w, and w(extremal_2x2(a)) = 1/tau(a) falls as a grows.
    const double alpha = pi / 3;
    ComplexMatrix sum = extremal_2x2(SectorAngle(alpha / 2));
    for (int n = 2; n <= 8; ++n) {
        sum = direct_sum(sum, extremal_2x2(SectorAngle(n * alpha / (n + 1))));
        CHECK(ratio(sum) == doctest::Approx(tau(alpha / 2)).epsilon(1e-10));
    }
}

TEST_CASE("blocks rescaled to a common numerical radius approach tau without any block attaining it") {
    const double alpha = pi / 3;
    const double target = tau(alpha);
    double previous = 0.0;
    ComplexMatrix sum(1);
    for (int n = 1; n <= 20; ++n) {
        const double an = n * alpha / (n + 1);
        // w(block) = 1/tau(alpha), |block| = tau(an)/tau(alpha) < 1.
        const auto block = extremal_2x2(SectorAngle(an)) * (tau(an) / target);
        CHECK(ratio(block) < target - 1e-4);
        sum = n == 1 ? block : direct_sum(sum, block);
        const double q = ratio(sum);
        CHECK(q == doctest::Approx(tau(an)).epsilon(1e-9));
        CHECK(q > previous);
        previous = q;
    }
    CHECK(target - previous < 2e-2);
}
