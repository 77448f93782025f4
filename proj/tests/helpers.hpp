#pragma once

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sector_radius/complex_matrix.hpp"

namespace testing {

using namespace sector_radius;
using namespace std::complex_literals;

inline constexpr double pi = std::numbers::pi;

inline void check_close(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            INFO("entry (" << i << ", " << j << "): " << a(i, j) << " vs " << b(i, j));
            CHECK(std::abs(a(i, j) - b(i, j)) <= tol);
        }
}

inline ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& t) {
    return u.adjoint() * t * u;
}

// Form [[r e^{i theta}, 2c], [0, e^{-i theta}/r]] written out by hand.
inline ComplexMatrix t_form(double r, double theta, double c) {
    return {{r * std::polar(1.0, theta), 2.0 * c}, {0.0, std::polar(1.0, -theta) / r}};
}

inline double t_form_norm(double r, double c) {
    return 0.5 * (std::sqrt(std::pow(r + 1 / r, 2) + 4 * c * c) + std::sqrt(std::pow(r - 1 / r, 2) + 4 * c * c));
}

}  // namespace testing
