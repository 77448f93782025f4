#include "sector_radius/verify/oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace sector_radius::oracle {
namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXcd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(i, j);
    return out;
}

struct CartesianEigen {
    Eigen::MatrixXcd h;
    Eigen::MatrixXcd g;

    explicit CartesianEigen(const ComplexMatrix& t) {
        const Eigen::MatrixXcd e = to_eigen(t);
        h = 0.5 * (e + e.adjoint());
        g = std::complex<double>(0.0, 0.5) * (e.adjoint() - e);
    }

    double operator()(double theta) const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
            std::cos(theta) * h + std::sin(theta) * g, Eigen::EigenvaluesOnly);
        return solver.eigenvalues().maxCoeff();
    }
};

}  // namespace

std::vector<double> eigenvalues(const ComplexMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(hermitian), Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

double spectral_norm(const ComplexMatrix& m) { return singular_values(m).front(); }

double support(const ComplexMatrix& t, double theta) { return CartesianEigen(t)(theta); }

double grid_radius_exhaustive(const ComplexMatrix& t, std::size_t points) {
    const CartesianEigen f(t);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(points);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < points; ++k) best = std::max(best, f(step * static_cast<double>(k)));
    return best;
}

double grid_radius(const ComplexMatrix& t, std::size_t points) {
    const CartesianEigen f(t);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(points);
    auto at = [&](std::size_t k) { return f(step * static_cast<double>(k % points)); };

    struct Range {
        std::size_t lo, hi;  // grid indices, hi may equal points (wraps to 0)
        double f_lo, f_hi;
        double bound;
    };
    auto bound_of = [&](std::size_t lo, std::size_t hi, double f_lo, double f_hi) {
        const double half = 0.5 * step * static_cast<double>(hi - lo);
        const double mid = f(0.5 * step * static_cast<double>(lo + hi));
        return std::max({f_lo, f_hi, mid / std::cos(half)});
    };
    auto cmp = [](const Range& a, const Range& b) { return a.bound < b.bound; };
    std::priority_queue<Range, std::vector<Range>, decltype(cmp)> queue(cmp);

    const std::size_t chunks = std::min<std::size_t>(64, points);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> edge(chunks + 1);
    for (std::size_t c = 0; c <= chunks; ++c) {
        edge[c] = at(c * points / chunks);
        best = std::max(best, edge[c]);
    }
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = c * points / chunks;
        const std::size_t hi = (c + 1) * points / chunks;
        queue.push({lo, hi, edge[c], edge[c + 1], bound_of(lo, hi, edge[c], edge[c + 1])});
    }
    while (!queue.empty()) {
        const Range r = queue.top();
        queue.pop();
        if (r.bound <= best) break;  // best-first: nothing left can beat it
        if (r.hi - r.lo <= 1) continue;
        const std::size_t m = (r.lo + r.hi) / 2;
        const double fm = at(m);
        best = std::max(best, fm);
        queue.push({r.lo, m, r.f_lo, fm, bound_of(r.lo, m, r.f_lo, fm)});
        queue.push({m, r.hi, fm, r.f_hi, bound_of(m, r.hi, fm, r.f_hi)});
    }
    return best;
}

double distance_to_ellipse(Complex z, Complex center, Complex direction, double semi_major,
                           double semi_minor) {
    auto dist = [&](double s) {
        return std::abs(z - center - direction * Complex{semi_major * std::cos(s), semi_minor * std::sin(s)});
    };
    constexpr int samples = 4096;
    const double step = 2.0 * std::numbers::pi / samples;
    int best_k = 0;
    double best = dist(0.0);
    for (int k = 1; k < samples; ++k) {
        const double d = dist(k * step);
        if (d < best) {
            best = d;
            best_k = k;
        }
    }
    double a = (best_k - 1) * step;
    double b = (best_k + 1) * step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    while (b - a > 1e-14) {
        if (dist(c) < dist(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - inv_phi * (b - a);
        d = a + inv_phi * (b - a);
    }
    return std::min(best, dist(0.5 * (a + b)));
}

}  // namespace sector_radius::oracle
