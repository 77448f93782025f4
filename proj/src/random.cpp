#include "sector_radius/random.hpp"

#include <cmath>
#include <numbers>

namespace sector_radius {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream + kGolden))) {}

std::uint64_t CounterRng::next_u64() { return splitmix64(key_ + (++counter_) * kGolden); }

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double CounterRng::normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex CounterRng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
}

int CounterRng::integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next_u64() % span);
}

ComplexMatrix random_complex_matrix(CounterRng& rng, std::size_t n) {
    ComplexMatrix m(n);
    for (auto& z : m.data()) z = rng.complex_normal();
    return m;
}

ComplexMatrix random_hermitian(CounterRng& rng, std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = rng.normal();
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = rng.complex_normal();
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

ComplexMatrix random_unitary(CounterRng& rng, std::size_t n) {
    auto g = random_complex_matrix(rng, n);
    ComplexMatrix q(n);
    std::vector<ComplexVector> cols;
    for (std::size_t j = 0; j < n; ++j) {
        ComplexVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = g(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& c : cols) {
                const Complex proj = inner(c, v);
                for (std::size_t i = 0; i < n; ++i) v[i] -= proj * c[i];
            }
        const double len = norm(v);
        for (auto& z : v) z /= len;
        for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i];
        cols.push_back(std::move(v));
    }
    return q;
}

}  // namespace sector_radius
