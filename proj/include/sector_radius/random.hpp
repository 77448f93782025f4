#pragma once

#include <cstdint>

#include "sector_radius/complex_matrix.hpp"

namespace sector_radius {

/// Counter-based generator: draw k of stream `seed` is splitmix64(seed_key + k * golden),
/// so every value is a pure function of (seed, stream, k). Uniforms take the top
/// 53 bits; normals use Box-Muller on two consecutive uniforms. Standard library
/// distributions are avoided since their output is implementation-defined.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi);
    double normal();
    Complex complex_normal();
    int integer(int lo, int hi);  // inclusive

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Entries i.i.d. complex normal.
ComplexMatrix random_complex_matrix(CounterRng& rng, std::size_t n);
/// Hermitian with i.i.d. complex normal upper triangle and real normal diagonal.
ComplexMatrix random_hermitian(CounterRng& rng, std::size_t n);
/// Haar-distributed unitary (Gram-Schmidt on a complex Ginibre matrix).
ComplexMatrix random_unitary(CounterRng& rng, std::size_t n);

}  // namespace sector_radius
