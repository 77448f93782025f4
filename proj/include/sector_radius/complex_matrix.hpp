#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sector_radius {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense square complex matrix stored row-major. Dimension is at least 1.
class ComplexMatrix {
public:
    /// Zero matrix of dimension n.
    explicit ComplexMatrix(std::size_t n);
    ComplexMatrix(std::size_t n, std::vector<Complex> row_major);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> values);

    std::size_t size() const noexcept { return n_; }

    Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

    std::span<const Complex> data() const noexcept { return data_; }
    std::span<Complex> data() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_finite() const;

    ComplexVector apply(std::span<const Complex> x) const;
    /// Returns T* x without forming the adjoint.
    ComplexVector apply_adjoint(std::span<const Complex> x) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);
    ComplexMatrix& operator/=(Complex s);

private:
    std::size_t n_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);
ComplexMatrix operator/(ComplexMatrix m, Complex s);

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise comparison: max |a_ij - b_ij| <= tol. Sizes must agree.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// <x, y> = sum conj(x_i) y_i.
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> x);

/// Scales x to unit length and rotates its phase so the first component
/// with modulus above `tiny` is real and positive.
void normalize_phase(std::span<Complex> x, double tiny = 1e-12);

}  // namespace sector_radius
