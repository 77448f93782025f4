#include "sector_radius/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "sector_radius/errors.hpp"

namespace sector_radius {

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {
    if (n == 0) throw DimensionError("matrix dimension must be at least 1");
}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> row_major)
    : n_(n), data_(std::move(row_major)) {
    if (n == 0) throw DimensionError("matrix dimension must be at least 1");
    if (data_.size() != n * n) throw DimensionError("entry count does not match n*n");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : n_(rows.size()) {
    if (n_ == 0) throw DimensionError("matrix dimension must be at least 1");
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw DimensionError("matrix must be square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::is_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> x) const {
    if (x.size() != n_) throw DimensionError("vector length does not match matrix dimension");
    ComplexVector y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

ComplexVector ComplexMatrix::apply_adjoint(std::span<const Complex> x) const {
    if (x.size() != n_) throw DimensionError("vector length does not match matrix dimension");
    ComplexVector y(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) y[j] += std::conj((*this)(i, j)) * x[i];
    return y;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.n_ != n_) throw DimensionError("matrix sizes differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.n_ != n_) throw DimensionError("matrix sizes differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix& ComplexMatrix::operator/=(Complex s) {
    for (auto& z : data_) z /= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
ComplexMatrix operator/(ComplexMatrix m, Complex s) { return m /= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    const std::size_t n = lhs.size();
    if (rhs.size() != n) throw DimensionError("matrix sizes differ");
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.size();
    ComplexMatrix out(na + b.size());
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out(na + i, na + j) = b(i, j);
    return out;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        if (std::abs(a.data()[k] - b.data()[k]) > tol) return false;
    return true;
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
    if (x.size() != y.size()) throw DimensionError("vector lengths differ");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

double norm(std::span<const Complex> x) {
    double s = 0.0;
    for (const auto& z : x) s += std::norm(z);
    return std::sqrt(s);
}

void normalize_phase(std::span<Complex> x, double tiny) {
    const double len = norm(x);
    if (len == 0.0) return;
    for (auto& z : x) z /= len;
    for (auto& z : x) {
        if (std::abs(z) > tiny) {
            const Complex phase = std::conj(z) / std::abs(z);
            const double lead = std::abs(z);
            for (auto& w : x) w *= phase;
            z = lead;  // exactly real, not merely to rounding
            break;
        }
    }
}

}  // namespace sector_radius
