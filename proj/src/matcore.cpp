#include "sector_radius/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sector_radius/errors.hpp"

namespace sector_radius {
namespace {

// Two-sided Jacobi rotation parameters that zero the (p,q) entry of the
// Hermitian 2x2 block [[app, apq], [conj(apq), aqq]]. The rotation is
// J = [[c, s e^{i phi}], [-s e^{-i phi}, c]] with e^{i phi} = apq/|apq|.
struct Rotation {
    double c;
    double s;
    double t;
    Complex phase;
};

Rotation jacobi_rotation(double app, double aqq, Complex apq) {
    const double g = std::abs(apq);
    const double zeta = (aqq - app) / (2.0 * g);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
    const double c = 1.0 / std::hypot(1.0, t);
    return {c, t * c, t, apq / g};
}

void require_square_finite(const ComplexMatrix& m) {
    if (!m.is_finite()) throw ShapeError("matrix has non-finite entries");
}

void require_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
    require_square_finite(m);
    const std::size_t n = m.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    if (worst > tol.hermitian * std::max(1.0, m.frobenius_norm()))
        throw ShapeError("matrix is not Hermitian (max |M - M*| = " + std::to_string(worst) + ")");
}

// Cyclic Jacobi on a Hermitian matrix held row-major in `a` (overwritten).
// Accumulates rotations into `v` when given. Returns the diagonal.
std::vector<double> jacobi(std::vector<Complex>& a, std::size_t n, std::vector<Complex>* v,
                           const Tolerances& tol) {
    double scale = 0.0;
    for (const auto& z : a) scale += std::norm(z);
    scale = std::sqrt(scale);
    const double target = tol.jacobi_offdiag * scale;
    const double negligible = 1e-18 * scale;

    for (int sweep = 0; sweep < tol.jacobi_max_sweeps && scale > 0.0; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a[p * n + q]);
        if (std::sqrt(2.0 * off) <= target) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a[p * n + q];
                const double g = std::abs(apq);
                if (g <= negligible) continue;
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const Rotation r = jacobi_rotation(app, aqq, apq);
                const Complex sp = r.s * r.phase;
                const Complex sc = r.s * std::conj(r.phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a[k * n + p];
                    const Complex akq = a[k * n + q];
                    a[k * n + p] = r.c * akp - sc * akq;
                    a[k * n + q] = sp * akp + r.c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a[p * n + k];
                    const Complex aqk = a[q * n + k];
                    a[p * n + k] = r.c * apk - sp * aqk;
                    a[q * n + k] = sc * apk + r.c * aqk;
                }
                a[p * n + p] = app - r.t * g;
                a[q * n + q] = aqq + r.t * g;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                if (v != nullptr) {
                    auto& vv = *v;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = vv[k * n + p];
                        const Complex vkq = vv[k * n + q];
                        vv[k * n + p] = r.c * vkp - sc * vkq;
                        vv[k * n + q] = sp * vkp + r.c * vkq;
                    }
                }
            }
        }
    }
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i].real();
    return diag;
}

// Hermitian part of m as a row-major buffer; removes rounding asymmetry.
std::vector<Complex> symmetrized(const ComplexMatrix& m) {
    const std::size_t n = m.size();
    std::vector<Complex> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a[i * n + j] = z;
            a[j * n + i] = std::conj(z);
        }
    }
    return a;
}

HermitianSpectrum spectrum_unchecked(const ComplexMatrix& m, const Tolerances& tol) {
    const std::size_t n = m.size();
    auto a = symmetrized(m);
    std::vector<Complex> v(n * n);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    const auto diag = jacobi(a, n, &v, tol);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

    HermitianSpectrum out{std::vector<double>(n), ComplexMatrix(n)};
    ComplexVector column(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.eigenvalues[k] = diag[src];
        for (std::size_t i = 0; i < n; ++i) column[i] = v[i * n + src];
        normalize_phase(column);
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = column[i];
    }
    return out;
}

std::vector<double> eigenvalues_unchecked(const ComplexMatrix& m, const Tolerances& tol) {
    auto a = symmetrized(m);
    auto diag = jacobi(a, m.size(), nullptr, tol);
    std::sort(diag.begin(), diag.end());
    return diag;
}

}  // namespace

CartesianPair cartesian_decompose(const ComplexMatrix& t) {
    const std::size_t n = t.size();
    ComplexMatrix h(n), g(n);
    const Complex i_unit{0.0, 1.0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Complex tij = t(i, j);
            const Complex tji_conj = std::conj(t(j, i));
            h(i, j) = 0.5 * (tij + tji_conj);
            g(i, j) = 0.5 * i_unit * (tji_conj - tij);
        }
    return {std::move(h), std::move(g)};
}

ComplexVector HermitianSpectrum::eigenvector(std::size_t k) const {
    const std::size_t n = eigenvectors.size();
    ComplexVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = eigenvectors(i, k);
    return v;
}

HermitianSpectrum hermitian_spectrum(const ComplexMatrix& m, const Tolerances& tol) {
    require_hermitian(m, tol);
    return spectrum_unchecked(m, tol);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, const Tolerances& tol) {
    require_hermitian(m, tol);
    return eigenvalues_unchecked(m, tol);
}

double lambda_max(const ComplexMatrix& m, const Tolerances& tol) {
    return hermitian_eigenvalues(m, tol).back();
}

double lambda_min(const ComplexMatrix& m, const Tolerances& tol) {
    return hermitian_eigenvalues(m, tol).front();
}

ComplexMatrix hermitian_function(const HermitianSpectrum& spectrum,
                                 const std::function<double(double)>& f) {
    const auto& v = spectrum.eigenvectors;
    const std::size_t n = v.size();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(spectrum.eigenvalues[k]);
        if (fk == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(i, j) += fk * v(i, k) * std::conj(v(j, k));
    }
    return out;
}

double operator_norm(const ComplexMatrix& t, const Tolerances& tol) {
    require_square_finite(t);
    const auto gram = t.adjoint() * t;
    return std::sqrt(std::max(0.0, eigenvalues_unchecked(gram, tol).back()));
}

TopSingularSpace top_right_singular_space(const ComplexMatrix& t, const Tolerances& tol) {
    require_square_finite(t);
    const auto spectrum = spectrum_unchecked(t.adjoint() * t, tol);
    const std::size_t n = t.size();
    const double top = std::max(0.0, spectrum.eigenvalues.back());
    TopSingularSpace out{std::sqrt(top), {}};
    for (std::size_t k = n; k-- > 0;) {
        if (spectrum.eigenvalues[k] < top * (1.0 - 2.0 * tol.singular_tie)) break;
        out.vectors.push_back(spectrum.eigenvector(k));
    }
    return out;
}

std::vector<double> singular_values(std::size_t rows, std::size_t cols,
                                    std::span<const Complex> row_major, const Tolerances& tol) {
    if (row_major.size() != rows * cols) throw DimensionError("entry count does not match rows*cols");
    // Column-major copy; one-sided Jacobi orthogonalizes the columns.
    std::vector<Complex> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[j * rows + i] = row_major[i * cols + j];

    const double orth = 1e-15;
    for (int sweep = 0; sweep < 4 * tol.jacobi_max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                Complex* cp = &a[p * rows];
                Complex* cq = &a[q * rows];
                double alpha = 0.0, beta = 0.0;
                Complex gamma = 0.0;
                for (std::size_t k = 0; k < rows; ++k) {
                    alpha += std::norm(cp[k]);
                    beta += std::norm(cq[k]);
                    gamma += std::conj(cp[k]) * cq[k];
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= orth * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const Rotation r = jacobi_rotation(alpha, beta, gamma);
                const Complex sp = r.s * r.phase;
                const Complex sc = r.s * std::conj(r.phase);
                for (std::size_t k = 0; k < rows; ++k) {
                    const Complex xp = cp[k];
                    const Complex xq = cq[k];
                    cp[k] = r.c * xp - sc * xq;
                    cq[k] = sp * xp + r.c * xq;
                }
            }
        }
        if (!rotated) break;
    }
    std::vector<double> sigma(cols);
    for (std::size_t j = 0; j < cols; ++j)
        sigma[j] = norm(std::span<const Complex>(&a[j * rows], rows));
    std::sort(sigma.begin(), sigma.end(), std::greater<>());
    return sigma;
}

int commutant_dimension(const ComplexMatrix& t, const Tolerances& tol) {
    require_square_finite(t);
    const std::size_t n = t.size();
    const std::size_t unknowns = n * n;
    const auto [h, g] = cartesian_decompose(t);

    // Rows: vec(HX - XH) stacked over vec(GX - XG); X_ab sits at column b*n + a.
    std::vector<Complex> op(2 * unknowns * unknowns);
    auto at = [&](std::size_t row, std::size_t col) -> Complex& { return op[row * unknowns + col]; };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t col = b * n + a;
            for (std::size_t i = 0; i < n; ++i) {
                // (M E_ab)_{ib} = M_ia ;  (E_ab M)_{aj} = M_bj
                at(b * n + i, col) += h(i, a);
                at(unknowns + b * n + i, col) += g(i, a);
                at(i * n + a, col) -= h(b, i);
                at(unknowns + i * n + a, col) -= g(b, i);
            }
        }
    }
    const auto sigma = singular_values(2 * unknowns, unknowns, op, tol);
    if (sigma.front() == 0.0) return static_cast<int>(unknowns);
    const double cutoff = tol.rank * sigma.front();
    const auto rank = std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > cutoff; });
    return static_cast<int>(unknowns - static_cast<std::size_t>(rank));
}

ComplexMatrix compress(const ComplexMatrix& m, std::span<const ComplexVector> basis) {
    const std::size_t k = basis.size();
    if (k == 0) throw DimensionError("cannot compress onto an empty basis");
    ComplexMatrix out(k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto mj = m.apply(basis[j]);
        for (std::size_t i = 0; i < k; ++i) out(i, j) = inner(basis[i], mj);
    }
    return out;
}

std::vector<ComplexVector> orthonormal_complement(std::span<const ComplexVector> basis, std::size_t n) {
    std::vector<ComplexVector> frame(basis.begin(), basis.end());
    std::vector<ComplexVector> out;
    std::vector<bool> used(n, false);
    auto residual = [&](std::size_t j) {
        ComplexVector v(n);
        v[j] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : frame) {
                const Complex proj = inner(b, v);
                for (std::size_t i = 0; i < n; ++i) v[i] -= proj * b[i];
            }
        return v;
    };
    // Pivoted Gram-Schmidt over the standard basis: always take the
    // coordinate vector with the largest residual.
    while (frame.size() < n) {
        std::size_t pick = n;
        double best = -1.0;
        ComplexVector chosen;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            auto v = residual(j);
            const double len = norm(v);
            if (len > best) {
                best = len;
                pick = j;
                chosen = std::move(v);
            }
        }
        if (pick == n || best <= 1e-12) break;
        used[pick] = true;
        for (auto& z : chosen) z /= best;
        frame.push_back(chosen);
        out.push_back(std::move(chosen));
    }
    return out;
}

SimilarityInvariants2x2 similarity_invariants_2x2(const ComplexMatrix& a) {
    if (a.size() != 2) throw DimensionError("similarity invariants require a 2x2 matrix");
    const double fro = a.frobenius_norm();
    return {a.trace(), a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0), fro * fro};
}

double invariants_distance(const SimilarityInvariants2x2& a, const SimilarityInvariants2x2& b) {
    return std::max({std::abs(a.trace - b.trace), std::abs(a.determinant - b.determinant),
                     std::abs(a.frobenius_sq - b.frobenius_sq)});
}

}  // namespace sector_radius
