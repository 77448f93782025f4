#pragma once

#include <optional>
#include <vector>

#include "sector_radius/complex_matrix.hpp"
#include "sector_radius/tolerances.hpp"

namespace sector_radius {

/// Half-opening angle alpha of S(alpha) = {a + ib : |b| <= a tan(alpha)},
/// alpha in [0, pi/2]. S(pi/2) is the closed right half-plane.
class SectorAngle {
public:
    /// Throws ParameterError outside [0, pi/2]. Values within 1e-12 above
    /// pi/2 are clamped to pi/2.
    explicit SectorAngle(double radians);

    static SectorAngle right_half_plane();

    double radians() const noexcept { return alpha_; }
    bool is_right_half_plane() const noexcept;

    /// tau(alpha) = sqrt(1 + sin^2 alpha), the sharp bound on |T| / w(T).
    double tau() const noexcept;

private:
    double alpha_;
};

double tau(double alpha);

/// One sample of the support function of W(T) in direction theta.
struct BoundarySample {
    double theta;
    double support_value;   // lambda_max(cos(theta) H + sin(theta) G)
    Complex boundary_point; // <Tv, v> for the maximizing unit eigenvector v
};

BoundarySample support_value(const ComplexMatrix& t, double theta,
                             const Tolerances& tol = default_tolerances());

/// w(T) = max over theta of the support function, found by a coarse scan
/// followed by golden-section refinement of the best brackets.
double numerical_radius(const ComplexMatrix& t, const Tolerances& tol = default_tolerances());

/// Support samples at theta_k = 2 pi k / m. Throws ParameterError for m < 3.
std::vector<BoundarySample> boundary_points(const ComplexMatrix& t, int m,
                                            const Tolerances& tol = default_tolerances());

/// W(A) of a 2x2 matrix: an elliptical disk with the eigenvalues as foci.
struct EllipseDescriptor {
    Complex focus1;
    Complex focus2;
    double minor_axis_length;
    double major_axis_length;

    Complex center() const { return 0.5 * (focus1 + focus2); }
    bool is_segment() const { return minor_axis_length == 0.0; }
    /// Unit vector along the major axis (along the real axis when the foci coincide).
    Complex major_direction() const;
    /// Point of the boundary curve at parameter t: center + u (a cos t + i b sin t).
    Complex point(double t) const;
    /// Boundary point maximizing Re(e^{-i theta} z).
    Complex support_point(double theta) const;
};

EllipseDescriptor ellipse_2x2(const ComplexMatrix& a);

/// W(T) subset S(alpha): both sin(a) H + cos(a) G and sin(a) H - cos(a) G are PSD.
bool sector_contains(const ComplexMatrix& t, SectorAngle alpha,
                     const Tolerances& tol = default_tolerances());

/// Smallest alpha with W(T) subset S(alpha), or nullopt if H is not PSD.
std::optional<SectorAngle> min_sector_angle(const ComplexMatrix& t,
                                            const Tolerances& tol = default_tolerances());

}  // namespace sector_radius
