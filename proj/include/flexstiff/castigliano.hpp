#pragma once

#include <Eigen/Dense>

#include "flexstiff/geometry.hpp"

namespace flexstiff {

/// Generalized in-plane load at a point: forces along X/Y and moment about Z
/// (counterclockwise positive).
struct LoadVector {
    double fx = 0.0;     // [N]
    double fy = 0.0;     // [N]
    double m_phi = 0.0;  // [N*m]
};

/// Generalized in-plane displacement: translations and rotation about Z.
struct DisplacementVector {
    double dx = 0.0;     // [m]
    double dy = 0.0;     // [m]
    double d_phi = 0.0;  // [rad]
};

enum class MatrixKind { Compliance, Stiffness };

/// Symmetric 3x3 matrix over the generalized coordinates (x, y, phi).
struct InPlaneMatrix {
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    MatrixKind kind = MatrixKind::Compliance;

    /// max_ij |m_ij - m_ji| / max_ij |m_ij| (0 for the zero matrix).
    double symmetry_error() const;
    double max_abs() const { return m.cwiseAbs().maxCoeff(); }
};

/// The six independent entries of a stiffness InPlaneMatrix, named as in the
/// load-displacement relation [Fx, Fy, Mphi]^T = K [dx, dy, dphi]^T.
struct SpringConstants {
    double k_x = 0.0;     // [N/m]
    double k_y = 0.0;     // [N/m]
    double k_phi = 0.0;   // [N*m/rad]
    double k_xy = 0.0;    // [N/m]
    double k_xphi = 0.0;  // [N/rad]
    double k_yphi = 0.0;  // [N/rad]

    static SpringConstants from_matrix(const InPlaneMatrix& stiffness);
    InPlaneMatrix to_matrix() const;
};

/// Internal bending moment along one segment, linear in the arc coordinate.
struct LinearMoment {
    double at_start = 0.0;
    double slope = 0.0;  // per meter of arc length

    double at(double s) const { return at_start + slope * s; }
};

/// Bending-moment fields per segment for the three unit tip loads
/// (Fx = 1, Fy = 1, Mphi = 1), with moments positive counterclockwise.
struct MomentField {
    struct SegmentMoments {
        double length = 0.0;
        LinearMoment unit_fx;
        LinearMoment unit_fy;
        LinearMoment unit_mphi;  // identically 1 on a cantilever path
    };
    std::vector<SegmentMoments> segments;
};

/// Moments at r(s) from unit loads applied at the tip r_t:
///   m_Fx(s) = -(y_t - y(s)),  m_Fy(s) = +(x_t - x(s)),  m_M(s) = 1.
MomentField moment_field(const BeamPath& path);

enum class QuadratureRule { GaussTwoPoint, GaussFourPoint };

/// Tip compliance from the unit-load method, bending energy only:
///   C_ij = sum over segments of  integral m_i(s) m_j(s) / (E I_segment) ds.
/// The integrand is quadratic per straight segment, so the default 2-point
/// Gauss rule is exact; the 4-point rule exists for the exactness check.
InPlaneMatrix compliance_matrix(const BeamPath& path, double youngs_modulus,
                                QuadratureRule rule = QuadratureRule::GaussTwoPoint);

/// K = C^-1 via an equilibrated symmetric eigendecomposition.
/// Throws SingularCompliance (with the null direction) when the equilibrated
/// reciprocal condition number falls below 1e-12.
InPlaneMatrix stiffness_matrix(const InPlaneMatrix& compliance);

/// Scale-free inversion residual: max_ij |(K C - I)_ij| * sqrt(C_ii / C_jj).
/// Plain (K C - I) mixes units across rows, this form does not.
double inverse_residual(const InPlaneMatrix& stiffness, const InPlaneMatrix& compliance);

/// build_rss_path -> compliance_matrix -> stiffness_matrix, repackaged.
SpringConstants spring_constants(const RssParams& params, SpringVariant variant);

}  // namespace flexstiff
