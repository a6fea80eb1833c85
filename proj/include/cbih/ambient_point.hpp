#pragma once

#include <Eigen/Dense>

#include "cbih/spectra.hpp"

namespace cbih {

/// Pointwise geometric data of a hypersurface in L^m(eps) x R, expressed in
/// one fixed orthonormal tangent frame chosen by the caller.
///
/// T is the tangential part of the unit field along the R factor and
/// cos_alpha its normal component, so |T|^2 + cos_alpha^2 = 1. The gradient
/// and Laplacian fields are free inputs (at constant-curvature points pass
/// zeros); the Laplacian uses the geometers' sign.
class PointState {
public:
    PointState(Epsilon eps,
               Eigen::MatrixXd shape_operator,
               Eigen::VectorXd tangent_part,
               double cos_alpha,
               Eigen::VectorXd grad_mean_curvature,
               Eigen::VectorXd grad_norm_A_squared,
               double laplacian_mean_curvature);

    /// State with all gradient data zero, for constant principal curvatures.
    static PointState constant_curvature(Epsilon eps,
                                         const Eigen::MatrixXd& shape_operator,
                                         const Eigen::VectorXd& tangent_part,
                                         double cos_alpha);

    int dimension() const noexcept { return static_cast<int>(shape_.rows()); }
    Epsilon eps() const noexcept { return eps_; }
    const Eigen::MatrixXd& shape() const noexcept { return shape_; }
    const Eigen::VectorXd& tangent() const noexcept { return tangent_; }
    double cos_alpha() const noexcept { return cos_alpha_; }
    const Eigen::VectorXd& grad_H() const noexcept { return grad_H_; }
    const Eigen::VectorXd& grad_A2() const noexcept { return grad_A2_; }
    double lap_H() const noexcept { return lap_H_; }

    double mean_curvature() const { return shape_.trace() / dimension(); }
    double norm_A_squared() const { return shape_.squaredNorm(); }
    double trace_A_cubed() const { return (shape_ * shape_ * shape_).trace(); }
    double sin_alpha_squared() const { return 1.0 - cos_alpha_ * cos_alpha_; }

private:
    Epsilon eps_;
    Eigen::MatrixXd shape_;
    Eigen::VectorXd tangent_;
    double cos_alpha_;
    Eigen::VectorXd grad_H_;
    Eigen::VectorXd grad_A2_;
    double lap_H_;
};

/// Derivative of the angle function along T: T(cos alpha) = -<A(T), T>.
double t_of_cos_alpha(const PointState& st);

/// Ricci operator of the induced metric,
/// Ric = eps(m-1) Id - eps|T|^2 Id - eps(m-2) T T^t - A^2 + mH A.
Eigen::MatrixXd ricci_operator(const PointState& st);

/// Scal = eps m(m-1) - 2 eps (m-1)|T|^2 - |A|^2 + m^2 H^2
/// (the trace of the Ricci operator).
double scalar_curvature_product(const PointState& st);

} // namespace cbih
