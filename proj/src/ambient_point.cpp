#include "cbih/ambient_point.hpp"

#include <cmath>

namespace cbih {

namespace {

// Construction-time invariant tolerances.
constexpr double kSymmetryTol = 1e-12;
constexpr double kUnitDecompositionTol = 1e-10;

} // namespace

PointState::PointState(Epsilon eps,
                       Eigen::MatrixXd shape_operator,
                       Eigen::VectorXd tangent_part,
                       double cos_alpha,
                       Eigen::VectorXd grad_mean_curvature,
                       Eigen::VectorXd grad_norm_A_squared,
                       double laplacian_mean_curvature)
    : eps_(eps),
      shape_(std::move(shape_operator)),
      tangent_(std::move(tangent_part)),
      cos_alpha_(cos_alpha),
      grad_H_(std::move(grad_mean_curvature)),
      grad_A2_(std::move(grad_norm_A_squared)),
      lap_H_(laplacian_mean_curvature) {
    const auto m = shape_.rows();
    if (m < 2) {
        throw DomainError("point state needs dimension >= 2");
    }
    if (shape_.cols() != m || tangent_.size() != m || grad_H_.size() != m || grad_A2_.size() != m) {
        throw DomainError("point state fields have inconsistent dimensions");
    }
    if ((shape_ - shape_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
        throw DomainError("shape operator is not symmetric");
    }
    const double unit = tangent_.squaredNorm() + cos_alpha_ * cos_alpha_;
    if (std::abs(unit - 1.0) > kUnitDecompositionTol) {
        throw DomainError("|T|^2 + cos^2(alpha) must be 1, got " + std::to_string(unit));
    }
}

PointState PointState::constant_curvature(Epsilon eps,
                                          const Eigen::MatrixXd& shape_operator,
                                          const Eigen::VectorXd& tangent_part,
                                          double cos_alpha) {
    const auto m = shape_operator.rows();
    return PointState(eps, shape_operator, tangent_part, cos_alpha,
                      Eigen::VectorXd::Zero(m), Eigen::VectorXd::Zero(m), 0.0);
}

double t_of_cos_alpha(const PointState& st) {
    return -st.tangent().dot(st.shape() * st.tangent());
}

Eigen::MatrixXd ricci_operator(const PointState& st) {
    const double m = st.dimension();
    const double eps = epsilon_value(st.eps());
    const double t2 = st.tangent().squaredNorm();
    const Eigen::MatrixXd& A = st.shape();

    Eigen::MatrixXd ric = (eps * (m - 1.0) - eps * t2) *
                          Eigen::MatrixXd::Identity(st.dimension(), st.dimension());
    ric.noalias() -= eps * (m - 2.0) * (st.tangent() * st.tangent().transpose());
    ric.noalias() -= A * A;
    ric.noalias() += m * st.mean_curvature() * A;
    return ric;
}

double scalar_curvature_product(const PointState& st) {
    const double m = st.dimension();
    const double eps = epsilon_value(st.eps());
    const double t2 = st.tangent().squaredNorm();
    const double H = st.mean_curvature();
    return eps * m * (m - 1.0) - 2.0 * eps * (m - 1.0) * t2 - st.norm_A_squared() + m * m * H * H;
}

} // namespace cbih
