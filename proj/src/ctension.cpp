#include "cbih/ctension.hpp"

#include <cmath>

namespace cbih {

CTensionComponents product_components(const PointState& st) {
    const double m = st.dimension();
    const double eps = epsilon_value(st.eps());
    const double H = st.mean_curvature();
    const double A2 = st.norm_A_squared();
    const double A3 = st.trace_A_cubed();
    const double cosa = st.cos_alpha();
    const double sin2a = st.sin_alpha_squared(); // 1 - cos^2, never via an angle
    const Eigen::MatrixXd& A = st.shape();
    const Eigen::VectorXd& T = st.tangent();

    CTensionComponents out;
    out.tangential = -2.0 * m * (A * st.grad_H())
                     - m * m * H * st.grad_H()
                     - 2.0 * m * (m - 1.0) * eps * H * cosa * T
                     - (4.0 / 3.0) * (m - 1.0) * eps * cosa * (A * T)
                     - (1.0 / 3.0) * st.grad_A2()
                     + (2.0 / 3.0) * m * m * H * st.grad_H();

    out.normal = -m * st.lap_H()
                 + (2.0 / 3.0) * m * (m - 1.0) * (3.0 - m) * eps * H
                 + (1.0 / 3.0) * m * (7.0 * m - 13.0) * eps * H * sin2a
                 + (5.0 / 3.0) * m * H * A2
                 + 2.0 * (m - 2.0) * eps * t_of_cos_alpha(st)
                 - 2.0 * A3
                 - (2.0 / 3.0) * m * m * m * H * H * H;
    return out;
}

Eigen::VectorXd constant_spectrum_tangential(const PointState& st) {
    const double m = st.dimension();
    const double eps = epsilon_value(st.eps());
    const double H = st.mean_curvature();
    return -(2.0 / 3.0) * eps * (m - 1.0) * st.cos_alpha() *
           (3.0 * m * H * st.tangent() + 2.0 * (st.shape() * st.tangent()));
}

EuclideanIsoFamily EuclideanIsoFamily::hyperplane(int m) {
    if (m < 2) throw DomainError("hyperplane dimension must be >= 2");
    return EuclideanIsoFamily(Kind::hyperplane, 0.0, 0, m);
}

EuclideanIsoFamily EuclideanIsoFamily::sphere(double radius, int m) {
    if (m < 2) throw DomainError("sphere dimension must be >= 2");
    if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
    return EuclideanIsoFamily(Kind::sphere, radius, m, m);
}

EuclideanIsoFamily EuclideanIsoFamily::cylinder(double radius, int k, int m) {
    if (m < 2) throw DomainError("cylinder dimension must be >= 2");
    if (!(radius > 0.0)) throw DomainError("cylinder radius must be positive");
    if (k < 1 || k > m - 1) {
        throw DomainError("cylinder sphere dimension must satisfy 1 <= k <= m-1");
    }
    return EuclideanIsoFamily(Kind::cylinder, radius, k, m);
}

PrincipalSpectrum EuclideanIsoFamily::spectrum() const {
    switch (kind_) {
    case Kind::hyperplane:
        return PrincipalSpectrum({{0.0, m_}}, m_);
    case Kind::sphere:
        return PrincipalSpectrum({{1.0 / radius_, m_}}, m_);
    case Kind::cylinder:
        return PrincipalSpectrum({{1.0 / radius_, k_}, {0.0, m_ - k_}}, m_);
    }
    throw DomainError("invalid Euclidean family");
}

double euclidean_isoparametric_residual(const EuclideanIsoFamily& fam) {
    const PrincipalSpectrum spec = fam.spectrum();
    const double m = spec.dimension();
    const double H = mean_curvature(spec);
    return (5.0 / 3.0) * m * H * norm_A_squared(spec) - 2.0 * trace_A_cubed(spec) -
           (2.0 / 3.0) * m * m * m * H * H * H;
}

double residual_const_scal(const PrincipalSpectrum& spec, Epsilon eps, double lap_H) {
    const double m = spec.dimension();
    const double e = epsilon_value(eps);
    const double H = mean_curvature(spec);
    const double A2 = norm_A_squared(spec);
    const double A3 = trace_A_cubed(spec);
    return m * (-lap_H +
                (H / 3.0) * (5.0 * A2 - 2.0 * m * m * H * H - e * (2.0 * m * m - 11.0 * m + 6.0)) -
                (2.0 / m) * A3);
}

CTensionComponents umbilical_components(int m_int,
                                        Epsilon eps_e,
                                        double H,
                                        const Eigen::VectorXd& grad_H,
                                        const Eigen::VectorXd& T,
                                        double cos_alpha,
                                        double lap_H) {
    if (m_int < 2) throw DomainError("umbilical state needs dimension >= 2");
    if (grad_H.size() != m_int || T.size() != m_int) {
        throw DomainError("umbilical state fields have inconsistent dimensions");
    }
    const double unit = T.squaredNorm() + cos_alpha * cos_alpha;
    if (std::abs(unit - 1.0) > 1e-10) {
        throw DomainError("|T|^2 + cos^2(alpha) must be 1");
    }
    const double m = m_int;
    const double eps = epsilon_value(eps_e);
    const double sin2a = 1.0 - cos_alpha * cos_alpha;

    CTensionComponents out;
    out.tangential = -(1.0 / 3.0) * m * (m + 8.0) * H * grad_H
                     - (2.0 / 3.0) * (m - 1.0) * (3.0 * m + 2.0) * eps * H * cos_alpha * T;
    out.normal = -m * lap_H
                 + (2.0 / 3.0) * m * (m - 1.0) * (3.0 - m) * eps * H
                 + (1.0 / 3.0) * (m - 1.0) * (7.0 * m - 12.0) * eps * H * sin2a
                 - (1.0 / 3.0) * m * (2.0 * m * m - 5.0 * m + 6.0) * H * H * H;
    return out;
}

UmbilicalCoefficientScan umbilical_coefficient_rootfree(long long m_max) {
    if (m_max < 2) throw DomainError("umbilical coefficient scan needs m_max >= 2");
    UmbilicalCoefficientScan out;
    out.root_free = true;
    for (long long m = 2; m <= m_max; ++m) {
        if (5 * m * m - 10 * m - 4 == 0) {
            out.root_free = false;
            break;
        }
    }
    const double half_gap = 3.0 * std::sqrt(5.0) / 5.0;
    out.real_root_low = 1.0 - half_gap;
    out.real_root_high = 1.0 + half_gap;
    return out;
}

double hyperbolic_trace_A_cubed(double b, int m, int sign) {
    if (m < 2) throw DomainError("dimension must be >= 2");
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    return sign * (m - 1.0) * b * b * b / std::pow(1.0 + b * b, 1.5);
}

SpectrumClassification classify_constant_spectrum(Epsilon eps,
                                                  double cos_alpha,
                                                  const PrincipalSpectrum& spec,
                                                  double a_of_T_eigenvalue) {
    if (eps == Epsilon::euclidean) {
        return {ConstantSpectrumClass::euclidean_only_geodesic, std::nullopt};
    }
    if (cos_alpha == 0.0) {
        return {ConstantSpectrumClass::cylinder_over_space_form, std::nullopt};
    }
    // eps != 0, cos alpha != 0: the tangential equation forces T to be a
    // principal direction with eigenvalue -3mH/2.
    const double m = spec.dimension();
    const double H = mean_curvature(spec);
    const double required = -1.5 * m * H;
    if (std::abs(a_of_T_eigenvalue - required) > 1e-10) {
        throw InvalidCaseError("eigenvalue on T is " + std::to_string(a_of_T_eigenvalue) +
                               " but the tangential equation requires " + std::to_string(required));
    }
    // The two-curvature structure puts eigenvalue 0 on T, hence H = 0, and the
    // normal equation reduces to trace A^3 = +-(m-1) b^3/(1+b^2)^{3/2} = 0.
    HyperbolicWitness w;
    w.required_T_eigenvalue = required;
    w.deduced_mean_curvature = 0.0;
    w.forced_b = 0.0;
    return {ConstantSpectrumClass::hyperbolic_forced_geodesic, w};
}

} // namespace cbih
