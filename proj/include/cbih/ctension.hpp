#pragma once

#include <optional>

#include <Eigen/Dense>

#include "cbih/ambient_point.hpp"
#include "cbih/spectra.hpp"

namespace cbih {

/// Tangential and normal components of the conformal-bitension field of a
/// hypersurface in L^m(eps) x R. The normal component is reported as the
/// scalar coefficient of the unit normal; the normal itself is never built.
struct CTensionComponents {
    Eigen::VectorXd tangential;
    double normal = 0.0;
};

/// Full product-space evaluation of both components at a point state.
/// T(cos alpha) is always derived from the shape operator via t_of_cos_alpha.
CTensionComponents product_components(const PointState& st);

/// Tangential component under a constant principal-curvature spectrum
/// (gradient terms dropped): -(2/3) eps (m-1) cos_alpha (3mH T + 2 A(T)).
Eigen::VectorXd constant_spectrum_tangential(const PointState& st);

/// Isoparametric hypersurface of Euclidean space R^{m+1}: a hyperplane, a
/// round sphere, or a cylinder over a round sphere.
class EuclideanIsoFamily {
public:
    enum class Kind { hyperplane, sphere, cylinder };

    static EuclideanIsoFamily hyperplane(int m);
    static EuclideanIsoFamily sphere(double radius, int m);
    /// Cylinder S^k(r) x R^{m-k}, 1 <= k <= m-1.
    static EuclideanIsoFamily cylinder(double radius, int k, int m);

    Kind kind() const noexcept { return kind_; }
    int dimension() const noexcept { return m_; }
    double radius() const noexcept { return radius_; }
    int sphere_dimension() const noexcept { return k_; }

    PrincipalSpectrum spectrum() const;

private:
    EuclideanIsoFamily(Kind kind, double radius, int k, int m)
        : kind_(kind), radius_(radius), k_(k), m_(m) {}

    Kind kind_;
    double radius_;
    int k_;
    int m_;
};

/// Normal-component residual of an isoparametric hypersurface of R^{m+1}:
/// (5/3) m H |A|^2 - 2 trace A^3 - (2/3) m^3 H^3. Vanishes only for
/// hyperplanes.
double euclidean_isoparametric_residual(const EuclideanIsoFamily& fam);

/// Normal residual for a constant-scalar-curvature hypersurface of a space
/// form: m(-lap_H + (H/3)(5|A|^2 - 2m^2H^2 - eps(2m^2-11m+6)) - (2/m) tr A^3).
double residual_const_scal(const PrincipalSpectrum& spec, Epsilon eps, double lap_H);

/// Components for a totally umbilical hypersurface (A = H Id) of
/// L^m(eps) x R; H need not be constant, so the gradient data stays free.
CTensionComponents umbilical_components(int m,
                                        Epsilon eps,
                                        double H,
                                        const Eigen::VectorXd& grad_H,
                                        const Eigen::VectorXd& T,
                                        double cos_alpha,
                                        double lap_H);

struct UmbilicalCoefficientScan {
    bool root_free = false;      // no integer zero of 5m^2 - 10m - 4 in [2, m_max]
    double real_root_low = 0.0;  // 1 - 3*sqrt(5)/5
    double real_root_high = 0.0; // 1 + 3*sqrt(5)/5
};

/// Scans 5m^2 - 10m - 4 over integer m in [2, m_max] and reports its two
/// (irrational) real roots. The polynomial never vanishing at an integer is
/// what forces umbilical c-biharmonic hypersurfaces to have constant H.
UmbilicalCoefficientScan umbilical_coefficient_rootfree(long long m_max);

/// trace A^3 = sign (m-1) b^3 / (1+b^2)^{3/2} for the two-curvature
/// hyperbolic case; its only zero in b is b = 0.
double hyperbolic_trace_A_cubed(double b, int m, int sign);

enum class ConstantSpectrumClass {
    euclidean_only_geodesic,   // eps = 0: only totally geodesic hyperplanes survive
    cylinder_over_space_form,  // cos alpha = 0: M^{m-1} x R over an isoparametric base
    hyperbolic_forced_geodesic // eps != 0, cos alpha != 0: H = 0 and b = 0 forced
};

struct HyperbolicWitness {
    double required_T_eigenvalue = 0.0; // -3mH/2 demanded by the tangential equation
    double deduced_mean_curvature = 0.0;
    double forced_b = 0.0;
};

struct SpectrumClassification {
    ConstantSpectrumClass kind;
    std::optional<HyperbolicWitness> witness; // engaged in the third case
};

/// Trichotomy for a c-biharmonic hypersurface with constant principal
/// curvatures in L^m(eps) x R. `a_of_T_eigenvalue` is the shape-operator
/// eigenvalue on T, supplied by the caller. Throws InvalidCaseError when
/// eps != 0, cos_alpha != 0 and the eigenvalue relation A(T) = -(3mH/2) T
/// fails (the input is then not c-biharmonic).
SpectrumClassification classify_constant_spectrum(Epsilon eps,
                                                  double cos_alpha,
                                                  const PrincipalSpectrum& spec,
                                                  double a_of_T_eigenvalue);

} // namespace cbih
