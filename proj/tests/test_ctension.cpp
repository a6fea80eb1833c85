#include <cmath>
#include <random>

#include <doctest.h>

#include "cbih/ctension.hpp"

using namespace cbih;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

} // namespace

TEST_CASE("totally geodesic product states are c-biharmonic") {
    const int m = 5;
    Eigen::VectorXd T = Eigen::VectorXd::Unit(m, 3) * 0.28;
    PointState st = PointState::constant_curvature(
        Epsilon::hyperbolic, Eigen::MatrixXd::Zero(m, m), T, std::sqrt(1.0 - 0.28 * 0.28));
    const CTensionComponents c = product_components(st);
    CHECK(c.tangential.cwiseAbs().maxCoeff() == 0.0);
    CHECK(c.normal == 0.0);
}

TEST_CASE("constant-spectrum tangential reduction matches the full evaluation") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
    a(0, 0) = a(1, 1) = 1.0;
    Eigen::VectorXd T(3);
    T << 0.0, 0.0, std::sqrt(0.75);
    PointState st = PointState::constant_curvature(Epsilon::hyperbolic, a, T, 0.5);
    const Eigen::VectorXd full = product_components(st).tangential;
    const Eigen::VectorXd reduced = constant_spectrum_tangential(st);
    CHECK((full - reduced).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("cylinder-like states have vanishing tangential component") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
    a(0, 0) = 2.5;
    a(1, 1) = -1.0;
    a(2, 2) = 0.7;
    PointState st = PointState::constant_curvature(Epsilon::spherical, a,
                                                   Eigen::VectorXd::Unit(4, 3), 0.0);
    CHECK(product_components(st).tangential.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("euclidean isoparametric residual") {
    CHECK(euclidean_isoparametric_residual(EuclideanIsoFamily::hyperplane(7)) == 0.0);

    // spheres: closed form (m/r^3)((5/3)m - 2 - (2/3)m^2), never zero
    for (int m = 2; m <= 6; ++m) {
        for (double r : {0.1, 1.0, 10.0}) {
            const double expected = (m / (r * r * r)) * ((5.0 / 3.0) * m - 2.0 - (2.0 / 3.0) * m * m);
            CHECK(euclidean_isoparametric_residual(EuclideanIsoFamily::sphere(r, m)) ==
                  doctest::Approx(expected).epsilon(1e-12));
            CHECK(expected != 0.0);
        }
    }

    CHECK(euclidean_isoparametric_residual(EuclideanIsoFamily::cylinder(1.0, 2, 3)) ==
          doctest::Approx(-8.0 / 3.0).epsilon(1e-14));

    CHECK_THROWS_AS(EuclideanIsoFamily::sphere(0.0, 3), DomainError);
    CHECK_THROWS_AS(EuclideanIsoFamily::sphere(-1.0, 3), DomainError);
    CHECK_THROWS_AS(EuclideanIsoFamily::cylinder(1.0, 0, 3), DomainError);
    CHECK_THROWS_AS(EuclideanIsoFamily::cylinder(1.0, 3, 3), DomainError);
}

TEST_CASE("constant-scalar-curvature residual") {
    CHECK(residual_const_scal(PrincipalSpectrum({{0.0, 4}}, 4), Epsilon::hyperbolic, 0.0) == 0.0);
    CHECK(residual_const_scal(PrincipalSpectrum({{std::sqrt(2.0), 2}}, 2), Epsilon::spherical,
                              0.0) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(residual_const_scal(PrincipalSpectrum({{1.0, 1}, {-1.0, 1}}, 2), Epsilon::spherical,
                              0.0) == 0.0);
    // a nonzero lap H enters as -m lap H
    const PrincipalSpectrum zero({{0.0, 3}}, 3);
    CHECK(residual_const_scal(zero, Epsilon::spherical, 0.5) == doctest::Approx(-1.5));
}

TEST_CASE("umbilical components match the general evaluation on umbilical states") {
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 5);
        const double H = uniform(rng, -2.0, 2.0);
        Eigen::VectorXd dir(m);
        for (int i = 0; i < m; ++i) dir(i) = uniform(rng, -1.0, 1.0);
        if (dir.norm() < 1e-6) dir(0) = 1.0;
        const double t = uniform(rng, 0.0, 1.0);
        const Eigen::VectorXd T = dir.normalized() * t;
        const double cosa = std::sqrt(std::max(0.0, 1.0 - t * t));
        Eigen::VectorXd grad_H(m);
        for (int i = 0; i < m; ++i) grad_H(i) = uniform(rng, -1.0, 1.0);
        const double lap_H = uniform(rng, -2.0, 2.0);
        const Epsilon eps = epsilon_from_int(static_cast<int>(rng() % 3) - 1);

        const CTensionComponents direct = umbilical_components(m, eps, H, grad_H, T, cosa, lap_H);
        // umbilical data: A = H Id, grad |A|^2 = 2 m H grad H
        const PointState st(eps, H * Eigen::MatrixXd::Identity(m, m), T, cosa, grad_H,
                            2.0 * m * H * grad_H, lap_H);
        const CTensionComponents general = product_components(st);
        worst = std::max({worst, (direct.tangential - general.tangential).cwiseAbs().maxCoeff(),
                          std::abs(direct.normal - general.normal)});
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("umbilical components vanish for minimal slices") {
    Eigen::VectorXd T = Eigen::VectorXd::Zero(3);
    const CTensionComponents c =
        umbilical_components(3, Epsilon::spherical, 0.0, Eigen::VectorXd::Zero(3), T, 1.0, 0.0);
    CHECK(c.tangential.cwiseAbs().maxCoeff() == 0.0);
    CHECK(c.normal == 0.0);
    // H = 0 with lap H != 0 leaves -m lap H
    const CTensionComponents c2 =
        umbilical_components(3, Epsilon::spherical, 0.0, Eigen::VectorXd::Zero(3), T, 1.0, 0.25);
    CHECK(c2.normal == doctest::Approx(-0.75));
}

TEST_CASE("codazzi substitution gives the rigidity coefficient") {
    // grad H = -eps cos(alpha) T collapses the tangential part to
    // (1/3)(-5m^2+10m+4) eps H cos(alpha) T; at m = 4 the factor is -12.
    const int m = 4;
    Eigen::VectorXd T(m);
    T << 0.8, 0.0, 0.0, 0.0;
    const double cosa = 0.6;
    const Eigen::VectorXd grad_H = -cosa * T;
    const CTensionComponents c =
        umbilical_components(m, Epsilon::spherical, 1.0, grad_H, T, cosa, 0.0);
    CHECK((c.tangential - (-12.0 * cosa * T)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("umbilical coefficient scan") {
    const UmbilicalCoefficientScan scan = umbilical_coefficient_rootfree(10);
    CHECK(scan.root_free);
    CHECK(scan.real_root_high == doctest::Approx(2.341640786499874).epsilon(1e-14));
    CHECK(scan.real_root_low == doctest::Approx(-0.341640786499874).epsilon(1e-14));
    CHECK(5 * 2 * 2 - 10 * 2 - 4 == -4);
    CHECK(5 * 3 * 3 - 10 * 3 - 4 == 11);
    CHECK_THROWS_AS(umbilical_coefficient_rootfree(1), DomainError);
}

TEST_CASE("hyperbolic trace A cubed") {
    CHECK(hyperbolic_trace_A_cubed(0.0, 3, +1) == 0.0);
    CHECK(hyperbolic_trace_A_cubed(1.0, 3, +1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(hyperbolic_trace_A_cubed(2.0, 2, -1) ==
          doctest::Approx(-8.0 / std::pow(5.0, 1.5)).epsilon(1e-15));
    CHECK_THROWS_AS(hyperbolic_trace_A_cubed(1.0, 3, 2), DomainError);
    CHECK_THROWS_AS(hyperbolic_trace_A_cubed(1.0, 1, 1), DomainError);

    // only zero on the grid is b = 0
    int zeros = 0;
    for (int i = 0; i <= 20000; ++i) {
        const double b = -10.0 + i * 1e-3;
        if (hyperbolic_trace_A_cubed(b, 4, +1) == 0.0) ++zeros;
    }
    CHECK(zeros == 1);
}

TEST_CASE("constant-spectrum classification trichotomy") {
    const PrincipalSpectrum spec({{0.4, 2}, {-0.1, 1}}, 3);

    CHECK(classify_constant_spectrum(Epsilon::euclidean, 0.3, spec, 0.0).kind ==
          ConstantSpectrumClass::euclidean_only_geodesic);
    CHECK(classify_constant_spectrum(Epsilon::hyperbolic, 0.0, spec, 0.0).kind ==
          ConstantSpectrumClass::cylinder_over_space_form);

    const PrincipalSpectrum minimal({{0.0, 3}}, 3);
    const SpectrumClassification cls =
        classify_constant_spectrum(Epsilon::hyperbolic, 0.5, minimal, 0.0);
    CHECK(cls.kind == ConstantSpectrumClass::hyperbolic_forced_geodesic);
    REQUIRE(cls.witness.has_value());
    CHECK(cls.witness->required_T_eigenvalue == 0.0);
    CHECK(cls.witness->deduced_mean_curvature == 0.0);
    CHECK(cls.witness->forced_b == 0.0);

    // nonzero H makes the eigenvalue relation unsatisfiable with eigenvalue 0
    CHECK_THROWS_AS(
        classify_constant_spectrum(Epsilon::hyperbolic, 0.5, PrincipalSpectrum({{1.0, 3}}, 3), 0.0),
        InvalidCaseError);
}
