#include "cbih/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <json.hpp>

#include "cbih/ambient_point.hpp"
#include "cbih/ctension.hpp"
#include "cbih/poly_roots.hpp"
#include "cbih/rotational_ode.hpp"
#include "cbih/spectra.hpp"
#include "cbih/sphere_families.hpp"
#include "cbih/version.hpp"

namespace cbih::verify {

namespace {

constexpr double kPi = std::numbers::pi;

// Frozen reference values, computed with an independent 50-digit oracle.
constexpr double kRootTorusM3 = 3.651573628640632;   // positive root of 8T^3-32T^2+11T-3
constexpr double kRootP3 = 1.970568939394668;        // positive root of 9T^3-19T^2+3T-1
constexpr double kMeanCurvTorusM3 = -1.099502364713019; // H of {(cot,1),(-tan,2)} there
constexpr double kScalS1xS3 = 17.823413636368010;    // 6(1+T*) for the P3 root

class Runner {
public:
    explicit Runner(const Options& opts) : opts_(opts) {}

    std::vector<Check> takeChecks() { return std::move(checks_); }

    // |measured - expected| <= tol
    void near(const std::string& suite, const std::string& id, int criterion,
              double measured, double expected, double tol) {
        Check c;
        c.id = id;
        c.suite = suite;
        c.criterion = criterion;
        c.measured = measured;
        c.expected = expected;
        c.tol = tol;
        c.pass = std::isfinite(measured) && std::abs(measured - expected) <= tol;
        checks_.push_back(std::move(c));
    }

    void exact(const std::string& suite, const std::string& id, int criterion,
               double measured, double expected) {
        near(suite, id, criterion, measured, expected, 0.0);
    }

    void run_spectra();
    void run_ctension();
    void run_sphere();
    void run_poly();
    void run_ode();
    void run_umbilical();

private:
    double uniform(double lo, double hi) {
        // Engine-portable mapping, independent of std distribution internals.
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    PrincipalSpectrum random_spectrum() {
        const int m = 2 + static_cast<int>(rng_() % 7); // 2..8
        std::vector<SpectrumEntry> entries;
        int left = m;
        while (left > 0) {
            const int mult = 1 + static_cast<int>(rng_() % static_cast<std::uint64_t>(left));
            entries.push_back({uniform(-3.0, 3.0), mult});
            left -= mult;
        }
        return PrincipalSpectrum(std::move(entries), m);
    }

    // Random valid point state: symmetric A, |T|^2 + cos^2(alpha) = 1.
    PointState random_state(bool constant_curvature) {
        const int m = 2 + static_cast<int>(rng_() % 5); // 2..6
        Eigen::MatrixXd a(m, m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j <= i; ++j) {
                a(i, j) = a(j, i) = uniform(-2.0, 2.0);
            }
        }
        Eigen::VectorXd dir(m);
        for (int i = 0; i < m; ++i) dir(i) = uniform(-1.0, 1.0);
        if (dir.norm() < 1e-6) dir(0) = 1.0;
        const double t = uniform(0.0, 1.0);
        Eigen::VectorXd tangent = dir.normalized() * t;
        double cosa = std::sqrt(std::max(0.0, 1.0 - t * t));
        if (rng_() & 1u) cosa = -cosa;
        const Epsilon eps = epsilon_from_int(static_cast<int>(rng_() % 3) - 1);
        if (constant_curvature) {
            return PointState::constant_curvature(eps, a, tangent, cosa);
        }
        Eigen::VectorXd gh(m), ga(m);
        for (int i = 0; i < m; ++i) {
            gh(i) = uniform(-1.0, 1.0);
            ga(i) = uniform(-2.0, 2.0);
        }
        return PointState(eps, a, tangent, cosa, gh, ga, uniform(-2.0, 2.0));
    }

    Options opts_;
    std::vector<Check> checks_;
    std::mt19937_64 rng_{0x5eed1ab5u};
};

// ------------------------------------------------------------------ spectra

void Runner::run_spectra() {
    const std::string suite = "spectra";
    const double r3 = std::sqrt(3.0);

    PrincipalSpectrum l3_minimal({{r3, 1}, {0.0, 1}, {-r3, 1}}, 3);
    exact(suite, "spectra/mean/l3-minimal", 0, mean_curvature(l3_minimal), 0.0);

    PrincipalSpectrum umb({{1.0 / 2.0, 5}}, 5);
    exact(suite, "spectra/mean/umbilical-sphere", 0, mean_curvature(umb), 0.5);

    // tan^2 s = T* root of the m=3 torus cubic
    {
        const double t = std::sqrt(kRootTorusM3);
        PrincipalSpectrum spec({{1.0 / t, 1}, {-t, 2}}, 3);
        near(suite, "spectra/mean/torus-at-root", 0, mean_curvature(spec), kMeanCurvTorusM3, 1e-9);
    }

    const double r2 = std::sqrt(2.0);
    PrincipalSpectrum l4_min({{r2 + 1.0, 1}, {r2 - 1.0, 1}, {1.0 - r2, 1}, {-1.0 - r2, 1}}, 4);
    near(suite, "spectra/normA2/l4-minimal", 0, norm_A_squared(l4_min), 12.0, 1e-12);
    near(suite, "spectra/trA3/l4-minimal", 0, trace_A_cubed(l4_min), 0.0, 1e-12);

    PrincipalSpectrum zero({{0.0, 4}}, 4);
    exact(suite, "spectra/normA2/zero", 0, norm_A_squared(zero), 0.0);

    {
        const double tan2 = 2.0 - r3;
        const double t = std::sqrt(tan2);
        PrincipalSpectrum spec({{1.0 / t, 2}, {-t, 2}}, 4);
        near(suite, "spectra/normA2/torus-2-2", 0, norm_A_squared(spec), 8.0, 1e-12);
        near(suite, "spectra/trA3/torus-2-2", 0, trace_A_cubed(spec), 10.0 * r2, 1e-9);
    }

    exact(suite, "spectra/trA3/umbilical-sphere", 0, trace_A_cubed(umb), 5.0 / 8.0);

    exact(suite, "spectra/scal/geodesic-s4", 0,
          scalar_curvature_spaceform(zero, Epsilon::spherical), 12.0);
    {
        PrincipalSpectrum small_sphere({{1.0 / r3, 4}}, 4);
        near(suite, "spectra/scal/small-sphere-s4", 0,
             scalar_curvature_spaceform(small_sphere, Epsilon::spherical), 16.0, 1e-12);
    }
    near(suite, "spectra/scal/l4-minimal", 0,
         scalar_curvature_spaceform(l4_min, Epsilon::spherical), 0.0, 1e-12);

    // Properties: permutation invariance, homogeneity, entry splitting.
    double worst_perm = 0.0, worst_hom = 0.0, worst_split = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        PrincipalSpectrum spec = random_spectrum();
        std::vector<SpectrumEntry> shuffled = spec.entries();
        for (size_t i = shuffled.size(); i > 1; --i) {
            std::swap(shuffled[i - 1], shuffled[rng_() % i]);
        }
        PrincipalSpectrum perm(shuffled, spec.dimension());
        worst_perm = std::max({worst_perm,
                               std::abs(mean_curvature(spec) - mean_curvature(perm)),
                               std::abs(norm_A_squared(spec) - norm_A_squared(perm)),
                               std::abs(trace_A_cubed(spec) - trace_A_cubed(perm))});

        const double lam = uniform(0.5, 2.0);
        std::vector<SpectrumEntry> scaled = spec.entries();
        for (auto& e : scaled) e.curvature *= lam;
        PrincipalSpectrum spec_scaled(scaled, spec.dimension());
        worst_hom = std::max({worst_hom,
                              std::abs(mean_curvature(spec_scaled) - lam * mean_curvature(spec)),
                              std::abs(norm_A_squared(spec_scaled) - lam * lam * norm_A_squared(spec)),
                              std::abs(trace_A_cubed(spec_scaled) - lam * lam * lam * trace_A_cubed(spec))});

        // Split one entry of multiplicity >= 2 into two with equal curvature.
        std::vector<SpectrumEntry> split = spec.entries();
        for (size_t i = 0; i < split.size(); ++i) {
            if (split[i].multiplicity >= 2) {
                SpectrumEntry extra{split[i].curvature, 1};
                split[i].multiplicity -= 1;
                split.push_back(extra);
                break;
            }
        }
        PrincipalSpectrum spec_split(split, spec.dimension());
        worst_split = std::max({worst_split,
                                std::abs(mean_curvature(spec) - mean_curvature(spec_split)),
                                std::abs(norm_A_squared(spec) - norm_A_squared(spec_split)),
                                std::abs(trace_A_cubed(spec) - trace_A_cubed(spec_split))});
    }
    near(suite, "spectra/property/permutation-invariance", 0, worst_perm, 0.0, 1e-12);
    near(suite, "spectra/property/homogeneity", 0, worst_hom, 0.0, 1e-12);
    near(suite, "spectra/property/entry-splitting", 0, worst_split, 0.0, 1e-12);
}

// ----------------------------------------------------------------- ctension

void Runner::run_ctension() {
    const std::string suite = "ctension";

    // Totally geodesic states are c-biharmonic: both components vanish.
    {
        const int m = 4;
        Eigen::VectorXd T = Eigen::VectorXd::Zero(m);
        T(0) = 0.6;
        PointState st = PointState::constant_curvature(
            Epsilon::hyperbolic, Eigen::MatrixXd::Zero(m, m), T, 0.8);
        const CTensionComponents c = product_components(st);
        exact(suite, "ctension/product/geodesic-vanishes", 0,
              std::max(c.tangential.cwiseAbs().maxCoeff(), std::abs(c.normal)), 0.0);
    }

    // Constant-spectrum reduction of the tangential component, spot value.
    {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
        a(0, 0) = a(1, 1) = 1.0;
        Eigen::VectorXd T(3);
        T << 0.0, 0.0, std::sqrt(0.75);
        PointState st = PointState::constant_curvature(Epsilon::hyperbolic, a, T, 0.5);
        const Eigen::VectorXd full = product_components(st).tangential;
        const Eigen::VectorXd reduced = constant_spectrum_tangential(st);
        near(suite, "ctension/product/constant-spectrum-spot", 0,
             (full - reduced).cwiseAbs().maxCoeff(), 0.0, 1e-12);
    }

    // Same reduction at randomized constant-spectrum states.
    {
        double worst = 0.0;
        for (int trial = 0; trial < 10000; ++trial) {
            PointState st = random_state(true);
            const Eigen::VectorXd full = product_components(st).tangential;
            const Eigen::VectorXd reduced = constant_spectrum_tangential(st);
            worst = std::max(worst, (full - reduced).cwiseAbs().maxCoeff());
        }
        near(suite, "ctension/product/constant-spectrum-random", 7, worst, 0.0, 1e-11);
    }

    // Cylinder-like state: cos(alpha) = 0 and T in the kernel of A.
    {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
        a(0, 0) = 1.7;
        a(1, 1) = -0.4;
        Eigen::VectorXd T(3);
        T << 0.0, 0.0, 1.0;
        PointState st = PointState::constant_curvature(Epsilon::spherical, a, T, 0.0);
        exact(suite, "ctension/product/cylinder-tangential-zero", 0,
              product_components(st).tangential.cwiseAbs().maxCoeff(), 0.0);
    }

    exact(suite, "ctension/euclidean/hyperplane", 0,
          euclidean_isoparametric_residual(EuclideanIsoFamily::hyperplane(5)), 0.0);
    {
        const double r = 0.75;
        const int m = 4;
        const double closed = (m / (r * r * r)) * ((5.0 / 3.0) * m - 2.0 - (2.0 / 3.0) * m * m);
        near(suite, "ctension/euclidean/sphere-closed-form", 0,
             euclidean_isoparametric_residual(EuclideanIsoFamily::sphere(r, m)), closed, 1e-10);
    }
    near(suite, "ctension/euclidean/cylinder-1-2-3", 0,
         euclidean_isoparametric_residual(EuclideanIsoFamily::cylinder(1.0, 2, 3)),
         -8.0 / 3.0, 1e-12);

    // Criterion 8: only hyperplanes vanish, over a log grid of radii.
    {
        double min_sphere = std::numeric_limits<double>::infinity();
        double min_cyl = std::numeric_limits<double>::infinity();
        double max_plane = 0.0;
        for (int m = 2; m <= 12; ++m) {
            max_plane = std::max(max_plane, std::abs(euclidean_isoparametric_residual(
                                                EuclideanIsoFamily::hyperplane(m))));
            for (int i = 0; i <= 60; ++i) {
                const double r = std::pow(10.0, -3.0 + 6.0 * i / 60.0);
                min_sphere = std::min(min_sphere,
                                      std::abs(euclidean_isoparametric_residual(
                                          EuclideanIsoFamily::sphere(r, m))));
                for (int k = 1; k <= m - 1; ++k) {
                    min_cyl = std::min(min_cyl,
                                       std::abs(euclidean_isoparametric_residual(
                                           EuclideanIsoFamily::cylinder(r, k, m))));
                }
            }
        }
        exact(suite, "ctension/euclidean/rigidity-spheres-nonzero", 8,
              min_sphere > 0.0 ? 1.0 : 0.0, 1.0);
        exact(suite, "ctension/euclidean/rigidity-cylinders-nonzero", 8,
              min_cyl > 0.0 ? 1.0 : 0.0, 1.0);
        exact(suite, "ctension/euclidean/rigidity-hyperplanes-zero", 8, max_plane, 0.0);
    }

    exact(suite, "ctension/const-scal/zero-spectrum", 0,
          residual_const_scal(PrincipalSpectrum({{0.0, 3}}, 3), Epsilon::hyperbolic, 0.0), 0.0);
    {
        PrincipalSpectrum small_sphere({{std::sqrt(2.0), 2}}, 2);
        near(suite, "ctension/const-scal/small-sphere-s2", 0,
             residual_const_scal(small_sphere, Epsilon::spherical, 0.0), 0.0, 1e-12);
        PrincipalSpectrum clifford({{1.0, 1}, {-1.0, 1}}, 2);
        exact(suite, "ctension/const-scal/clifford-torus", 0,
              residual_const_scal(clifford, Epsilon::spherical, 0.0), 0.0);
    }

    // Criterion 7: sphere residual form is three times the constant-Scal form.
    {
        double worst = 0.0;
        for (int trial = 0; trial < 10000; ++trial) {
            PrincipalSpectrum spec = random_spectrum();
            worst = std::max(worst,
                             std::abs(sphere_residual(spec) -
                                      3.0 * residual_const_scal(spec, Epsilon::spherical, 0.0)));
        }
        near(suite, "ctension/const-scal/sphere-consistency-random", 7, worst, 0.0, 1e-10);
    }

    // Criterion 7: trace of the Ricci operator is the product scalar curvature.
    {
        double worst_trace = 0.0;
        double worst_sym = 0.0;
        for (int trial = 0; trial < 10000; ++trial) {
            PointState st = random_state(false);
            const Eigen::MatrixXd ric = ricci_operator(st);
            worst_trace = std::max(worst_trace,
                                   std::abs(ric.trace() - scalar_curvature_product(st)));
            worst_sym = std::max(worst_sym, (ric - ric.transpose()).cwiseAbs().maxCoeff());
        }
        near(suite, "ctension/ricci/trace-consistency-random", 7, worst_trace, 0.0, 1e-10);
        near(suite, "ctension/ricci/symmetry-random", 0, worst_sym, 0.0, 1e-12);
    }

    // Spot values for the Ricci operator and angle-function derivative.
    {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
        a(0, 0) = a(1, 1) = 1.0;
        Eigen::VectorXd T(3);
        T << 0.0, 0.0, 0.5;
        PointState st = PointState::constant_curvature(Epsilon::spherical, a, T, std::sqrt(0.75));
        const Eigen::MatrixXd ric = ricci_operator(st);
        near(suite, "ctension/ricci/diag-spot", 0,
             std::max({std::abs(ric(0, 0) - 2.75), std::abs(ric(1, 1) - 2.75),
                       std::abs(ric(2, 2) - 1.5)}),
             0.0, 1e-12);
        near(suite, "ctension/ricci/scal-spot", 0, scalar_curvature_product(st), 7.0, 1e-12);

        Eigen::MatrixXd a2(2, 2);
        a2 << 2.0, 0.0, 0.0, -1.0;
        Eigen::VectorXd T2(2);
        T2 << 0.6, 0.8;
        PointState st2 = PointState::constant_curvature(Epsilon::spherical, a2, T2, 0.0);
        near(suite, "ctension/angle/t-of-cos-alpha-spot", 0, t_of_cos_alpha(st2), -0.08, 1e-15);
    }

    near(suite, "ctension/hyperbolic/b1-m3", 0, hyperbolic_trace_A_cubed(1.0, 3, +1),
         std::sqrt(0.5), 1e-15);
    exact(suite, "ctension/hyperbolic/zero-at-origin", 0,
          hyperbolic_trace_A_cubed(0.0, 4, -1), 0.0);

    // Criterion 9: b = 0 is the only zero on the [-10, 10] grid.
    {
        int zeros = 0;
        double min_nonzero = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 20000; ++i) {
            const double b = -10.0 + i * 1e-3;
            const double v = hyperbolic_trace_A_cubed(b, 5, +1);
            if (v == 0.0) {
                ++zeros;
            } else {
                min_nonzero = std::min(min_nonzero, std::abs(v));
            }
        }
        exact(suite, "ctension/hyperbolic/grid-zero-count", 9, zeros, 1.0);
        exact(suite, "ctension/hyperbolic/grid-nonzero-floor", 9,
              min_nonzero > 0.0 ? 1.0 : 0.0, 1.0);
    }

    // Classification trichotomy.
    {
        PrincipalSpectrum flat({{0.3, 2}, {0.1, 1}}, 3);
        exact(suite, "ctension/classify/euclidean", 0,
              classify_constant_spectrum(Epsilon::euclidean, 0.7, flat, 0.0).kind ==
                      ConstantSpectrumClass::euclidean_only_geodesic
                  ? 1.0
                  : 0.0,
              1.0);
        exact(suite, "ctension/classify/cylinder", 0,
              classify_constant_spectrum(Epsilon::spherical, 0.0, flat, 0.0).kind ==
                      ConstantSpectrumClass::cylinder_over_space_form
                  ? 1.0
                  : 0.0,
              1.0);
        PrincipalSpectrum minimal({{0.0, 3}}, 3);
        const SpectrumClassification cls =
            classify_constant_spectrum(Epsilon::hyperbolic, 0.5, minimal, 0.0);
        const bool ok = cls.kind == ConstantSpectrumClass::hyperbolic_forced_geodesic &&
                        cls.witness && cls.witness->forced_b == 0.0 &&
                        cls.witness->deduced_mean_curvature == 0.0;
        exact(suite, "ctension/classify/hyperbolic-witness", 0, ok ? 1.0 : 0.0, 1.0);

        bool threw = false;
        try {
            classify_constant_spectrum(Epsilon::hyperbolic, 0.5,
                                       PrincipalSpectrum({{1.0, 3}}, 3), 0.0);
        } catch (const InvalidCaseError&) {
            threw = true;
        }
        exact(suite, "ctension/classify/invalid-case-rejected", 0, threw ? 1.0 : 0.0, 1.0);
    }
}

// ------------------------------------------------------------------- sphere

void Runner::run_sphere() {
    const std::string suite = "sphere";

    // Criterion 1: degree-1 small-hypersphere radii.
    const double expected_sin[3] = {1.0 / std::sqrt(3.0), 1.0 / std::sqrt(2.0),
                                    std::sqrt(3.0) / 2.0};
    for (int m = 2; m <= 4; ++m) {
        IsoparametricFamily fam(1, m);
        const SolveReport rep = solve_cbih(fam);
        exact(suite, "sphere/l1/m" + std::to_string(m) + "-root-count", 1,
              static_cast<double>(rep.roots.size()), 1.0);
        const double sin_root = rep.roots.empty() ? -1.0 : std::sin(rep.roots[0].s);
        near(suite, "sphere/l1/m" + std::to_string(m) + "-radius", 1, sin_root,
             expected_sin[m - 2], 1e-10);
    }
    // Degree 1, m >= 5: no c-biharmonic parameter (documented behaviour).
    exact(suite, "sphere/l1/m5-empty", 0,
          static_cast<double>(solve_cbih(IsoparametricFamily(1, 5)).roots.size()), 0.0);

    // Criterion 2: degree-2 roots against the certified classification cubics.
    {
        const CubicPoly torus_m3 = CubicPoly::from_integers(-3, 11, -32, 8);
        const auto certs = isolate_and_refine(torus_m3, Rational(0), Rational(10), 1e-12);
        const SolveReport rep = solve_cbih(IsoparametricFamily(2, 1, 2));
        exact(suite, "sphere/l2/m3-root-count", 2, static_cast<double>(rep.roots.size()), 1.0);
        const double tan_root = rep.roots.empty() ? 0.0 : std::tan(rep.roots[0].s);
        near(suite, "sphere/l2/m3-tan2-vs-certified", 2, tan_root * tan_root,
             certs.empty() ? -1.0 : certs[0].refined_value, 1e-9);
        near(suite, "sphere/l2/m3-r1sq", 0,
             rep.roots.empty() ? -1.0
                               : torus_radii(IsoparametricFamily(2, 1, 2), rep.roots[0].s).first,
             kRootTorusM3 / (1.0 + kRootTorusM3), 1e-9);

        const CubicPoly p3 = CubicPoly::from_integers(-1, 3, -19, 9);
        const auto p3_certs = isolate_and_refine(p3, Rational(0), Rational(10), 1e-12);
        const SolveReport rep4 = solve_cbih(IsoparametricFamily(2, 1, 3));
        exact(suite, "sphere/l2/m4-root-count", 2, static_cast<double>(rep4.roots.size()), 1.0);
        const double tan_root4 = rep4.roots.empty() ? 0.0 : std::tan(rep4.roots[0].s);
        near(suite, "sphere/l2/m4-tan2-vs-certified", 2, tan_root4 * tan_root4,
             p3_certs.empty() ? -1.0 : p3_certs[0].refined_value, 1e-9);
    }

    // Degree 2 equal multiplicities: Clifford tori.
    {
        const SolveReport rep = solve_cbih(IsoparametricFamily(2, 1, 1));
        exact(suite, "sphere/l2/m1m1-root-count", 0, static_cast<double>(rep.roots.size()), 1.0);
        near(suite, "sphere/l2/m1m1-minimal-root", 0,
             rep.roots.empty() ? -1.0 : rep.roots[0].s, kPi / 4.0, 1e-10);

        const SolveReport rep22 = solve_cbih(IsoparametricFamily(2, 2, 2));
        exact(suite, "sphere/l2/m2m2-root-count", 0, static_cast<double>(rep22.roots.size()), 3.0);
        const auto radii = rep22.roots.empty()
                               ? std::pair<double, double>{-1.0, -1.0}
                               : torus_radii(IsoparametricFamily(2, 2, 2), rep22.roots[0].s);
        near(suite, "sphere/l2/m2m2-nonminimal-r1sq", 0, radii.first,
             0.5 * (1.0 - 1.0 / std::sqrt(3.0)), 1e-10);
        near(suite, "sphere/l2/m2m2-nonminimal-r2sq", 0, radii.second,
             0.5 * (1.0 + 1.0 / std::sqrt(3.0)), 1e-10);
    }

    // Criterion 3: degree 3 is c-biharmonic only at the minimal parameter.
    for (int m1 : {1, 2, 4, 8}) {
        IsoparametricFamily fam(3, m1);
        const SolveReport rep = solve_cbih(fam);
        const std::string tag = "sphere/l3/m" + std::to_string(m1);
        exact(suite, tag + "-root-count", 3, static_cast<double>(rep.roots.size()), 1.0);
        near(suite, tag + "-root-at-pi6", 3, rep.roots.empty() ? -1.0 : rep.roots[0].s,
             kPi / 6.0, 1e-10);
        exact(suite, tag + "-root-minimal", 3,
              (!rep.roots.empty() && rep.roots[0].is_minimal) ? 1.0 : 0.0, 1.0);

        // Closed form against the generic route on a 500-point grid.
        double worst_rel = 0.0;
        for (int i = 1; i <= 500; ++i) {
            const double s = (kPi / 3.0) * i / 501.0;
            const double generic = residual(fam, s);
            const double closed = residual_l3_closed(m1, s);
            if (generic != 0.0) {
                worst_rel = std::max(worst_rel, std::abs((generic - closed) / generic));
            }
        }
        near(suite, tag + "-closed-form-grid", 3, worst_rel, 0.0, 1e-9);
    }

    // Criterion 4: degree 6 likewise.
    for (int m1 : {1, 2}) {
        const SolveReport rep = solve_cbih(IsoparametricFamily(6, m1));
        const std::string tag = "sphere/l6/m" + std::to_string(m1);
        exact(suite, tag + "-root-count", 4, static_cast<double>(rep.roots.size()), 1.0);
        near(suite, tag + "-root-at-pi12", 4, rep.roots.empty() ? -1.0 : rep.roots[0].s,
             kPi / 12.0, 1e-10);
    }

    // Criterion 5: degree 4 with equal multiplicities.
    for (int m1 : {1, 2}) {
        IsoparametricFamily fam(4, m1);
        const SolveReport rep = solve_cbih(fam);
        const std::string tag = "sphere/l4-equal/m" + std::to_string(m1);
        exact(suite, tag + "-root-count", 5, static_cast<double>(rep.roots.size()), 1.0);
        near(suite, tag + "-root-at-pi8", 5, rep.roots.empty() ? -1.0 : rep.roots[0].s,
             kPi / 8.0, 1e-10);
        const PrincipalSpectrum spec = spectrum_at(fam, kPi / 8.0);
        near(suite, tag + "-trA3-at-pi8", 5, trace_A_cubed(spec), 0.0, 1e-12);
        if (m1 == 1) {
            near(suite, tag + "-normA2-12", 5, norm_A_squared(spec), 12.0, 1e-12);
        }
    }
    // Minimality parameter spot values.
    near(suite, "sphere/minimal-parameter/l3", 0,
         minimal_parameter(IsoparametricFamily(3, 1)), kPi / 6.0, 1e-15);
    near(suite, "sphere/minimal-parameter/l4-equal", 0,
         minimal_parameter(IsoparametricFamily(4, 2)), kPi / 8.0, 1e-15);
    near(suite, "sphere/minimal-parameter/l4-1-2", 0,
         minimal_parameter(IsoparametricFamily(4, 1, 2)), 0.25 * std::acos(1.0 / 3.0), 1e-15);

    // Criterion 6: degree 4 with m1 < m2.
    const std::pair<int, int> pairs[] = {{1, 2}, {2, 4}, {3, 4}, {4, 5}, {1, 7}};
    for (const auto& [m1, m2] : pairs) {
        IsoparametricFamily fam(4, m1, m2);
        const std::string tag =
            "sphere/l4/m" + std::to_string(m1) + "-" + std::to_string(m2);

        const double stilde = minimal_parameter(fam);
        const double expected_res = 48.0 * (static_cast<double>(m1) * m1 - m2 * m2) /
                                    std::sqrt(static_cast<double>(m1) * m2);
        near(suite, tag + "-residual-at-stilde", 6, residual(fam, stilde), expected_res, 1e-8);

        const SolveReport rep = solve_cbih(fam);
        exact(suite, tag + "-root-count", 6, static_cast<double>(rep.roots.size()), 1.0);
        const CubicPoly a_poly = quartic_poly(m1, m2);
        const auto certs = isolate_and_refine(a_poly, Rational(-1), Rational(1), 1e-12);
        if (!rep.roots.empty() && certs.size() == 1) {
            near(suite, tag + "-sstar-vs-certified", 6, rep.roots[0].s,
                 0.25 * std::acos(certs[0].refined_value), 1e-9);
            const bool nonminimal = !rep.roots[0].is_minimal &&
                                    std::abs(rep.roots[0].s - stilde) > 1e-6;
            exact(suite, tag + "-sstar-nonminimal", 6, nonminimal ? 1.0 : 0.0, 1.0);
        } else {
            exact(suite, tag + "-sstar-vs-certified", 6, 0.0, 1.0);
            exact(suite, tag + "-sstar-nonminimal", 6, 0.0, 1.0);
        }
    }

    // Equal-multiplicity reflection antisymmetry of the residual (relative:
    // the values blow up like cot^3 toward the interval ends).
    {
        double worst = 0.0;
        for (int i = 1; i <= 200; ++i) {
            const double s = (kPi / 4.0) * i / 201.0;
            IsoparametricFamily fam(4, 2);
            const double direct = residual(fam, s);
            const double mirrored = residual(fam, kPi / 4.0 - s);
            worst = std::max(worst,
                             std::abs(mirrored + direct) / std::max(1.0, std::abs(direct)));
        }
        near(suite, "sphere/property/reflection-antisymmetry", 0, worst, 0.0, 1e-9);
    }

    // Degree-4 residual against the cos(4s)-polynomial route, including the
    // paper-form prefactor, on a grid clear of the interval ends.
    {
        const CubicPoly a_poly = quartic_poly(1, 2);
        IsoparametricFamily fam(4, 1, 2);
        double worst_rel = 0.0;
        bool signs_ok = true;
        for (int i = 0; i < 400; ++i) {
            const double s = 1e-3 + (kPi / 4.0 - 2e-3) * i / 399.0;
            const double tan_s = std::tan(s);
            const double prefactor = 32.0 * std::pow(std::sin(s), 3) *
                                     std::pow(std::cos(s), 9) *
                                     std::pow(tan_s * tan_s - 1.0, 3);
            const double via_poly = a_poly.eval_double(std::cos(4.0 * s)) / prefactor;
            const double direct = residual(fam, s);
            if (direct != 0.0) {
                worst_rel = std::max(worst_rel, std::abs((direct - via_poly) / direct));
            }
            if (direct != 0.0 && a_poly.eval_double(std::cos(4.0 * s)) != 0.0 &&
                (direct > 0) == (a_poly.eval_double(std::cos(4.0 * s)) > 0)) {
                signs_ok = false; // prefactor is negative on (0, pi/4)
            }
        }
        near(suite, "sphere/property/l4-poly-route", 0, worst_rel, 0.0, 1e-9);
        exact(suite, "sphere/property/l4-sign-opposition", 0, signs_ok ? 1.0 : 0.0, 1.0);
    }

    // trace A^3 vanishes at the minimal parameter of every equal-multiplicity
    // family of degree 3, 4 or 6.
    {
        double worst = 0.0;
        for (const auto& fam :
             {IsoparametricFamily(3, 1), IsoparametricFamily(3, 2), IsoparametricFamily(3, 4),
              IsoparametricFamily(3, 8), IsoparametricFamily(4, 1), IsoparametricFamily(4, 2),
              IsoparametricFamily(6, 1), IsoparametricFamily(6, 2)}) {
            worst = std::max(worst, std::abs(trace_A_cubed(
                                        spectrum_at(fam, kPi / (2.0 * fam.degree())))));
        }
        near(suite, "sphere/property/trA3-minimal", 0, worst, 0.0, 1e-12);
    }

    // Criterion 12: scalar-curvature table for the S^5 classification.
    {
        exact(suite, "sphere/scal-table/geodesic", 12,
              scalar_curvature_spaceform(PrincipalSpectrum({{0.0, 4}}, 4), Epsilon::spherical),
              12.0);
        const PrincipalSpectrum small_sphere =
            spectrum_at(IsoparametricFamily(1, 4), kPi / 3.0);
        near(suite, "sphere/scal-table/small-sphere", 12,
             scalar_curvature_spaceform(small_sphere, Epsilon::spherical), 16.0, 1e-12);
        const PrincipalSpectrum clifford =
            spectrum_at(IsoparametricFamily(2, 2, 2), kPi / 4.0);
        near(suite, "sphere/scal-table/clifford-minimal", 12,
             scalar_curvature_spaceform(clifford, Epsilon::spherical), 8.0, 1e-12);

        const SolveReport rep22 = solve_cbih(IsoparametricFamily(2, 2, 2));
        near(suite, "sphere/scal-table/clifford-nonminimal", 12,
             rep22.roots.empty() ? -1.0 : rep22.roots[0].scalar_curvature, 12.0, 1e-9);

        const SolveReport rep13 = solve_cbih(IsoparametricFamily(2, 1, 3));
        const double scal13 = rep13.roots.empty() ? -1.0 : rep13.roots[0].scalar_curvature;
        near(suite, "sphere/scal-table/s1xs3", 12, scal13, kScalS1xS3, 1e-9);
        const double h13 = rep13.roots.empty() ? 0.0 : rep13.roots[0].mean_curvature;
        exact(suite, "sphere/scal-table/s1xs3-bound", 12,
              scal13 >= 5.0 + 16.0 * h13 * h13 ? 1.0 : 0.0, 1.0);

        const PrincipalSpectrum l4min = spectrum_at(IsoparametricFamily(4, 1), kPi / 8.0);
        near(suite, "sphere/scal-table/l4-minimal", 12,
             scalar_curvature_spaceform(l4min, Epsilon::spherical), 0.0, 1e-12);
    }

    // Spectrum spot checks.
    {
        const PrincipalSpectrum sp = spectrum_at(IsoparametricFamily(3, 2), kPi / 6.0);
        const double r3 = std::sqrt(3.0);
        near(suite, "sphere/spectrum/l3-at-pi6", 0,
             std::max({std::abs(sp.entries()[0].curvature - r3),
                       std::abs(sp.entries()[1].curvature),
                       std::abs(sp.entries()[2].curvature + r3)}),
             0.0, 1e-12);
        const PrincipalSpectrum eq = spectrum_at(IsoparametricFamily(1, 3), kPi / 2.0);
        near(suite, "sphere/spectrum/l1-equator", 0, eq.entries()[0].curvature, 0.0, 1e-15);
    }
}

// --------------------------------------------------------------------- poly

void Runner::run_poly() {
    const std::string suite = "poly";

    // P3(T) = 9T^3 - 19T^2 + 3T - 1; one coefficient is corrupted under fault
    // injection so the harness provably notices broken inputs.
    const long long p3_c1 = opts_.inject_fault ? 4 : 3;
    const CubicPoly p3(Rational(-1), Rational(p3_c1), Rational(-19), Rational(9));
    const CubicPoly torus_m3 = CubicPoly::from_integers(-3, 11, -32, 8);

    exact(suite, "poly/p3/eval-at-1", 2, p3.eval(Rational(1)).convert_to<double>(), -8.0);
    exact(suite, "poly/p3/eval-at-2", 2, p3.eval(Rational(2)).convert_to<double>(), 1.0);
    {
        const CubicPoly q(Rational(7, 3), Rational(-2), Rational(5), Rational(11));
        const Rational diff = q.eval(Rational(0)) - Rational(7, 3);
        exact(suite, "poly/eval/at-zero-gives-c0", 0, diff.convert_to<double>(), 0.0);
    }

    exact(suite, "poly/count/p3-on-1-2", 0,
          static_cast<double>(count_roots(p3, Rational(1), Rational(2))), 1.0);
    exact(suite, "poly/count/p3-on-0-1", 0,
          static_cast<double>(count_roots(p3, Rational(0), Rational(1))), 0.0);

    // Criterion 2: exactly one positive root of each classification cubic.
    // The Cauchy bound 1 + max|c_i|/|c_3| caps every root, so counting on
    // (0, bound) certifies positivity-wide uniqueness.
    const auto positive_count = [](const CubicPoly& p) {
        Rational bound = 1;
        for (int i = 0; i < 3; ++i) {
            const Rational ratio = abs(p.coeff(i) / p.coeff(3));
            if (ratio > bound) bound = ratio;
        }
        bound += 1;
        return count_roots(p, Rational(0), bound);
    };
    exact(suite, "poly/count/torus-m3-positive", 2, positive_count(torus_m3), 1.0);
    exact(suite, "poly/count/p3-positive", 2, positive_count(p3), 1.0);

    {
        const auto certs = isolate_and_refine(p3, Rational(1), Rational(2), 1e-10);
        exact(suite, "poly/refine/p3-cert-count", 2, static_cast<double>(certs.size()), 1.0);
        near(suite, "poly/refine/p3-root", 2,
             certs.empty() ? 0.0 : certs[0].refined_value, kRootP3, 1e-9);
        if (!certs.empty()) {
            exact(suite, "poly/certificate/p3-sign-change", 0,
                  certs[0].sign_lower * certs[0].sign_upper, -1.0);
            // Criterion 12: |A|^2 = 1/T* + 3T* <= 7, certified with the exact
            // interval bounds (1/lower + 3 upper bounds the supremum).
            const Rational sup_bound = Rational(1) / certs[0].lower + 3 * certs[0].upper;
            exact(suite, "poly/bound/p3-A2-bound", 12, sup_bound <= 7 ? 1.0 : 0.0, 1.0);
            near(suite, "poly/bound/p3-A2-refined", 12,
                 1.0 / certs[0].refined_value + 3.0 * certs[0].refined_value,
                 6.419174473848560, 1e-9);
        }
    }
    {
        const auto certs = isolate_and_refine(torus_m3, Rational(0), Rational(10), 1e-10);
        exact(suite, "poly/refine/torus-m3-cert-count", 2,
              static_cast<double>(certs.size()), 1.0);
        near(suite, "poly/refine/torus-m3-root", 2,
             certs.empty() ? 0.0 : certs[0].refined_value, kRootTorusM3, 1e-9);
        if (!certs.empty()) {
            exact(suite, "poly/certificate/torus-m3-sign-change", 0,
                  certs[0].sign_lower * certs[0].sign_upper, -1.0);
        }
    }

    // (T-1)(T-2)(T-3): bisection of (0,4) lands exactly on the middle root.
    {
        const CubicPoly cube = CubicPoly::from_integers(-6, 11, -6, 1);
        const auto certs = isolate_and_refine(cube, Rational(0), Rational(4), 1e-10);
        exact(suite, "poly/refine/triple-cert-count", 0, static_cast<double>(certs.size()), 3.0);
        double worst = 1.0;
        if (certs.size() == 3) {
            worst = std::max({std::abs(certs[0].refined_value - 1.0),
                              std::abs(certs[1].refined_value - 2.0),
                              std::abs(certs[2].refined_value - 3.0)});
        }
        near(suite, "poly/refine/triple-roots", 0, worst, 0.0, 1e-9);
    }

    // Criterion 6: exactly one root of A(y) in (-1, 1) for each pair, plus the
    // exact endpoint values.
    const std::pair<int, int> pairs[] = {{1, 2}, {2, 4}, {3, 4}, {4, 5}, {1, 7}};
    for (const auto& [m1, m2] : pairs) {
        const CubicPoly a_poly = quartic_poly(m1, m2);
        const std::string tag = "poly/l4/m" + std::to_string(m1) + "-" + std::to_string(m2);
        exact(suite, tag + "-unit-count", 6,
              static_cast<double>(count_roots(a_poly, Rational(-1), Rational(1))), 1.0);
        const Rational at_one = a_poly.eval(Rational(1)) -
                                Rational(32LL * m1 * (6 + m1 * (-5 + 2 * m1)));
        const Rational at_minus = a_poly.eval(Rational(-1)) +
                                  Rational(32LL * m2 * (6 + m2 * (-5 + 2 * m2)));
        exact(suite, tag + "-A-at-1", 6, at_one.convert_to<double>(), 0.0);
        exact(suite, tag + "-A-at-minus1", 6, at_minus.convert_to<double>(), 0.0);
    }
    // Spec spot check of the (1,2) coefficients.
    {
        const CubicPoly a12 = quartic_poly(1, 2);
        const bool ok = a12.coeff(0) == 28 && a12.coeff(1) == 68 && a12.coeff(2) == -108 &&
                        a12.coeff(3) == 108;
        exact(suite, "poly/l4/m1-2-coefficients", 0, ok ? 1.0 : 0.0, 1.0);
    }

    // Oracle equivalence: Sturm counts match a 10^6-point floating sign scan.
    {
        const auto grid_changes = [](const CubicPoly& p, double lo, double hi) {
            int changes = 0;
            double prev = p.eval_double(lo);
            for (int i = 1; i <= 1000000; ++i) {
                const double x = lo + (hi - lo) * i / 1000000.0;
                const double v = p.eval_double(x);
                if (prev != 0.0 && v != 0.0 && (prev < 0) != (v < 0)) ++changes;
                if (v != 0.0) prev = v;
            }
            return changes;
        };
        exact(suite, "poly/oracle/p3-grid-vs-sturm", 0,
              grid_changes(p3, 0.0, 10.0),
              static_cast<double>(count_roots(p3, Rational(0), Rational(10))));
        exact(suite, "poly/oracle/torus-m3-grid-vs-sturm", 0,
              grid_changes(torus_m3, 0.0, 10.0),
              static_cast<double>(count_roots(torus_m3, Rational(0), Rational(10))));
        const CubicPoly a12 = quartic_poly(1, 2);
        exact(suite, "poly/oracle/quartic-1-2-grid-vs-sturm", 0,
              grid_changes(a12, -1.0, 1.0),
              static_cast<double>(count_roots(a12, Rational(-1), Rational(1))));
    }
}

// ---------------------------------------------------------------------- ode

void Runner::run_ode() {
    const std::string suite = "ode";
    const double C = -0.1;

    {
        const auto [lo, hi] = admissible_range(C);
        near(suite, "ode/range/h1-min", 0, lo, 0.3357106870197288, 1e-15);
        near(suite, "ode/range/h1-max", 0, hi, 0.9419651451198933, 1e-15);
    }
    near(suite, "ode/acceleration/spot", 0,
         acceleration({C, 0.0, 0.9, 0.0}), -0.7628257887517147, 1e-12);

    // Criterion 11, drift bound and step-halving order.
    const Trajectory traj = integrate(C, 20.0, 1e-3);
    near(suite, "ode/drift/step-1e-3", 11, traj.max_prime_residual, 0.0, 1e-8);
    {
        const Trajectory half = integrate(C, 20.0, 5e-4);
        const double ratio = traj.max_prime_residual / half.max_prime_residual;
        near(suite, "ode/drift/halving-ratio", 11, ratio, 16.0, 4.0);
    }

    // Criterion 11, pointwise identities along the trajectory.
    {
        double worst_identity = 0.0;
        double min_ct = std::numeric_limits<double>::infinity();
        double worst_scal = 0.0;
        double excursion = 0.0;
        const auto [lo, hi] = admissible_range(C);
        for (const auto& p : traj.samples) {
            const ProfileState st{C, p.s, p.h1, p.h1p};
            worst_identity = std::max(worst_identity,
                                      std::abs(p.ctension_residual - 16.0 * p.mean_curvature));
            min_ct = std::min(min_ct, std::abs(p.ctension_residual));
            worst_scal = std::max(worst_scal, std::abs(scalar_curvature(st) - 12.0));
            excursion = std::max({excursion, lo - p.h1, p.h1 - hi});
        }
        near(suite, "ode/identity/ctension-16H", 11, worst_identity, 0.0, 1e-12);
        const double bound = 8.0 * std::sqrt(-C);
        exact(suite, "ode/identity/min-residual-margin", 11,
              std::max(0.0, bound - min_ct), 0.0);
        near(suite, "ode/identity/scal-12", 11, worst_scal, 0.0, 1e-10);
        exact(suite, "ode/range/containment-1e-9", 0,
              std::max(0.0, excursion - 1e-9), 0.0);
    }

    // Further identities at states sampled off the trajectory.
    {
        double worst_ode = 0.0, worst_k = 0.0, worst_h = 0.0, worst_ct = 0.0;
        const auto [lo, hi] = admissible_range(C);
        for (int i = 1; i < 40; ++i) {
            const double h1 = lo + (hi - lo) * i / 40.0;
            const double h1sq = h1 * h1;
            const double h1p = std::sqrt(std::max(0.0, C / h1sq + 1.0 - h1sq));
            const ProfileState st{C, 0.0, h1, h1p};
            // the second-order form of the profile equation
            worst_ode = std::max(
                worst_ode, std::abs(h1 * acceleration(st) + h1p * h1p + 2.0 * h1sq - 1.0));
            // both curvature routes agree, and k1 = -k2
            const auto [k1, k2] = curvatures(st);
            const double k2_alt = -std::sqrt(std::max(0.0, 1.0 - h1sq - h1p * h1p)) / h1;
            worst_k = std::max({worst_k, std::abs(k1 + k2), std::abs(k2 - k2_alt)});
            worst_h = std::max(worst_h,
                               std::abs(mean_curvature(st) - (k1 + 3.0 * k2) / 4.0));
            worst_ct = std::max(worst_ct,
                                std::abs(ctension_residual(st) -
                                         (-8.0 * std::sqrt(-C) / h1sq)));
        }
        near(suite, "ode/identity/second-order-form", 0, worst_ode, 0.0, 1e-12);
        near(suite, "ode/identity/curvature-routes", 0, worst_k, 0.0, 1e-10);
        near(suite, "ode/identity/H-from-curvatures", 0, worst_h, 0.0, 1e-15);
        near(suite, "ode/identity/ctension-closed-form", 0, worst_ct, 0.0, 1e-12);
    }

    // Spot values at h1^2 = 0.8873.
    {
        const double h1 = std::sqrt(0.8873);
        const double h1p = std::sqrt(std::max(0.0, C / 0.8873 + 1.0 - 0.8873));
        const ProfileState st{C, 0.0, h1, h1p};
        near(suite, "ode/spot/mean-curvature", 0, mean_curvature(st),
             -0.1781966448872072, 1e-12);
        near(suite, "ode/spot/ctension", 0, ctension_residual(st),
             -2.851146318195316, 1e-9);
    }

    // Near-degenerate constant: almost-circular profile.
    {
        const Trajectory tight = integrate(-0.24999, 20.0, 1e-3);
        double lo = 1.0, hi = 0.0;
        for (const auto& p : tight.samples) {
            lo = std::min(lo, p.h1);
            hi = std::max(hi, p.h1);
        }
        near(suite, "ode/degenerate/h1-variation", 0, hi - lo, 0.0, 1e-2);
    }
}

// ---------------------------------------------------------------- umbilical

void Runner::run_umbilical() {
    const std::string suite = "umbilical";

    // Criterion 10: the coefficient 5m^2 - 10m - 4 has no integer zero.
    const UmbilicalCoefficientScan scan = umbilical_coefficient_rootfree(1000000);
    exact(suite, "umbilical/coefficient/rootfree-1e6", 10, scan.root_free ? 1.0 : 0.0, 1.0);
    near(suite, "umbilical/coefficient/real-root-high", 0, scan.real_root_high,
         2.341640786499874, 1e-12);
    near(suite, "umbilical/coefficient/real-root-low", 0, scan.real_root_low,
         -0.341640786499874, 1e-12);
    exact(suite, "umbilical/coefficient/value-m2", 0, 5.0 * 4 - 20 - 4, -4.0);
    exact(suite, "umbilical/coefficient/value-m3", 0, 5.0 * 9 - 30 - 4, 11.0);

    // Criterion 10: exact rational expansion of the tangential coefficient
    // after substituting grad H = -eps cos(alpha) T.
    {
        double worst = 0.0;
        for (long long m = 2; m <= 20; ++m) {
            const Rational lhs = Rational(m * (m + 8), 3) - Rational(2 * (m - 1) * (3 * m + 2), 3);
            const Rational rhs = Rational(-5 * m * m + 10 * m + 4, 3);
            const Rational diff = lhs - rhs;
            worst = std::max(worst, std::abs(diff.convert_to<double>()));
        }
        exact(suite, "umbilical/codazzi/coefficient-exact-2-20", 10, worst, 0.0);
    }

    // Numeric spot check: m=4, eps=1, H=1, cos(alpha)=0.6 gives -12 * 0.6 * T.
    {
        const int m = 4;
        Eigen::VectorXd T(m);
        T << 0.8, 0.0, 0.0, 0.0;
        const double cosa = 0.6;
        const Eigen::VectorXd grad_H = -1.0 * cosa * T; // eps = +1
        const CTensionComponents c =
            umbilical_components(m, Epsilon::spherical, 1.0, grad_H, T, cosa, 0.0);
        const Eigen::VectorXd expected = -12.0 * cosa * T;
        near(suite, "umbilical/codazzi/spot-m4", 10,
             (c.tangential - expected).cwiseAbs().maxCoeff(), 0.0, 1e-12);
    }

    // H = 0 and lap H = 0 kill both components.
    {
        Eigen::VectorXd T(3);
        T << 0.0, 1.0, 0.0;
        const CTensionComponents c = umbilical_components(
            3, Epsilon::hyperbolic, 0.0, Eigen::VectorXd::Zero(3), T, 0.0, 0.0);
        exact(suite, "umbilical/vanishing/minimal", 0,
              std::max(c.tangential.cwiseAbs().maxCoeff(), std::abs(c.normal)), 0.0);
    }

    // Criterion 7: umbilical components agree with the general product-space
    // evaluation on umbilical states (grad |A|^2 = 2mH grad H).
    {
        double worst = 0.0;
        for (int trial = 0; trial < 10000; ++trial) {
            const int m = 2 + static_cast<int>(rng_() % 5);
            const double H = uniform(-2.0, 2.0);
            Eigen::VectorXd dir(m);
            for (int i = 0; i < m; ++i) dir(i) = uniform(-1.0, 1.0);
            if (dir.norm() < 1e-6) dir(0) = 1.0;
            const double t = uniform(0.0, 1.0);
            const Eigen::VectorXd T = dir.normalized() * t;
            double cosa = std::sqrt(std::max(0.0, 1.0 - t * t));
            if (rng_() & 1u) cosa = -cosa;
            Eigen::VectorXd grad_H(m);
            for (int i = 0; i < m; ++i) grad_H(i) = uniform(-1.0, 1.0);
            const double lap_H = uniform(-2.0, 2.0);
            const Epsilon eps = epsilon_from_int(static_cast<int>(rng_() % 3) - 1);

            const CTensionComponents direct =
                umbilical_components(m, eps, H, grad_H, T, cosa, lap_H);
            const PointState st(eps, H * Eigen::MatrixXd::Identity(m, m), T, cosa, grad_H,
                                2.0 * m * H * grad_H, lap_H);
            const CTensionComponents general = product_components(st);
            worst = std::max({worst,
                              (direct.tangential - general.tangential).cwiseAbs().maxCoeff(),
                              std::abs(direct.normal - general.normal)});
        }
        near(suite, "umbilical/agreement/product-random", 7, worst, 0.0, 1e-11);
    }
}

} // namespace

Report run(const std::string& suite, const Options& opts) {
    const auto& names = suite_names();
    const bool all = suite == "all";
    if (!all && std::find(names.begin(), names.end(), suite) == names.end()) {
        throw DomainError("unknown suite '" + suite + "'");
    }

    Runner runner(opts);
    if (all || suite == "spectra") runner.run_spectra();
    if (all || suite == "ctension") runner.run_ctension();
    if (all || suite == "sphere") runner.run_sphere();
    if (all || suite == "poly") runner.run_poly();
    if (all || suite == "ode") runner.run_ode();
    if (all || suite == "umbilical") runner.run_umbilical();

    Report report;
    report.suite = suite;
    report.version = kVersion;
    report.checks = runner.takeChecks();
    report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                                 [](const Check& c) { return c.pass; });
    return report;
}

std::string to_json(const Report& report, bool stamp) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["version"] = report.version;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["measured"] = c.measured;
        jc["expected"] = c.expected;
        jc["tol"] = c.tol;
        j["checks"].push_back(std::move(jc));
    }
    j["overall"] = report.overall ? "pass" : "fail";
    if (stamp) {
        std::time_t now = std::time(nullptr);
        std::tm tm_utc{};
        gmtime_r(&now, &tm_utc);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
        j["timestamp"] = buf;
    }
    return j.dump(2) + "\n";
}

} // namespace cbih::verify
