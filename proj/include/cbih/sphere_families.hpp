#pragma once

#include <utility>
#include <vector>

#include "cbih/poly_roots.hpp"
#include "cbih/spectra.hpp"

namespace cbih {

/// Isoparametric family M_s in the round sphere S^{m+1}, identified by its
/// degree ell in {1,2,3,4,6} and the two alternating multiplicities m1, m2
/// (m2 is read only for ell >= 2). Principal curvatures at parameter s are
/// k_i(s) = cot(s + (i-1) pi / ell).
///
/// Degree constraints: ell = 3 requires m1 = m2 in {1,2,4,8}; ell = 6
/// requires m1 = m2 in {1,2}.
class IsoparametricFamily {
public:
    IsoparametricFamily(int degree, int m1, int m2);
    IsoparametricFamily(int degree, int m1); // equal multiplicities

    int degree() const noexcept { return degree_; }
    int m1() const noexcept { return m1_; }
    int m2() const noexcept { return m2_; }
    int dimension() const noexcept { return dimension_; }

    /// Upper end of the natural evaluation domain (0, ...): pi/ell for
    /// ell >= 2, pi for ell = 1 (the spectrum is defined up to the far
    /// focal point).
    double domain_max() const noexcept;

    /// Upper end of the canonical solve/scan interval. Equals domain_max()
    /// except for ell = 1, where it is pi/2: members at s and pi - s are
    /// mirror-congruent and the equator is the boundary fixed point, so the
    /// scan stops there.
    double scan_max() const noexcept;

private:
    int degree_;
    int m1_;
    int m2_;
    int dimension_;
};

/// Principal-curvature spectrum of the family member at parameter s.
/// Throws DomainError outside the open evaluation domain and PoleError
/// within 1e-9 of a cotangent pole.
PrincipalSpectrum spectrum_at(const IsoparametricFamily& fam, double s);

/// The c-biharmonicity form H m (5|A|^2 - 2m^2H^2 - 2m^2 + 11m - 6) - 6 tr A^3
/// applied to an arbitrary constant spectrum; equals three times
/// residual_const_scal(spec, +1, 0) identically.
double sphere_residual(const PrincipalSpectrum& spec);

/// c-biharmonicity residual of the family member at s,
/// sphere_residual(spectrum_at(fam, s)).
double residual(const IsoparametricFamily& fam, double s);

/// Closed form of the degree-3 residual,
/// -27 m1 cos(3s) (2 m1^2 + m1 cos(6s) - 6 m1 + 6) / (sin^3 s (2 cos 2s + 1)^3),
/// oriented to match residual(); the zero set is unaffected by the overall
/// sign. Throws PoleError when |2 cos 2s + 1| < 1e-12 (s near pi/3).
double residual_l3_closed(int m1, double s);

/// The degree-4 residual numerator as an exact-integer cubic in y = cos(4s).
/// Requires 1 <= m1 <= m2.
CubicPoly quartic_poly(int m1, int m2);

/// Parameter of the minimal member: pi/(2 ell) for equal multiplicities;
/// atan(sqrt(m1/m2)) for ell = 2 and (1/4) acos((m2-m1)/(m1+m2)) for
/// ell = 4 when m1 != m2.
double minimal_parameter(const IsoparametricFamily& fam);

/// Squared radii (r1^2, r2^2) = (sin^2 s, cos^2 s) of the generalized
/// Clifford torus S^{m1}(r1) x S^{m2}(r2). Requires ell = 2.
std::pair<double, double> torus_radii(const IsoparametricFamily& fam, double s);

struct FamilyRoot {
    double s = 0.0;
    double mean_curvature = 0.0;
    double norm_A_squared = 0.0;
    double trace_A_cubed = 0.0;
    double scalar_curvature = 0.0;
    bool is_minimal = false; // |H| < 1e-10 at the root
};

struct SolveReport {
    std::vector<FamilyRoot> roots; // sorted by s, strictly inside the scan interval
    double residual_tolerance = 0.0;
};

/// All zeros of residual(fam, .) in the scan interval: a sign scan over
/// `grid_samples` uniform points on the interval shrunk by 1e-6 at each end,
/// followed by bisection until the bracket is narrower than tol. For
/// equal-multiplicity families of degree >= 2 a root bracketed near
/// pi/(2 ell) is reported as exactly that value (the spectrum is odd there,
/// so it is an exact zero of any multiplicity).
SolveReport solve_cbih(const IsoparametricFamily& fam,
                       double tol = 1e-12,
                       int grid_samples = 4096);

} // namespace cbih
