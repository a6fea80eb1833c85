#include "cbih/sphere_families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cbih {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleGuard = 1e-9;   // minimum distance to a cotangent pole
constexpr double kEndShrink = 1e-6;   // scan interval shrink at each end
constexpr double kMinimalTol = 1e-10; // |H| below this flags a minimal member

bool valid_degree(int ell) {
    return ell == 1 || ell == 2 || ell == 3 || ell == 4 || ell == 6;
}

} // namespace

IsoparametricFamily::IsoparametricFamily(int degree, int m1, int m2)
    : degree_(degree), m1_(m1), m2_(m2) {
    if (!valid_degree(degree_)) {
        throw DomainError("isoparametric degree must be one of 1, 2, 3, 4, 6");
    }
    if (m1_ < 1 || (degree_ >= 2 && m2_ < 1)) {
        throw DomainError("multiplicities must be positive");
    }
    if (degree_ == 1) m2_ = m1_; // single curvature, m2 unused
    if (degree_ == 3) {
        if (m1_ != m2_ || (m1_ != 1 && m1_ != 2 && m1_ != 4 && m1_ != 8)) {
            throw DomainError("degree 3 requires m1 = m2 in {1, 2, 4, 8}");
        }
    }
    if (degree_ == 6) {
        if (m1_ != m2_ || (m1_ != 1 && m1_ != 2)) {
            throw DomainError("degree 6 requires m1 = m2 in {1, 2}");
        }
    }
    dimension_ = 0;
    for (int i = 0; i < degree_; ++i) dimension_ += (i % 2 == 0) ? m1_ : m2_;
    if (dimension_ < 2) {
        throw DomainError("family dimension must be at least 2");
    }
}

IsoparametricFamily::IsoparametricFamily(int degree, int m1)
    : IsoparametricFamily(degree, m1, m1) {}

double IsoparametricFamily::domain_max() const noexcept {
    return degree_ == 1 ? kPi : kPi / degree_;
}

double IsoparametricFamily::scan_max() const noexcept {
    return degree_ == 1 ? kPi / 2.0 : kPi / degree_;
}

namespace {

void check_parameter(const IsoparametricFamily& fam, double s) {
    const double hi = fam.domain_max();
    if (!(s > 0.0 && s < hi)) {
        throw DomainError("family parameter must lie in (0, " + std::to_string(hi) + ")");
    }
    if (s < kPoleGuard || hi - s < kPoleGuard) {
        throw PoleError("family parameter within 1e-9 of a cotangent pole");
    }
}

} // namespace

PrincipalSpectrum spectrum_at(const IsoparametricFamily& fam, double s) {
    check_parameter(fam, s);
    std::vector<SpectrumEntry> entries;
    entries.reserve(static_cast<size_t>(fam.degree()));
    for (int i = 0; i < fam.degree(); ++i) {
        const double angle = s + i * kPi / fam.degree();
        entries.push_back({1.0 / std::tan(angle), (i % 2 == 0) ? fam.m1() : fam.m2()});
    }
    return PrincipalSpectrum(std::move(entries), fam.dimension());
}

double sphere_residual(const PrincipalSpectrum& spec) {
    const double m = spec.dimension();
    const double H = mean_curvature(spec);
    const double A2 = norm_A_squared(spec);
    const double A3 = trace_A_cubed(spec);
    return H * m * (5.0 * A2 - 2.0 * m * m * H * H - 2.0 * m * m + 11.0 * m - 6.0) - 6.0 * A3;
}

double residual(const IsoparametricFamily& fam, double s) {
    check_parameter(fam, s);
    // Extended-precision accumulation: near a repeated zero the residual is a
    // tiny difference of order-one cotangent sums, and double-only evaluation
    // leaves too little signal for the solver's sign scan.
    constexpr long double pi_l = std::numbers::pi_v<long double>;
    long double trace = 0.0L, a2 = 0.0L, a3 = 0.0L;
    for (int i = 0; i < fam.degree(); ++i) {
        const long double angle = static_cast<long double>(s) + i * pi_l / fam.degree();
        const long double k = std::cos(angle) / std::sin(angle);
        const long double mult = (i % 2 == 0) ? fam.m1() : fam.m2();
        trace += mult * k;
        a2 += mult * k * k;
        a3 += mult * k * k * k;
    }
    const long double m = fam.dimension();
    const long double H = trace / m;
    const long double value =
        H * m * (5.0L * a2 - 2.0L * m * m * H * H - 2.0L * m * m + 11.0L * m - 6.0L) - 6.0L * a3;
    return static_cast<double>(value);
}

double residual_l3_closed(int m1, double s) {
    if (m1 != 1 && m1 != 2 && m1 != 4 && m1 != 8) {
        throw DomainError("degree 3 multiplicity must be in {1, 2, 4, 8}");
    }
    if (!(s > 0.0 && s < kPi / 3.0)) {
        throw DomainError("degree 3 parameter must lie in (0, pi/3)");
    }
    const double denom_core = 2.0 * std::cos(2.0 * s) + 1.0;
    if (std::abs(denom_core) < 1e-12) {
        throw PoleError("degree 3 closed form evaluated at its pole (s near pi/3)");
    }
    const double sin_s = std::sin(s);
    // Oriented to match residual(); an overall sign does not move the zeros.
    return -27.0 * m1 * std::cos(3.0 * s) *
           (2.0 * m1 * m1 + m1 * std::cos(6.0 * s) - 6.0 * m1 + 6.0) /
           (sin_s * sin_s * sin_s * denom_core * denom_core * denom_core);
}

CubicPoly quartic_poly(int m1, int m2) {
    if (m1 < 1 || m2 < m1) throw DomainError("quartic_poly requires 1 <= m1 <= m2");
    const long long p = m1, q = m2;
    const long long sum = p + q, sq = p * p + q * q, prod = p * q;
    const long long a0 = 4 * (p - q) * (4 * sq - 13 * sum + 12);
    const long long a1 = 4 * (8 * (p * p * p + q * q * q) - 23 * sq - 6 * prod + 24 * sum);
    const long long a2 = 4 * (p - q) * (4 * sq + 8 * prod - 7 * sum + 12);
    const long long a3 = 12 * sum * sum;
    return CubicPoly::from_integers(a0, a1, a2, a3);
}

double minimal_parameter(const IsoparametricFamily& fam) {
    if (fam.m1() == fam.m2()) {
        return kPi / (2.0 * fam.degree());
    }
    if (fam.degree() == 2) {
        return std::atan(std::sqrt(static_cast<double>(fam.m1()) / fam.m2()));
    }
    // degree 4, m1 != m2
    const double ratio = static_cast<double>(fam.m2() - fam.m1()) / (fam.m1() + fam.m2());
    return 0.25 * std::acos(ratio);
}

std::pair<double, double> torus_radii(const IsoparametricFamily& fam, double s) {
    if (fam.degree() != 2) {
        throw DomainError("torus radii are defined for degree 2 families only");
    }
    if (!(s > 0.0 && s < fam.domain_max())) {
        throw DomainError("family parameter must lie in (0, pi/2)");
    }
    const double sin_s = std::sin(s);
    const double cos_s = std::cos(s);
    return {sin_s * sin_s, cos_s * cos_s};
}

SolveReport solve_cbih(const IsoparametricFamily& fam, double tol, int grid_samples) {
    if (!(tol > 0.0)) throw DomainError("solver tolerance must be positive");
    if (grid_samples < 2) throw DomainError("solver grid needs at least 2 samples");

    const double lo = kEndShrink;
    const double hi = fam.scan_max() - kEndShrink;

    SolveReport report;
    report.residual_tolerance = tol;

    double prev_s = lo;
    double prev_r = residual(fam, prev_s);
    for (int i = 1; i < grid_samples; ++i) {
        const double s = lo + (hi - lo) * i / (grid_samples - 1);
        const double r = residual(fam, s);
        const bool bracketed = (prev_r == 0.0) ? false : (r == 0.0 ? false : (prev_r < 0) != (r < 0));
        if (r == 0.0 && s != hi) {
            // Grid point exactly on a root: record it directly.
            report.roots.push_back({s, 0, 0, 0, 0, false});
        } else if (bracketed) {
            double a = prev_s, b = s, fa = prev_r;
            while (b - a > tol) {
                const double mid = 0.5 * (a + b);
                const double fm = residual(fam, mid);
                if (fm == 0.0) {
                    a = mid - 0.25 * tol;
                    b = mid + 0.25 * tol;
                    break;
                }
                if ((fa < 0) != (fm < 0)) {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            report.roots.push_back({0.5 * (a + b), 0, 0, 0, 0, false});
        }
        prev_s = s;
        prev_r = r;
    }

    // With equal multiplicities the spectrum at s = pi/(2 ell) is odd (the
    // curvatures come in +-k pairs with matching multiplicities), so H and
    // trace A^3 vanish identically and that parameter is an exact root. A
    // bracketed root may sit a few microns off when the zero is repeated and
    // the sign carries no more information; it snaps to the exact value.
    if (fam.degree() >= 2 && fam.m1() == fam.m2()) {
        const double exact = kPi / (2.0 * fam.degree());
        for (auto& root : report.roots) {
            if (std::abs(root.s - exact) < 1e-4) root.s = exact;
        }
    }

    for (auto& root : report.roots) {
        const PrincipalSpectrum spec = spectrum_at(fam, root.s);
        root.mean_curvature = mean_curvature(spec);
        root.norm_A_squared = norm_A_squared(spec);
        root.trace_A_cubed = trace_A_cubed(spec);
        root.scalar_curvature = scalar_curvature_spaceform(spec, Epsilon::spherical);
        root.is_minimal = std::abs(root.mean_curvature) < kMinimalTol;
    }
    std::sort(report.roots.begin(), report.roots.end(),
              [](const FamilyRoot& a, const FamilyRoot& b) { return a.s < b.s; });
    return report;
}

} // namespace cbih
