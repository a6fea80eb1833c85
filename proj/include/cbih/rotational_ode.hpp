#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "cbih/errors.hpp"

namespace cbih {

/// State of the biconservative rotational profile curve: the profile radius
/// h1, its arc-length derivative, and the prime-integral constant C of
/// h1^2 h1'^2 + h1^4 - h1^2 = C, with C in (-1/4, 0).
struct ProfileState {
    double prime_constant = 0.0; // C
    double arc_length = 0.0;     // s
    double radius = 0.0;         // h1, in (0, 1)
    double radius_rate = 0.0;    // h1'
};

/// h1^2 h1'^2 + h1^4 - h1^2 - C; zero along exact solutions.
double prime_integral_residual(const ProfileState& st) noexcept;

/// Throws DomainError unless C is admissible, h1^2 lies in the admissible
/// band (1e-9 slack) and the prime-integral residual is below 1e-6.
void require_admissible(const ProfileState& st);

/// (h1_min, h1_max) = (sqrt(x-), sqrt(x+)) with x+- the roots of
/// x^2 - x - C. Throws DomainError for C outside (-1/4, 0).
std::pair<double, double> admissible_range(double C);

/// h1'' = -(C + h1^4) / h1^3. Values of |C + h1^4| below 1e-14 are treated
/// as an exact turning point of h1' (relevant only in the C -> -1/4 limit,
/// where the profile degenerates to a circle).
double acceleration(const ProfileState& st);

struct TrajectorySample {
    double s = 0.0;
    double h1 = 0.0;
    double h1p = 0.0;
    double prime_residual = 0.0;
    double mean_curvature = 0.0;
    double ctension_residual = 0.0;
};

struct Trajectory {
    double prime_constant = 0.0;
    double step = 0.0;
    std::vector<TrajectorySample> samples;
    double max_prime_residual = 0.0;
};

/// Integrates the profile ODE from the fixed initial state (h1_max, 0) up to
/// s_max with a fixed-step 4th-order Adams-Bashforth scheme (the first three
/// steps come from classical RK4). Every sample carries the prime-integral
/// residual; the run aborts with StepTooLargeError if that monitor exceeds
/// 1e-6.
Trajectory integrate(double C, double s_max, double step);

/// Principal curvatures (k1, k2) with multiplicities (1, 3):
/// k2 = -sqrt(-C)/h1^2 and k1 = -k2.
std::pair<double, double> curvatures(const ProfileState& st);

/// H = (k1 + 3 k2)/4 = -sqrt(-C) / (2 h1^2).
double mean_curvature(const ProfileState& st);

/// Scal = 12 + 16 H^2 - |A|^2 with |A|^2 = k1^2 + 3 k2^2; identically 12
/// along admissible states.
double scalar_curvature(const ProfileState& st);

/// Conformal-bitension coefficient 4(H'' + 3 (h1'/h1) H' + 8H^3 + 2H), with
/// H', H'' expanded analytically and h1'' taken from acceleration(). Equals
/// 16 H = -8 sqrt(-C)/h1^2 identically, so it never vanishes.
double ctension_residual(const ProfileState& st);

/// CSV with header s,h1,h1p,prime_residual,H,ctension_residual.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

} // namespace cbih
