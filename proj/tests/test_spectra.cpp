#include <cmath>
#include <random>

#include <doctest.h>

#include "cbih/spectra.hpp"

using namespace cbih;

namespace {

// Portable uniform double, independent of std distribution internals.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

PrincipalSpectrum random_spectrum(std::mt19937_64& rng) {
    const int m = 2 + static_cast<int>(rng() % 7);
    std::vector<SpectrumEntry> entries;
    int left = m;
    while (left > 0) {
        const int mult = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(left));
        entries.push_back({uniform(rng, -3.0, 3.0), mult});
        left -= mult;
    }
    return PrincipalSpectrum(std::move(entries), m);
}

} // namespace

TEST_CASE("epsilon round-trips and rejects other integers") {
    CHECK(epsilon_value(epsilon_from_int(-1)) == -1.0);
    CHECK(epsilon_value(epsilon_from_int(0)) == 0.0);
    CHECK(epsilon_value(epsilon_from_int(1)) == 1.0);
    CHECK_THROWS_AS(epsilon_from_int(2), DomainError);
    CHECK_THROWS_AS(epsilon_from_int(-3), DomainError);
}

TEST_CASE("spectrum construction validates its invariants") {
    CHECK_THROWS_AS(PrincipalSpectrum({{1.0, 2}}, 3), DomainError);  // sum != m
    CHECK_THROWS_AS(PrincipalSpectrum({{1.0, 0}, {0.0, 2}}, 2), DomainError);
    CHECK_THROWS_AS(PrincipalSpectrum({{1.0, -1}, {0.0, 3}}, 2), DomainError);
    CHECK_THROWS_AS(PrincipalSpectrum({{1.0, 1}}, 1), DomainError); // m < 2
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(PrincipalSpectrum({{inf, 2}}, 2), DomainError);
}

TEST_CASE("mean curvature") {
    const double r3 = std::sqrt(3.0);
    CHECK(mean_curvature(PrincipalSpectrum({{r3, 1}, {0.0, 1}, {-r3, 1}}, 3)) == 0.0);
    CHECK(mean_curvature(PrincipalSpectrum({{1.0 / 3.0, 6}}, 6)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    // tan^2 s = T*, the positive root of 8T^3 - 32T^2 + 11T - 3
    const double t = std::sqrt(3.651573628640632);
    const PrincipalSpectrum torus({{1.0 / t, 1}, {-t, 2}}, 3);
    CHECK(mean_curvature(torus) == doctest::Approx(-1.099502364713019).epsilon(1e-12));
}

TEST_CASE("squared norm of the shape operator") {
    const double r2 = std::sqrt(2.0);
    const PrincipalSpectrum l4({{r2 + 1, 1}, {r2 - 1, 1}, {1 - r2, 1}, {-1 - r2, 1}}, 4);
    CHECK(norm_A_squared(l4) == doctest::Approx(12.0).epsilon(1e-15));
    CHECK(norm_A_squared(PrincipalSpectrum({{0.0, 5}}, 5)) == 0.0);

    const double t = std::sqrt(2.0 - std::sqrt(3.0));
    CHECK(norm_A_squared(PrincipalSpectrum({{1.0 / t, 2}, {-t, 2}}, 4)) ==
          doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("trace of A cubed") {
    const double r2 = std::sqrt(2.0);
    const PrincipalSpectrum l4({{r2 + 1, 1}, {r2 - 1, 1}, {1 - r2, 1}, {-1 - r2, 1}}, 4);
    CHECK(std::abs(trace_A_cubed(l4)) < 1e-12);
    CHECK(trace_A_cubed(PrincipalSpectrum({{0.5, 5}}, 5)) == doctest::Approx(0.625).epsilon(1e-15));

    const double t = std::sqrt(2.0 - std::sqrt(3.0));
    CHECK(trace_A_cubed(PrincipalSpectrum({{1.0 / t, 2}, {-t, 2}}, 4)) ==
          doctest::Approx(10.0 * r2).epsilon(1e-10));
}

TEST_CASE("scalar curvature in a space form") {
    CHECK(scalar_curvature_spaceform(PrincipalSpectrum({{0.0, 4}}, 4), Epsilon::spherical) == 12.0);
    const PrincipalSpectrum small_sphere({{1.0 / std::sqrt(3.0), 4}}, 4);
    CHECK(scalar_curvature_spaceform(small_sphere, Epsilon::spherical) ==
          doctest::Approx(16.0).epsilon(1e-14));
    const double r2 = std::sqrt(2.0);
    const PrincipalSpectrum l4({{r2 + 1, 1}, {r2 - 1, 1}, {1 - r2, 1}, {-1 - r2, 1}}, 4);
    CHECK(scalar_curvature_spaceform(l4, Epsilon::spherical) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("invariants are permutation-invariant, homogeneous and split-stable") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        const PrincipalSpectrum spec = random_spectrum(rng);

        std::vector<SpectrumEntry> shuffled = spec.entries();
        for (size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng() % i]);
        const PrincipalSpectrum perm(shuffled, spec.dimension());
        CHECK(mean_curvature(perm) == doctest::Approx(mean_curvature(spec)).epsilon(1e-13));
        CHECK(norm_A_squared(perm) == doctest::Approx(norm_A_squared(spec)).epsilon(1e-13));
        CHECK(trace_A_cubed(perm) == doctest::Approx(trace_A_cubed(spec)).epsilon(1e-13));

        const double lam = uniform(rng, 0.5, 2.0);
        std::vector<SpectrumEntry> scaled = spec.entries();
        for (auto& e : scaled) e.curvature *= lam;
        const PrincipalSpectrum spec_scaled(scaled, spec.dimension());
        CHECK(std::abs(mean_curvature(spec_scaled) - lam * mean_curvature(spec)) < 1e-12);
        CHECK(std::abs(norm_A_squared(spec_scaled) - lam * lam * norm_A_squared(spec)) < 1e-12);
        CHECK(std::abs(trace_A_cubed(spec_scaled) - lam * lam * lam * trace_A_cubed(spec)) < 1e-12);

        std::vector<SpectrumEntry> split = spec.entries();
        for (size_t i = 0; i < split.size(); ++i) {
            if (split[i].multiplicity >= 2) {
                split.push_back({split[i].curvature, 1});
                split[i].multiplicity -= 1;
                break;
            }
        }
        const PrincipalSpectrum spec_split(split, spec.dimension());
        CHECK(std::abs(mean_curvature(spec_split) - mean_curvature(spec)) < 1e-13);
        CHECK(std::abs(norm_A_squared(spec_split) - norm_A_squared(spec)) < 1e-13);
        CHECK(std::abs(trace_A_cubed(spec_split) - trace_A_cubed(spec)) < 1e-13);
    }
}
