#pragma once

#include <vector>

#include "cbih/errors.hpp"

namespace cbih {

/// Sectional curvature of the ambient space form: exactly -1, 0 or +1.
enum class Epsilon : int {
    hyperbolic = -1,
    euclidean = 0,
    spherical = 1,
};

constexpr double epsilon_value(Epsilon eps) noexcept {
    return static_cast<double>(static_cast<int>(eps));
}

/// Throws DomainError unless v is -1, 0 or +1.
Epsilon epsilon_from_int(int v);

struct SpectrumEntry {
    double curvature = 0.0;
    int multiplicity = 0;
};

/// Constant principal curvatures of a hypersurface, with multiplicities.
///
/// The total dimension m is stored explicitly and validated against the
/// multiplicity sum, so malformed inputs fail at construction. Entries with
/// equal curvature are kept as passed; no fuzzy merging is done.
class PrincipalSpectrum {
public:
    PrincipalSpectrum(std::vector<SpectrumEntry> entries, int dimension);

    const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
    int dimension() const noexcept { return dimension_; }

private:
    std::vector<SpectrumEntry> entries_;
    int dimension_;
};

/// H = (trace A)/m.
double mean_curvature(const PrincipalSpectrum& spec);

/// |A|^2 = sum of squared principal curvatures.
double norm_A_squared(const PrincipalSpectrum& spec);

/// trace A^3 = sum of cubed principal curvatures.
double trace_A_cubed(const PrincipalSpectrum& spec);

/// Scal = eps*m(m-1) + m^2 H^2 - |A|^2 for a hypersurface of a space form.
double scalar_curvature_spaceform(const PrincipalSpectrum& spec, Epsilon eps);

} // namespace cbih
