#include "cbih/spectra.hpp"

#include <cmath>

namespace cbih {

Epsilon epsilon_from_int(int v) {
    switch (v) {
    case -1: return Epsilon::hyperbolic;
    case 0: return Epsilon::euclidean;
    case 1: return Epsilon::spherical;
    default:
        throw DomainError("ambient curvature must be -1, 0 or +1, got " + std::to_string(v));
    }
}

PrincipalSpectrum::PrincipalSpectrum(std::vector<SpectrumEntry> entries, int dimension)
    : entries_(std::move(entries)), dimension_(dimension) {
    if (dimension_ < 2) {
        throw DomainError("spectrum dimension must be at least 2, got " + std::to_string(dimension_));
    }
    int total = 0;
    for (const auto& e : entries_) {
        if (e.multiplicity < 1) {
            throw DomainError("spectrum multiplicities must be positive");
        }
        if (!std::isfinite(e.curvature)) {
            throw DomainError("spectrum curvatures must be finite");
        }
        total += e.multiplicity;
    }
    if (total != dimension_) {
        throw DomainError("multiplicities sum to " + std::to_string(total) +
                          " but dimension is " + std::to_string(dimension_));
    }
}

double mean_curvature(const PrincipalSpectrum& spec) {
    double trace = 0.0;
    for (const auto& e : spec.entries()) trace += e.multiplicity * e.curvature;
    return trace / spec.dimension();
}

double norm_A_squared(const PrincipalSpectrum& spec) {
    double sum = 0.0;
    for (const auto& e : spec.entries()) sum += e.multiplicity * e.curvature * e.curvature;
    return sum;
}

double trace_A_cubed(const PrincipalSpectrum& spec) {
    double sum = 0.0;
    for (const auto& e : spec.entries()) sum += e.multiplicity * e.curvature * e.curvature * e.curvature;
    return sum;
}

double scalar_curvature_spaceform(const PrincipalSpectrum& spec, Epsilon eps) {
    const double m = spec.dimension();
    const double H = mean_curvature(spec);
    return epsilon_value(eps) * m * (m - 1.0) + m * m * H * H - norm_A_squared(spec);
}

} // namespace cbih
