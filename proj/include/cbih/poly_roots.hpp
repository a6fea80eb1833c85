#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cbih/errors.hpp"

namespace cbih {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial of degree <= 3 with exact rational coefficients,
/// p(x) = c0 + c1 x + c2 x^2 + c3 x^3. Leading zeros are allowed; the
/// effective degree drops accordingly.
class CubicPoly {
public:
    CubicPoly(Rational c0, Rational c1, Rational c2, Rational c3);

    static CubicPoly from_integers(long long c0, long long c1, long long c2, long long c3);

    const Rational& coeff(int i) const;

    /// Highest index with a nonzero coefficient; -1 for the zero polynomial.
    int degree() const noexcept;

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const;

    /// Floating-point convenience evaluation.
    double eval_double(double x) const;

    /// Derivative (degree drops by one; still representable as a CubicPoly).
    CubicPoly derivative() const;

private:
    Rational c_[4];
};

/// Certified isolating interval for one distinct real root.
/// The Sturm count of the polynomial over (lower, upper) is exactly 1.
struct RootCertificate {
    Rational lower;
    Rational upper;
    int sign_lower = 0;     // sign of p at the interval ends
    int sign_upper = 0;
    double refined_value = 0.0; // interval midpoint after refinement
    double width = 0.0;         // upper - lower after refinement
};

/// Exact number of distinct real roots of p in the open interval (lo, hi),
/// by a Sturm sequence over the rationals. Endpoints that happen to be roots
/// are shifted inward by the exact rational 1e-9 before counting; this is
/// deliberate, documented behaviour. Throws DegenerateError for the zero
/// polynomial.
int count_roots(const CubicPoly& p, const Rational& lo, const Rational& hi);

/// Disjoint certified isolating intervals for every distinct real root of p
/// in (lo, hi), each refined by bisection until its width is below tol.
/// Certification and refinement run in exact rational arithmetic; floating
/// point appears only in the reported refined_value/width.
std::vector<RootCertificate> isolate_and_refine(const CubicPoly& p,
                                                const Rational& lo,
                                                const Rational& hi,
                                                double tol);

} // namespace cbih
