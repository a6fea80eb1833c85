#include "cbih/poly_roots.hpp"

#include <algorithm>
#include <array>

namespace cbih {

namespace {

// Exact rational 1e-9, used for the documented endpoint-root shift.
const Rational kEndpointShift = Rational(1, 1000000000);

int sign_of(const Rational& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

// Dense polynomial over the rationals, degree <= 3; used only for the Sturm
// sequence internals.
struct RatPoly {
    std::array<Rational, 4> c{};
    int deg = -1;

    void normalize() {
        deg = -1;
        for (int i = 3; i >= 0; --i) {
            if (c[static_cast<size_t>(i)] != 0) {
                deg = i;
                break;
            }
        }
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (int i = deg; i >= 0; --i) acc = acc * x + c[static_cast<size_t>(i)];
        return acc;
    }
};

RatPoly derivative_of(const RatPoly& p) {
    RatPoly d;
    for (int i = 1; i <= p.deg; ++i) d.c[static_cast<size_t>(i - 1)] = Rational(i) * p.c[static_cast<size_t>(i)];
    d.normalize();
    return d;
}

// Remainder of the exact polynomial division a / b, deg(b) >= 0.
RatPoly remainder_of(RatPoly a, const RatPoly& b) {
    while (a.deg >= b.deg && a.deg >= 0) {
        const Rational factor = a.c[static_cast<size_t>(a.deg)] / b.c[static_cast<size_t>(b.deg)];
        const int shift = a.deg - b.deg;
        for (int i = 0; i <= b.deg; ++i) {
            a.c[static_cast<size_t>(i + shift)] -= factor * b.c[static_cast<size_t>(i)];
        }
        a.c[static_cast<size_t>(a.deg)] = 0; // force exact cancellation of the lead
        a.normalize();
        if (a.deg < 0) break;
    }
    return a;
}

struct SturmChain {
    std::vector<RatPoly> seq;

    explicit SturmChain(const RatPoly& p) {
        seq.push_back(p);
        RatPoly d = derivative_of(p);
        if (d.deg >= 0) {
            seq.push_back(d);
            while (seq.back().deg > 0) {
                RatPoly r = remainder_of(seq[seq.size() - 2], seq.back());
                if (r.deg < 0) break; // p was not squarefree: chain ends at the gcd
                for (auto& coeff : r.c) coeff = -coeff;
                seq.push_back(r);
            }
        }
    }

    int sign_variations(const Rational& x) const {
        int variations = 0;
        int prev = 0;
        for (const auto& q : seq) {
            const int s = sign_of(q.eval(x));
            if (s != 0) {
                if (prev != 0 && s != prev) ++variations;
                prev = s;
            }
        }
        return variations;
    }

    // Distinct real roots in (lo, hi]; standard Sturm count. Valid also for
    // non-squarefree polynomials (the chain then ends at the gcd).
    int count(const Rational& lo, const Rational& hi) const {
        return sign_variations(lo) - sign_variations(hi);
    }
};

RatPoly to_ratpoly(const CubicPoly& p) {
    RatPoly rp;
    for (int i = 0; i < 4; ++i) rp.c[static_cast<size_t>(i)] = p.coeff(i);
    rp.normalize();
    return rp;
}

// Shifts endpoints inward by the exact rational 1e-9 while they are roots.
void shift_endpoint_roots(const RatPoly& p, Rational& lo, Rational& hi) {
    while (p.eval(lo) == 0 && lo < hi) lo += kEndpointShift;
    while (p.eval(hi) == 0 && hi > lo) hi -= kEndpointShift;
}

} // namespace

CubicPoly::CubicPoly(Rational c0, Rational c1, Rational c2, Rational c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

CubicPoly CubicPoly::from_integers(long long c0, long long c1, long long c2, long long c3) {
    return CubicPoly(Rational(c0), Rational(c1), Rational(c2), Rational(c3));
}

const Rational& CubicPoly::coeff(int i) const {
    if (i < 0 || i > 3) throw DomainError("cubic coefficient index out of range");
    return c_[static_cast<size_t>(i)];
}

int CubicPoly::degree() const noexcept {
    for (int i = 3; i >= 0; --i) {
        if (c_[static_cast<size_t>(i)] != 0) return i;
    }
    return -1;
}

Rational CubicPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (int i = 3; i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
    return acc;
}

double CubicPoly::eval_double(double x) const {
    double acc = 0.0;
    for (int i = 3; i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)].convert_to<double>();
    return acc;
}

CubicPoly CubicPoly::derivative() const {
    return CubicPoly(c_[1], 2 * c_[2], 3 * c_[3], 0);
}

int count_roots(const CubicPoly& p, const Rational& lo, const Rational& hi) {
    if (p.degree() < 0) throw DegenerateError("cannot count roots of the zero polynomial");
    if (lo >= hi) throw DomainError("count_roots needs lo < hi");
    RatPoly rp = to_ratpoly(p);
    Rational a = lo, b = hi;
    shift_endpoint_roots(rp, a, b);
    if (a >= b) return 0;
    return SturmChain(rp).count(a, b);
}

std::vector<RootCertificate> isolate_and_refine(const CubicPoly& p,
                                                const Rational& lo,
                                                const Rational& hi,
                                                double tol) {
    if (p.degree() < 0) throw DegenerateError("cannot isolate roots of the zero polynomial");
    if (!(tol > 0.0)) throw DomainError("isolation tolerance must be positive");
    if (lo >= hi) throw DomainError("isolate_and_refine needs lo < hi");

    RatPoly rp = to_ratpoly(p);
    Rational a = lo, b = hi;
    shift_endpoint_roots(rp, a, b);
    if (a >= b) return {};

    const SturmChain chain(rp);
    const Rational tol_rat(tol);

    std::vector<std::pair<Rational, Rational>> isolating;

    // Splits (x0, x1) into subintervals with Sturm count exactly 1. When a
    // bisection midpoint is itself a root, a small exact bracket around it is
    // carved out first.
    auto isolate = [&](auto&& self, Rational x0, Rational x1) -> void {
        const int n = chain.count(x0, x1);
        if (n == 0) return;
        if (n == 1) {
            isolating.emplace_back(std::move(x0), std::move(x1));
            return;
        }
        Rational mid = (x0 + x1) / 2;
        if (rp.eval(mid) == 0) {
            Rational delta = (x1 - x0) / 8;
            while (chain.count(mid - delta, mid + delta) != 1 ||
                   rp.eval(mid - delta) == 0 || rp.eval(mid + delta) == 0) {
                delta /= 2;
            }
            self(self, x0, mid - delta);
            isolating.emplace_back(mid - delta, mid + delta);
            self(self, mid + delta, x1);
            return;
        }
        self(self, x0, mid);
        self(self, mid, x1);
    };
    isolate(isolate, a, b);
    std::sort(isolating.begin(), isolating.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });

    std::vector<RootCertificate> out;
    out.reserve(isolating.size());
    for (auto& [x0, x1] : isolating) {
        // Bisection refinement by Sturm count keeps the certificate valid for
        // roots of any multiplicity.
        while (x1 - x0 >= tol_rat) {
            Rational mid = (x0 + x1) / 2;
            if (rp.eval(mid) == 0) {
                Rational delta = tol_rat / 4;
                while (chain.count(mid - delta, mid + delta) != 1 ||
                       rp.eval(mid - delta) == 0 || rp.eval(mid + delta) == 0) {
                    delta /= 2;
                }
                x0 = mid - delta;
                x1 = mid + delta;
                break;
            }
            if (chain.count(x0, mid) == 1) {
                x1 = std::move(mid);
            } else {
                x0 = std::move(mid);
            }
        }
        RootCertificate cert;
        cert.sign_lower = sign_of(rp.eval(x0));
        cert.sign_upper = sign_of(rp.eval(x1));
        const Rational midpoint = (x0 + x1) / 2;
        const Rational width = x1 - x0;
        cert.refined_value = midpoint.convert_to<double>();
        cert.width = width.convert_to<double>();
        cert.lower = std::move(x0);
        cert.upper = std::move(x1);
        out.push_back(std::move(cert));
    }
    return out;
}

} // namespace cbih
