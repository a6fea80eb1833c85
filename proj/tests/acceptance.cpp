// Acceptance suite: runs the full verification registry and reports one
// pass/fail line per top-level criterion. Exit code 0 only when every
// criterion (and every registered check) passes.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cbih/verify.hpp"

namespace {

const std::map<int, const char*> kCriteria = {
    {1, "degree-1 solver reproduces the small-hypersphere radii (m = 2, 3, 4)"},
    {2, "degree-2 roots match the certified cubics; Sturm uniqueness; P3(1) = -8, P3(2) = 1"},
    {3, "degree 3: only zero is pi/6 for every multiplicity; closed form matches to 1e-9"},
    {4, "degree 6: only zero is pi/12 for m1 = 1, 2"},
    {5, "degree 4 equal multiplicities: only zero pi/8; tr A^3 = 0; |A|^2 = 12"},
    {6, "degree 4, m1 < m2: unique certified root; endpoint values; residual at the minimal parameter"},
    {7, "consistency: 3x residual identity, Ricci trace, umbilical agreement (randomized)"},
    {8, "Euclidean rigidity: spheres and cylinders never solve, hyperplanes always do"},
    {9, "hyperbolic reduction: b = 0 is the only zero on the scan grid"},
    {10, "umbilical rigidity: coefficient scan to 1e6 and exact rational expansion"},
    {11, "rotational ODE: drift, 4th-order halving, 16H identity, lower bound, Scal = 12"},
    {12, "scalar-curvature table {12, 16, 8, 12, >=5+16H^2, 0} and the certified |A|^2 bound"},
};

} // namespace

int main() {
    cbih::verify::Report report;
    try {
        report = cbih::verify::run("all");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
        return 1;
    }

    std::map<int, std::pair<int, int>> tally; // criterion -> (passed, total)
    std::vector<const cbih::verify::Check*> failures;
    for (const auto& c : report.checks) {
        if (c.criterion > 0) {
            auto& t = tally[c.criterion];
            t.second += 1;
            if (c.pass) t.first += 1;
        }
        if (!c.pass) failures.push_back(&c);
    }

    bool all_pass = true;
    for (const auto& [num, text] : kCriteria) {
        const auto it = tally.find(num);
        const bool populated = it != tally.end() && it->second.second > 0;
        const bool pass = populated && it->second.first == it->second.second;
        all_pass = all_pass && pass;
        std::printf("criterion %02d [%s] %s (%d/%d checks)\n", num, pass ? "PASS" : "FAIL", text,
                    populated ? it->second.first : 0, populated ? it->second.second : 0);
    }

    if (!failures.empty()) {
        std::printf("\nfailing checks:\n");
        for (const auto* c : failures) {
            std::printf("  %-48s measured=%.17g expected=%.17g tol=%.3g\n", c->id.c_str(),
                        c->measured, c->expected, c->tol);
        }
    }
    const bool registry_clean = report.overall;
    std::printf("\nacceptance: %s (%zu checks total, %zu failing)\n",
                all_pass && registry_clean ? "PASS" : "FAIL", report.checks.size(),
                failures.size());
    return all_pass && registry_clean ? 0 : 1;
}
