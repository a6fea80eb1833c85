#pragma once

#include <string>
#include <vector>

#include "cbih/errors.hpp"

namespace cbih::verify {

/// One verification check: a measured value compared against an expected
/// value at an absolute tolerance (tol = 0 demands exact equality; boolean
/// and integer checks are encoded as 0/1 or exact counts).
struct Check {
    std::string id;
    std::string suite;   // spectra | ctension | sphere | poly | ode | umbilical
    int criterion = 0;   // acceptance criterion this check belongs to, 0 if none
    double measured = 0.0;
    double expected = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct Report {
    std::string suite; // requested suite name ("all" runs everything)
    std::string version;
    std::vector<Check> checks;
    bool overall = false;
};

struct Options {
    /// Corrupts one classification-polynomial coefficient before running,
    /// to prove the harness detects failures. Never set in normal use.
    bool inject_fault = false;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "spectra", "ctension", "sphere", "poly", "ode", "umbilical"};
    return names;
}

/// Runs one suite (or "all") and returns the report with deterministic check
/// ordering. Throws DomainError for an unknown suite name.
Report run(const std::string& suite, const Options& opts = {});

/// JSON text per the report schema
/// {suite, version, checks:[{id,status,measured,expected,tol}], overall},
/// with a trailing newline. `stamp` appends an ISO-8601 UTC timestamp field.
std::string to_json(const Report& report, bool stamp = false);

} // namespace cbih::verify
