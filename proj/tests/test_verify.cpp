#include <doctest.h>
#include <json.hpp>

#include "cbih/verify.hpp"

using cbih::verify::Options;
using cbih::verify::Report;

TEST_CASE("single suites run clean") {
    const Report spectra = cbih::verify::run("spectra");
    CHECK(spectra.overall);
    CHECK(!spectra.checks.empty());
    for (const auto& c : spectra.checks) CHECK(c.suite == "spectra");

    const Report poly = cbih::verify::run("poly");
    CHECK(poly.overall);
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS(cbih::verify::run("nope"), cbih::DomainError);
}

TEST_CASE("fault injection is caught and named") {
    Options opts;
    opts.inject_fault = true;
    const Report rep = cbih::verify::run("poly", opts);
    CHECK_FALSE(rep.overall);
    bool p3_failed = false;
    for (const auto& c : rep.checks) {
        if (!c.pass && c.id.rfind("poly/p3/", 0) == 0) p3_failed = true;
    }
    CHECK(p3_failed);
}

TEST_CASE("json report follows the schema and is deterministic") {
    const Report rep = cbih::verify::run("spectra");
    const std::string text = cbih::verify::to_json(rep, false);
    CHECK(text == cbih::verify::to_json(rep, false));
    CHECK(text.find("timestamp") == std::string::npos);

    const auto j = nlohmann::json::parse(text);
    CHECK(j.at("suite") == "spectra");
    CHECK(j.at("version").is_string());
    CHECK(j.at("overall") == "pass");
    REQUIRE(j.at("checks").is_array());
    for (const auto& jc : j.at("checks")) {
        CHECK(jc.contains("id"));
        CHECK(jc.contains("status"));
        CHECK(jc.contains("measured"));
        CHECK(jc.contains("expected"));
        CHECK(jc.contains("tol"));
    }

    const std::string stamped = cbih::verify::to_json(rep, true);
    CHECK(stamped.find("timestamp") != std::string::npos);
}
