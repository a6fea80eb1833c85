// Integration tests that drive the built `cbih` binary end to end.
// The binary path arrives as --cli=PATH (stripped before doctest parses).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <sys/wait.h>

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string err_path = "cli_stderr.tmp";
    const std::string cmd = "\"" + g_cli + "\" " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

// Parses "a,b,..." CSV text into rows of doubles, skipping the header.
std::vector<std::vector<double>> parse_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

int sign_changes(const std::vector<std::vector<double>>& rows, size_t col) {
    int changes = 0;
    double prev = 0.0;
    for (const auto& row : rows) {
        const double v = row[col];
        if (v == 0.0) continue;
        if (prev != 0.0 && (prev < 0) != (v < 0)) ++changes;
        prev = v;
    }
    return changes;
}

} // namespace

TEST_CASE("scan: degree 4 (1,2) residual changes sign exactly once") {
    const RunResult r = run_cli("scan --degree 4 --m1 1 --m2 2 --samples 1000");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 1000);
    CHECK(sign_changes(rows, 1) == 1);
}

TEST_CASE("scan: degree 3 sign change only at pi/6") {
    const RunResult r = run_cli("scan --degree 3 --m1 1 --samples 500");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 500);
    CHECK(sign_changes(rows, 1) == 1);
    for (size_t i = 1; i < rows.size(); ++i) {
        if ((rows[i - 1][1] < 0) != (rows[i][1] < 0)) {
            CHECK(rows[i - 1][0] < std::numbers::pi / 6.0);
            CHECK(rows[i][0] > std::numbers::pi / 6.0);
        }
    }
}

TEST_CASE("scan: degree 1 m=2 changes sign once, at sin^2 s = 1/3") {
    const RunResult r = run_cli("scan --degree 1 --m1 2 --samples 2000");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(sign_changes(rows, 1) == 1);
    const double s_star = std::asin(1.0 / std::sqrt(3.0));
    for (size_t i = 1; i < rows.size(); ++i) {
        if ((rows[i - 1][1] < 0) != (rows[i][1] < 0)) {
            CHECK(rows[i - 1][0] < s_star);
            CHECK(rows[i][0] > s_star);
        }
    }
}

TEST_CASE("solve: degree-2 tori match the classification cubics") {
    const RunResult r = run_cli("solve --degree 2 --m1 1 --m2 2");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("roots").size() == 1);
    const double s = j["roots"][0]["s"].get<double>();
    const double tan2 = std::tan(s) * std::tan(s);
    CHECK(std::abs(tan2 - 3.651573628640632) < 1e-9);

    const RunResult r2 = run_cli("solve --degree 2 --m1 1 --m2 3");
    REQUIRE(r2.exit_code == 0);
    const auto j2 = nlohmann::json::parse(r2.out);
    REQUIRE(j2.at("roots").size() == 1);
    const double s2 = j2["roots"][0]["s"].get<double>();
    CHECK(std::abs(std::tan(s2) * std::tan(s2) - 1.970568939394668) < 1e-9);

    const RunResult r3 = run_cli("solve --degree 6 --m1 1");
    REQUIRE(r3.exit_code == 0);
    const auto j3 = nlohmann::json::parse(r3.out);
    REQUIRE(j3.at("roots").size() == 1);
    CHECK(std::abs(j3["roots"][0]["s"].get<double>() - std::numbers::pi / 12.0) < 1e-10);
    CHECK(j3["roots"][0]["is_minimal"].get<bool>());
}

TEST_CASE("solve output is byte-identical across runs") {
    const RunResult a = run_cli("solve --degree 4 --m1 1 --m2 2");
    const RunResult b = run_cli("solve --degree 4 --m1 1 --m2 2");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("verify: ode suite passes and carries the headline checks") {
    const RunResult r = run_cli("verify --suite ode");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("overall") == "pass");
    bool saw_drift = false, saw_identity = false;
    for (const auto& c : j.at("checks")) {
        const std::string id = c.at("id").get<std::string>();
        if (id == "ode/drift/step-1e-3") saw_drift = true;
        if (id == "ode/identity/ctension-16H") saw_identity = true;
        CHECK(c.at("status") == "pass");
    }
    CHECK(saw_drift);
    CHECK(saw_identity);
    CHECK(r.out.find("timestamp") == std::string::npos);
}

TEST_CASE("verify: poly suite includes the exact endpoint evaluations") {
    const RunResult r = run_cli("verify --suite poly");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("overall") == "pass");
    bool saw_p3_1 = false, saw_p3_2 = false;
    for (const auto& c : j.at("checks")) {
        const std::string id = c.at("id").get<std::string>();
        if (id == "poly/p3/eval-at-1") {
            saw_p3_1 = true;
            CHECK(c.at("measured").get<double>() == -8.0);
        }
        if (id == "poly/p3/eval-at-2") {
            saw_p3_2 = true;
            CHECK(c.at("measured").get<double>() == 1.0);
        }
    }
    CHECK(saw_p3_1);
    CHECK(saw_p3_2);
}

TEST_CASE("verify: corrupted coefficient fails with the check id on stderr") {
    const RunResult r = run_cli("verify --suite all --inject-fault");
    CHECK(r.exit_code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("overall") == "fail");
    CHECK(r.err.find("check-failed") != std::string::npos);
    CHECK(r.err.find("poly/p3/") != std::string::npos);
}

TEST_CASE("verify: unknown suite is a usage error") {
    const RunResult r = run_cli("verify --suite bogus");
    CHECK(r.exit_code == 2);
    CHECK(r.err.rfind("error: domain:", 0) == 0);
}

TEST_CASE("verify: --stamp adds a timestamp field") {
    const RunResult r = run_cli("verify --suite spectra --stamp");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"timestamp\"") != std::string::npos);
}

TEST_CASE("verify output without --stamp is byte-identical across runs") {
    const RunResult a = run_cli("verify --suite spectra");
    const RunResult b = run_cli("verify --suite spectra");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("table: thm2 and thm4 reproduce the classification radii") {
    const RunResult r = run_cli("table thm2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("Clifford torus") != std::string::npos);

    const RunResult r3 = run_cli("table thm3 --out table_thm3.json");
    REQUIRE(r3.exit_code == 0);
    const auto j3 = nlohmann::json::parse(slurp("table_thm3.json"));
    std::remove("table_thm3.json");
    for (const auto& row : j3.at("rows")) {
        CHECK(std::abs(row.at("solver").get<double>() - row.at("closed_form").get<double>()) <
              1e-8);
    }

    const RunResult r4 = run_cli("table thm4 --out table_thm4.json");
    REQUIRE(r4.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp("table_thm4.json"));
    std::remove("table_thm4.json");
    bool saw_s1s3 = false;
    for (const auto& row : j.at("rows")) {
        CHECK(std::abs(row.at("solver").get<double>() - row.at("closed_form").get<double>()) <
              1e-8);
        if (row.at("label").get<std::string>().rfind("S1 x S3", 0) == 0) saw_s1s3 = true;
    }
    CHECK(saw_s1s3);

    const RunResult r5 = run_cli("table thm5-scal");
    REQUIRE(r5.exit_code == 0);
    CHECK(r5.out.find("1.200000000000000e+01") != std::string::npos); // Scal = 12

    const RunResult bad = run_cli("table thm9");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.rfind("error: domain:", 0) == 0);
}

TEST_CASE("ode: trajectory CSV honors the drift bound") {
    const RunResult r = run_cli("ode --C -0.1 --s-max 20 --step 1e-3 --out ode_traj.csv");
    REQUIRE(r.exit_code == 0);
    const std::string text = slurp("ode_traj.csv");
    const auto rows = parse_csv(text);
    std::remove("ode_traj.csv");
    REQUIRE(rows.size() == 20001);
    CHECK(text.rfind("s,h1,h1p,prime_residual,H,ctension_residual\n", 0) == 0);
    double max_res = 0.0;
    for (const auto& row : rows) max_res = std::max(max_res, row[3]);
    CHECK(max_res < 1e-8);
}

TEST_CASE("ode: out-of-range constant is a usage error") {
    const RunResult r = run_cli("ode --C -0.3");
    CHECK(r.exit_code == 2);
    CHECK(r.err.rfind("error: domain:", 0) == 0);
}

TEST_CASE("ode: near-degenerate constant stays nearly circular") {
    const RunResult r = run_cli("ode --C -0.24999 --s-max 10 --step 1e-3");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    double lo = 1.0, hi = 0.0;
    for (const auto& row : rows) {
        lo = std::min(lo, row[1]);
        hi = std::max(hi, row[1]);
    }
    CHECK(hi - lo < 1e-2);
}

TEST_CASE("config file overrides defaults but flags win") {
    {
        std::ofstream cfg("cli_test.cfg");
        cfg << "# scan settings\nsamples=50\n";
    }
    const RunResult r = run_cli("--config cli_test.cfg scan --degree 1 --m1 2");
    REQUIRE(r.exit_code == 0);
    CHECK(parse_csv(r.out).size() == 50);

    const RunResult r2 = run_cli("--config cli_test.cfg scan --degree 1 --m1 2 --samples 10");
    REQUIRE(r2.exit_code == 0);
    CHECK(parse_csv(r2.out).size() == 10);
    std::remove("cli_test.cfg");

    const RunResult bad = run_cli("--config missing.cfg scan --degree 1 --m1 2");
    CHECK(bad.exit_code == 3);
    CHECK(bad.err.rfind("error: io:", 0) == 0);
}

TEST_CASE("usage and io errors carry the right exit codes") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("scan --m1 1").exit_code == 2);                    // missing --degree
    CHECK(run_cli("scan --degree 5 --m1 1").exit_code == 2);        // bad degree
    const RunResult io = run_cli("scan --degree 1 --m1 2 --out /nonexistent-dir/x.csv");
    CHECK(io.exit_code == 3);
    CHECK(io.err.rfind("error: io:", 0) == 0);
}

int main(int argc, char** argv) {
    std::vector<char*> rest;
    for (int i = 0; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--cli=", 0) == 0) {
            g_cli = arg.substr(6);
        } else {
            rest.push_back(argv[i]);
        }
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: cli_tests --cli=PATH [doctest args]\n");
        return 2;
    }
    doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
    return ctx.run();
}
