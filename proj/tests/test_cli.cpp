#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "etabridge/schema_check.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path()
{
    const char* p = std::getenv("ETABRIDGE_CLI");
    REQUIRE_MESSAGE(p != nullptr, "set ETABRIDGE_CLI to the CLI binary path");
    return p;
}

std::string schema_dir()
{
    const char* p = std::getenv("ETABRIDGE_SCHEMA_DIR");
    REQUIRE_MESSAGE(p != nullptr, "set ETABRIDGE_SCHEMA_DIR to the schema directory");
    return p;
}

RunResult run_cli(const std::string& args)
{
    RunResult res;
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

nlohmann::json load_schema(const std::string& name)
{
    std::ifstream in(schema_dir() + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing schema file ", name);
    nlohmann::json j;
    in >> j;
    return j;
}

void check_schema(const std::string& schema_name, const std::string& payload)
{
    nlohmann::json value = nlohmann::json::parse(payload);
    auto res = etabridge::schema::validate(load_schema(schema_name), value);
    for (const auto& e : res.errors) MESSAGE(e);
    CHECK(res.ok);
}

}  // namespace

TEST_CASE("series command: output, schema, determinism")
{
    RunResult a = run_cli("--order 24 --seed 7 series eta");
    CHECK(a.exit_code == 0);
    check_schema("series.schema.json", a.out);

    RunResult b = run_cli("--order 24 --seed 7 series eta");
    CHECK(a.out == b.out);  // byte identical

    nlohmann::json j = nlohmann::json::parse(a.out);
    CHECK(j["form"] == "eta");
    CHECK(j["series"]["lead24"] == 1);
    CHECK(j["series"]["terms"][0]["coeff"] == "1");

    // u carries the 2^{1/3}/24 prefactor
    RunResult u = run_cli("--order 12 series u");
    CHECK(u.exit_code == 0);
    nlohmann::json ju = nlohmann::json::parse(u.out);
    CHECK(ju["scalar"]["rational"] == "1/24");
    CHECK(ju["scalar"]["cbrt2_pow"] == 1);
    CHECK(ju["series"]["lead24"] == -8);
}

TEST_CASE("verify exact: pass, fault injection, determinism")
{
    RunResult ok = run_cli("--order 24 verify --suite exact");
    CHECK(ok.exit_code == 0);
    check_schema("verify-exact.schema.json", ok.out);
    nlohmann::json j = nlohmann::json::parse(ok.out);
    CHECK(j["pass"] == true);
    CHECK(j["identities"].size() == 6);

    RunResult again = run_cli("--order 24 verify --suite exact");
    CHECK(ok.out == again.out);

    RunResult bad = run_cli("--order 24 verify --suite exact --inject-fault");
    CHECK(bad.exit_code == 1);
    nlohmann::json jbad = nlohmann::json::parse(bad.out);
    CHECK(jbad["pass"] == false);
    bool found = false;
    for (const auto& item : jbad["identities"]) {
        if (item["identity"] == "e8-sum") {
            CHECK(item["pass"] == false);
            CHECK(item["first_mismatch"]["exp24"] == 120);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("verify numeric: pass, schema, determinism")
{
    RunResult r = run_cli("--order 48 --seed 11 verify --suite numeric");
    CHECK(r.exit_code == 0);
    check_schema("verify-numeric.schema.json", r.out);
    RunResult r2 = run_cli("--order 48 --seed 11 verify --suite numeric");
    CHECK(r.out == r2.out);
}

TEST_CASE("decompose command")
{
    RunResult r = run_cli("--box 16 decompose --style II");
    CHECK(r.exit_code == 0);
    check_schema("decompose.schema.json", r.out);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["classes"].size() == 8);
    CHECK(j["classes"][0]["halfpoint"][0] == -2);
}

TEST_CASE("cosets command")
{
    RunResult r = run_cli("cosets --group gamma-prime");
    CHECK(r.exit_code == 0);
    check_schema("cosets.schema.json", r.out);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["genus"] == 1);
    CHECK(j["cusp_widths"] == nlohmann::json::array({6}));
    CHECK(j["millington_mu"] == "(0 3)(1 4)(2 5)");
    CHECK(j["millington_mu_sigma"] == "(0 1 2 3 4 5)");

    RunResult g2 = run_cli("cosets --group gamma2");
    nlohmann::json jg2 = nlohmann::json::parse(g2.out);
    CHECK(jg2["cusp_widths"] == nlohmann::json::array({2, 2, 2}));
    CHECK(jg2["millington_mu_sigma"] == "(0 1)(2 3)(4 5)");
}

TEST_CASE("e8 command")
{
    RunResult r = run_cli("e8 --max-m 2");
    CHECK(r.exit_code == 0);
    check_schema("e8.schema.json", r.out);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["r"] == nlohmann::json::array({1, 240, 2160}));
}

TEST_CASE("scan-lame emits CSV")
{
    RunResult r = run_cli("scan-lame --nx 2 --ny 2 --re-min -0.01 --re-max 0.01 "
                          "--im-min -0.01 --im-max 0.01");
    CHECK(r.exit_code == 0);
    // header + 4 rows
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 5);
    CHECK(r.out.rfind("b_re,b_im,", 0) == 0);

    RunResult r2 = run_cli("scan-lame --nx 2 --ny 2 --re-min -0.01 --re-max 0.01 "
                           "--im-min -0.01 --im-max 0.01");
    CHECK(r.out == r2.out);
}

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run_cli("series no-such-form").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("cosets --group nope").exit_code == 2);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    CHECK(run_cli("e8 --max-m 1000").exit_code == 2);
}
