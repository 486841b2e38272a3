#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "newtonforge/cli.hpp"

using nlohmann::ordered_json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("newtonforge");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = newtonforge::cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// guards an env var and restores the previous state on scope exit
struct EnvGuard {
    std::string name;
    std::string saved;
    bool had = false;
    EnvGuard(const std::string& n, const char* value) : name(n) {
        if (const char* old = std::getenv(n.c_str())) {
            saved = old;
            had = true;
        }
        if (value)
            setenv(n.c_str(), value, 1);
        else
            unsetenv(n.c_str());
    }
    ~EnvGuard() {
        if (had)
            setenv(name.c_str(), saved.c_str(), 1);
        else
            unsetenv(name.c_str());
    }
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("cli diff emits the exact difference as schema json") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto r = run_cli({"diff", "--f", "1/(z+1)", "--kind", "forward", "--z", "0", "--h", "1",
                      "--n", "3"});
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["value"] == "-1/4");
    CHECK(j["exact"] == true);
    CHECK_FALSE(j.contains("precision_bits"));

    auto central = run_cli({"diff", "--f", "z^2", "--kind", "central", "--z", "0", "--h", "1",
                            "--n", "2"});
    CHECK(central.code == 0);
    CHECK(ordered_json::parse(central.out)["value"] == "2");
}

TEST_CASE("cli sum matches the closed-form example") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto r = run_cli({"sum", "--f", "1/(z+1)", "--y", "0", "--h", "1", "--n", "3"});
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["value"] == "15/4");
    CHECK(j["exact"] == true);
}

TEST_CASE("cli newton reports value and convergence diagnostics") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto r = run_cli({"newton", "--f", "1/(z+1)", "--z0", "1", "--eval", "2", "--tol", "1e-8"});
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["value"] == "1/3");
    CHECK(j["exact"] == true);
    CHECK(j["diagnostics"]["converged"] == true);
    CHECK(j["diagnostics"]["terms_used"].get<unsigned>() >= 1);
}

TEST_CASE("cli json output round-trips byte-identically") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    const std::vector<std::vector<std::string>> invocations = {
        {"diff", "--f", "1/(z+1)", "--z", "0", "--h", "1", "--n", "3"},
        {"sum", "--f", "1/(z+1)", "--y", "0", "--h", "1", "--n", "5"},
        {"newton", "--f", "1/(z+1)", "--z0", "1", "--eval", "4"},
        {"table", "--f", "1/(z+1)", "--z", "0", "--h", "1", "--n", "6", "--format", "json"},
        {"region", "--f", "1/(z+1)", "--z", "2"},
        {"diff", "--f", "gaussian", "--z", "0", "--h", "1", "--n", "2"},
    };
    for (const auto& args : invocations) {
        auto r = run_cli(args);
        REQUIRE(r.code == 0);
        ordered_json parsed = ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("cli table emits csv with the pinned header") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto r = run_cli({"table", "--f", "1/(z+1)", "--z", "0", "--h", "1", "--n", "4"});
    CHECK(r.code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "n,value,normalized");
    CHECK(lines[1].rfind("0,1,", 0) == 0);
    CHECK(lines[2].rfind("1,-1/2,", 0) == 0);
    CHECK(lines[4].rfind("3,-1/4,", 0) == 0);

    auto js = run_cli({"table", "--f", "1/(z+1)", "--z", "0", "--h", "1", "--n", "4", "--format",
                       "json"});
    ordered_json j = ordered_json::parse(js.out);
    REQUIRE(j["rows"].size() == 5);
    CHECK(j["rows"][3]["value"] == "-1/4");
    CHECK(j["rows"][3]["n"] == 3);
}

TEST_CASE("cli euler columns depend on the reference") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto bare = run_cli({"euler", "--f", "1/(z+1)", "--n", "4"});
    CHECK(bare.code == 0);
    auto lines = split_lines(bare.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "n,value,normalized");
    CHECK(lines[1] == "0,1/2,");  // no reference, no error column
    CHECK(lines[3].rfind("2,2/3,", 0) == 0);

    auto with_ref = run_cli({"euler", "--f", "1/(z+1)", "--n", "4", "--reference",
                             "0.693147180559945", "--format", "json"});
    CHECK(with_ref.code == 0);
    ordered_json j = ordered_json::parse(with_ref.out);
    REQUIRE(j["rows"].size() == 5);
    CHECK(j["rows"][0]["value"] == "1/2");
    CHECK(j["rows"][0]["normalized"].get<std::string>().size() > 0);
    CHECK(j.contains("rate_ratio"));

    auto no_ref_json = run_cli({"euler", "--f", "1/(z+1)", "--n", "4", "--format", "json"});
    CHECK_FALSE(ordered_json::parse(no_ref_json.out).contains("rate_ratio"));
}

TEST_CASE("cli oracle runs each integral route") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto lap = run_cli({"oracle", "--f", "1/(z+1)", "--kind", "laplace", "--z", "1", "--h", "1",
                        "--n", "3"});
    CHECK(lap.code == 0);
    ordered_json j = ordered_json::parse(lap.out);
    CHECK(j["exact"] == false);
    CHECK(j["precision_bits"] == 192);
    CHECK(j["diagnostics"].contains("est_error"));
    CHECK(j["diagnostics"]["evaluations"].get<long>() > 0);
    // direct value is -1/20; the serialized decimal leads with -5.0e-02
    CHECK(j["value"].get<std::string>().rfind("-5.0", 0) == 0);

    auto fou = run_cli({"oracle", "--f", "two_sided_exp", "--kind", "fourier-forward", "--y", "0",
                        "--h", "1", "--n", "1", "--prec", "96"});
    CHECK(fou.code == 0);
    CHECK(ordered_json::parse(fou.out)["precision_bits"] == 96);

    auto both_points = run_cli({"oracle", "--f", "1/(z+1)", "--kind", "laplace", "--z", "1",
                                "--y", "1", "--h", "1", "--n", "1"});
    CHECK(both_points.code == 2);
    auto no_point = run_cli({"oracle", "--f", "1/(z+1)", "--kind", "laplace", "--h", "1",
                             "--n", "1"});
    CHECK(no_point.code == 2);
    auto no_signal = run_cli({"oracle", "--f", "bessel_recip_sqrt", "--kind", "laplace", "--z",
                              "1", "--h", "1", "--n", "1"});
    CHECK(no_signal.code == 1);
}

TEST_CASE("cli region classifies against the abscissa") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto inside = run_cli({"region", "--f", "1/((z-2)*(z+3))", "--z", "5/2"});
    CHECK(inside.code == 0);
    ordered_json j = ordered_json::parse(inside.out);
    CHECK(j["value"] == "absolute");
    CHECK(j["diagnostics"]["abscissa"] == "2");

    auto boundary = run_cli({"region", "--f", "1/((z-2)*(z+3))", "--z", "2"});
    CHECK(boundary.code == 0);
    CHECK(ordered_json::parse(boundary.out)["value"] == "conditional_unknown");

    auto no_signal = run_cli({"region", "--f", "bessel_recip_sqrt", "--z", "1"});
    CHECK(no_signal.code == 1);
}

TEST_CASE("cli bessel streams the counterexample sequence") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto r = run_cli({"bessel", "--n", "8"});
    CHECK(r.code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == "n,value,normalized");
    CHECK(lines[1].rfind("0,1", 0) == 0);  // a_0 = 1/sqrt(1)
}

TEST_CASE("cli usage errors exit 2 and echo the grammar") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto unknown_flag = run_cli({"diff", "--f", "1/(z+1)", "--z", "0", "--h", "1", "--n", "3",
                                 "--frobnicate", "7"});
    CHECK(unknown_flag.code == 2);
    CHECK(unknown_flag.err.find("--frobnicate") != std::string::npos);

    auto no_subcommand = run_cli({});
    CHECK(no_subcommand.code == 2);

    auto missing_required = run_cli({"diff", "--z", "0"});
    CHECK(missing_required.code == 2);
    CHECK(missing_required.err.find("--f") != std::string::npos);  // grammar echoed

    auto bad_kind = run_cli({"diff", "--f", "1", "--kind", "sideways", "--z", "0", "--h", "1",
                             "--n", "1"});
    CHECK(bad_kind.code == 2);

    auto bad_subcommand = run_cli({"differentiate"});
    CHECK(bad_subcommand.code == 2);

    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("diff") != std::string::npos);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("cli domain and math-input errors exit 1") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto bad_expr = run_cli({"diff", "--f", "1/(z+", "--z", "0", "--h", "1", "--n", "1"});
    CHECK(bad_expr.code == 1);
    CHECK(bad_expr.err.find("error:") != std::string::npos);

    auto pole = run_cli({"diff", "--f", "1/(z+1)", "--z", "-1", "--h", "1", "--n", "1"});
    CHECK(pole.code == 1);
    CHECK(pole.err.find("pole") != std::string::npos);

    auto region = run_cli({"newton", "--f", "1/(z+1)", "--z0", "-2", "--eval", "3"});
    CHECK(region.code == 1);

    auto bad_number = run_cli({"diff", "--f", "1/(z+1)", "--z", "t.q", "--h", "1", "--n", "1"});
    CHECK(bad_number.code == 1);

    auto zero_den = run_cli({"diff", "--f", "1/(z+1)", "--z", "1/0", "--h", "1", "--n", "1"});
    CHECK(zero_den.code == 1);
}

TEST_CASE("cli precision: flag wins over environment over default") {
    {
        EnvGuard env("NEWTONFORGE_PRECISION", "128");
        auto from_env = run_cli({"diff", "--f", "gaussian", "--z", "0", "--h", "1", "--n", "2"});
        CHECK(from_env.code == 0);
        CHECK(ordered_json::parse(from_env.out)["precision_bits"] == 128);

        auto from_flag = run_cli({"diff", "--f", "gaussian", "--z", "0", "--h", "1", "--n", "2",
                                  "--precision", "320"});
        CHECK(from_flag.code == 0);
        CHECK(ordered_json::parse(from_flag.out)["precision_bits"] == 320);
    }
    {
        EnvGuard env("NEWTONFORGE_PRECISION", "banana");
        auto bad_env = run_cli({"diff", "--f", "gaussian", "--z", "0", "--h", "1", "--n", "2"});
        CHECK(bad_env.code == 2);
    }
    {
        EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
        auto dflt = run_cli({"diff", "--f", "gaussian", "--z", "0", "--h", "1", "--n", "2"});
        CHECK(dflt.code == 0);
        // automatic policy at order 2: 64-bit floor
        CHECK(ordered_json::parse(dflt.out)["precision_bits"] == 66);
    }
}

TEST_CASE("cli parses rational, decimal, exponent, and complex values") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto complex_z = run_cli({"diff", "--f", "1/(z+1)", "--z", "1+i", "--h", "1", "--n", "0"});
    CHECK(complex_z.code == 0);
    // 1/(2+i) = (2-i)/5
    CHECK(ordered_json::parse(complex_z.out)["value"] == "2/5-1/5i");

    auto decimal_h = run_cli({"sum", "--f", "1/(z+1)", "--y", "0", "--h", "0.5", "--n", "2"});
    CHECK(decimal_h.code == 0);
    // nodes 0, 1/2, 1: 1 + 2*(2/3) + 1/2 = 17/6, exact despite the decimal flag
    CHECK(ordered_json::parse(decimal_h.out)["value"] == "17/6");

    auto exponent_tol = run_cli({"newton", "--f", "1/(z+1)", "--z0", "1", "--eval", "4", "--tol",
                                 "1e-6"});
    CHECK(exponent_tol.code == 0);
    CHECK(ordered_json::parse(exponent_tol.out)["diagnostics"]["converged"] == true);

    auto negative_im = run_cli({"diff", "--f", "z^2", "--z", "1-2i", "--h", "1", "--n", "0"});
    CHECK(negative_im.code == 0);
    // (1-2i)^2 = -3-4i
    CHECK(ordered_json::parse(negative_im.out)["value"] == "-3-4i");
}

TEST_CASE("cli verify runs single criteria and propagates failure") {
    EnvGuard env("NEWTONFORGE_PRECISION", nullptr);
    auto pass = run_cli({"verify", "--criterion", "1"});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("CRITERION 1 PASS") != std::string::npos);
    CHECK(pass.out.find("acceptance: 1/1 criteria passed") != std::string::npos);

    auto fail = run_cli({"verify", "--criterion", "5"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("CRITERION 5 FAIL") != std::string::npos);

    auto out_of_range = run_cli({"verify", "--criterion", "11"});
    CHECK(out_of_range.code == 2);
}
