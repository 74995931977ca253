// Copyright 2026 The conika authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks of the installed CLI: every subcommand, the documented
// exit codes, and byte-stability of seeded JSON output. The binary path
// comes from CMake through CONIKA_CLI_PATH.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>

#include <conika/conika.hpp>

namespace fs = std::filesystem;
using conika::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("conika-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

CliResult run_cli(const std::string &args) {
    const fs::path out = work_dir() / "stdout.txt";
    const fs::path err = work_dir() / "stderr.txt";
    const std::string cmd = std::string(CONIKA_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

} // namespace

TEST_CASE("design build + certify round trip") {
    const fs::path sic2 = work_dir() / "sic2.json";
    const CliResult build = run_cli("design build --kind sic --d 2 --out " + sic2.string());
    REQUIRE(build.exit_code == 0);
    REQUIRE(fs::exists(sic2));

    const CliResult certify =
        run_cli("--output json design certify --in " + sic2.string());
    REQUIRE(certify.exit_code == 0);
    const json cert = json::parse(certify.out);
    CHECK(cert.at("k_s").get<double>() == Catch::Approx(1.0 / 3.0).margin(1e-10));
    CHECK(std::abs(cert.at("k_a").get<double>()) < 1e-10);
    CHECK(cert.at("is_projective_design").get<bool>());

    // the written file re-ingests to a bit-identical POVM
    const conika::Povm loaded = json::parse(slurp(sic2)).get<conika::Povm>();
    const conika::Povm direct = conika::sic_povm(2);
    for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(loaded.elements[i].entries() == direct.elements[i].entries());
    }

    // rebuilding writes byte-identical output
    const std::string first = slurp(sic2);
    REQUIRE(run_cli("design build --kind sic --d 2 --out " + sic2.string()).exit_code == 0);
    CHECK(slurp(sic2) == first);
}

TEST_CASE("design build: depolarized and fiducial variants") {
    const fs::path blurred = work_dir() / "mub2_t05.json";
    REQUIRE(run_cli("design build --kind mub --d 2 --depolarize 0.5 --out " +
                    blurred.string())
                .exit_code == 0);
    const CliResult cert = run_cli("--output json design certify --in " + blurred.string());
    REQUIRE(cert.exit_code == 0);
    const json j = json::parse(cert.out);
    CHECK(j.at("k_a").get<double>() == Catch::Approx(0.75 / 6.0).margin(1e-10));
    CHECK(j.at("is_conical_design").get<bool>());
    CHECK_FALSE(j.at("is_projective_design").get<bool>());

    // fiducial route
    const fs::path fid = work_dir() / "fiducial3.json";
    {
        const double r = 1.0 / std::sqrt(2.0);
        conika::StateVector f{{conika::cx{0, 0}, conika::cx{r, 0}, conika::cx{-r, 0}}};
        std::ofstream(fid) << json(f).dump(2);
    }
    const fs::path sic3 = work_dir() / "sic3_fid.json";
    REQUIRE(run_cli("design build --kind sic-fiducial --fiducial " + fid.string() +
                    " --out " + sic3.string())
                .exit_code == 0);
    const CliResult c3 = run_cli("--output json design certify --in " + sic3.string());
    REQUIRE(c3.exit_code == 0);
    CHECK(json::parse(c3.out).at("k_s").get<double>() ==
          Catch::Approx(1.0 / 6.0).margin(1e-10));

    // a fiducial that does not generate a SIC is a domain error
    const fs::path bad_fid = work_dir() / "bad_fid.json";
    {
        conika::StateVector f{{conika::cx{1, 0}, conika::cx{0, 0}}};
        std::ofstream(bad_fid) << json(f).dump(2);
    }
    const CliResult bad = run_cli("design build --kind sic-fiducial --fiducial " +
                                  bad_fid.string() + " --out " +
                                  (work_dir() / "never.json").string());
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("equiangularity") != std::string::npos);
}

TEST_CASE("concurrence subcommand prints formula and oracle") {
    const fs::path sic2 = work_dir() / "sic2_c.json";
    REQUIRE(run_cli("design build --kind sic --d 2 --out " + sic2.string()).exit_code == 0);

    const fs::path state = work_dir() / "phi_plus_d2.json";
    std::ofstream(state) << json(conika::max_entangled_bipartite(2)).dump(2);

    const CliResult r = run_cli("--output json concurrence --design " + sic2.string() +
                                " --state " + state.string());
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("concurrence_design_formula").get<double>() ==
          Catch::Approx(1.0).margin(1e-9));
    CHECK(j.at("concurrence_oracle").get<double>() == Catch::Approx(1.0).margin(1e-9));
    CHECK(std::abs(j.at("difference").get<double>()) <= 1e-8);

    // a non-design POVM is a domain error for this command
    const fs::path basis = work_dir() / "basis2.json";
    REQUIRE(run_cli("design build --kind basis --d 2 --out " + basis.string()).exit_code == 0);
    const CliResult bad = run_cli("concurrence --design " + basis.string() + " --state " +
                                  state.string());
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("conical") != std::string::npos);
}

TEST_CASE("invariance subcommand: tight orbit for designs, deterministic output") {
    const CliResult r = run_cli(
        "--output json --seed 9 invariance --design builtin:sic --d 2 --trials 20");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.at("norms").size() == 20);
    CHECK(j.at("spread").get<double>() <= 1e-9);

    const CliResult again = run_cli(
        "--output json --seed 9 invariance --design builtin:sic --d 2 --trials 20");
    CHECK(again.out == r.out); // byte-identical under identical inputs

    const CliResult basis = run_cli(
        "--output json --seed 9 invariance --design builtin:basis --d 2 --trials 50");
    REQUIRE(basis.exit_code == 0);
    CHECK(json::parse(basis.out).at("spread").get<double>() >= 1e-3);
}

TEST_CASE("witness report carries all twelve fields") {
    const CliResult r = run_cli(
        "--output json witness report --design builtin:sic --d 2 --restarts 8 --iters 60");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    for (const char *key :
         {"s_minus_N", "s_plus_N", "e_minus_N", "e_plus_N", "s_minus_NPT", "s_plus_NPT",
          "e_minus_NPT", "e_plus_NPT", "numeric_s_minus_N", "numeric_s_plus_N",
          "numeric_s_minus_NPT", "numeric_s_plus_NPT"}) {
        REQUIRE(j.contains(key));
    }
    CHECK(j.at("s_minus_N").get<double>() == Catch::Approx(1.0 / 6.0).margin(1e-10));
    CHECK(j.at("e_plus_NPT").get<double>() == Catch::Approx(0.5).margin(1e-10));
    CHECK(j.at("numeric_s_plus_N").get<double>() ==
          Catch::Approx(1.0 / 3.0).margin(1e-6));
}

TEST_CASE("werner scan reproduces the detection thresholds") {
    const CliResult r = run_cli(
        "--output json werner scan --d 3 --design builtin:sic --step 0.01");
    REQUIRE(r.exit_code == 0);
    const json rows = json::parse(r.out);
    REQUIRE(rows.size() == 101);

    double first_below = -1.0, first_quadratic = -1.0;
    for (const auto &row : rows) {
        if (first_below < 0.0 && row.at("below").get<bool>()) {
            first_below = row.at("p").get<double>();
        }
        if (first_quadratic < 0.0 && row.at("detected").get<bool>()) {
            first_quadratic = row.at("p").get<double>();
        }
    }
    CHECK(first_below == Catch::Approx(0.51).margin(1e-12));
    CHECK(first_quadratic == Catch::Approx(0.67).margin(1e-12));
}

TEST_CASE("text mode prints both k-value conventions with labels") {
    const CliResult r = run_cli("design certify --in builtin:sic --d 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("k_s") != std::string::npos);
    CHECK(r.out.find("k_plus  ((k_s+k_a)/2)") != std::string::npos);
    CHECK(r.out.find("k_sum   (k_s+k_a)") != std::string::npos);
    CHECK(r.out.find("is_projective_design   = true") != std::string::npos);
}

TEST_CASE("exit codes: usage errors, missing files, malformed JSON") {
    CHECK(run_cli("design certify --in x.json --frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("design build --kind sic --d 2").exit_code == 2); // --out missing
    CHECK(run_cli("--help").exit_code == 0);

    const CliResult missing = run_cli("design certify --in /nonexistent/p.json");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("/nonexistent/p.json") != std::string::npos);

    const fs::path mangled = work_dir() / "mangled.json";
    std::ofstream(mangled) << "{\"dim\": 2, \"elements\": [";
    const CliResult parse = run_cli("design certify --in " + mangled.string());
    CHECK(parse.exit_code == 1);
    // nlohmann reports the byte offset of the failure
    CHECK(parse.err.find("parse error") != std::string::npos);

    CHECK(run_cli("design certify --in builtin:mub --d 4").exit_code == 1);
}

TEST_CASE("CONIKA_TOL environment variable overrides the default, --tol wins") {
    const std::string base_cmd = "--output json design certify --in builtin:sic --d 2";

    const CliResult defaults = run_cli(base_cmd);
    REQUIRE(defaults.exit_code == 0);
    CHECK(json::parse(defaults.out).at("is_conical_design").get<bool>());

    // an impossibly tight tolerance from the environment fails even an
    // exact SIC (its residual is finite rounding noise)
    const fs::path out = work_dir() / "stdout.txt";
    const fs::path err = work_dir() / "stderr.txt";
    const std::string env_cmd = std::string("CONIKA_TOL=1e-30 ") + CONIKA_CLI_PATH +
                                " " + base_cmd + " > " + out.string() + " 2> " +
                                err.string();
    REQUIRE(std::system(env_cmd.c_str()) == 0);
    CHECK_FALSE(json::parse(slurp(out)).at("is_conical_design").get<bool>());

    // an explicit --tol flag beats the environment
    const std::string flag_cmd = std::string("CONIKA_TOL=1e-30 ") + CONIKA_CLI_PATH +
                                 " --tol 1e-9 " + base_cmd + " > " + out.string() +
                                 " 2> " + err.string();
    REQUIRE(std::system(flag_cmd.c_str()) == 0);
    CHECK(json::parse(slurp(out)).at("is_conical_design").get<bool>());
}
