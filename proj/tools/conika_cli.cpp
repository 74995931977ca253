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
/**
 * conika command-line front door.
 *
 *   conika design build   --kind sic --d 2 --out sic2.json
 *   conika design certify --in sic2.json
 *   conika concurrence    --design sic2.json --state phi_plus_d2.json
 *   conika invariance     --design builtin:mub --d 3 --trials 50
 *   conika witness report --design builtin:sic --d 2
 *   conika werner scan    --d 3 --design builtin:sic --step 0.01
 *
 * Designs are read either from a JSON file or from the builtin catalogue
 * ("builtin:sic", "builtin:mub", "builtin:basis", "builtin:sic-depol:t=0.5",
 * "builtin:mub-depol:t=0.5"; builtins need --d).
 *
 * Exit codes: 0 success, 1 domain error (missing/malformed file,
 * inconsistent inputs), 2 usage error. CONIKA_TOL overrides the default
 * tolerance; --tol overrides both.
 */
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <conika/conika.hpp>

namespace {

using conika::json;

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    return json::parse(in); // parse errors carry the byte position
}

void write_json_file(const std::string &path, const json &j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path);
    }
    out << j.dump(2) << "\n";
}

conika::Povm load_design(const std::string &source, std::size_t d) {
    if (source.rfind("builtin:", 0) == 0) {
        if (d == 0) {
            throw std::runtime_error("builtin designs need --d");
        }
        return conika::builtin_design(source, d);
    }
    return read_json_file(source).get<conika::Povm>();
}

conika::BipartiteState load_state(const std::string &path) {
    return read_json_file(path).get<conika::BipartiteState>();
}

void print_certificate_text(const conika::DesignCertificate &c) {
    std::printf("k_s                    = %.17g\n", c.k_s);
    std::printf("k_a                    = %.17g\n", c.k_a);
    std::printf("k_plus  ((k_s+k_a)/2)  = %.17g\n", c.k_plus);
    std::printf("k_minus ((k_s-k_a)/2)  = %.17g\n", c.k_minus);
    std::printf("k_sum   (k_s+k_a)      = %.17g\n", c.k_s + c.k_a);
    std::printf("k_diff  (k_s-k_a)      = %.17g\n", c.k_s - c.k_a);
    std::printf("design_residual        = %.17g\n", c.design_residual);
    std::printf("povm_residual          = %.17g\n", c.povm_residual);
    std::printf("is_conical_design      = %s\n", c.is_conical_design ? "true" : "false");
    std::printf("is_projective_design   = %s\n", c.is_projective_design ? "true" : "false");
}

struct CommonOptions {
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::string output = "text";
    bool json_mode() const { return output == "json"; }
};

int run_design_build(const std::string &kind, std::size_t d, double depolarize_t,
                     const std::string &fiducial_path, const std::string &out_path) {
    conika::Povm p;
    if (kind == "mub") {
        p = conika::mub_full_set(d);
    } else if (kind == "sic") {
        p = conika::sic_povm(d);
    } else if (kind == "basis") {
        p = conika::basis_povm(d);
    } else if (kind == "sic-fiducial") {
        if (fiducial_path.empty()) {
            throw std::runtime_error("--kind sic-fiducial needs --fiducial <file>");
        }
        p = conika::sic_from_fiducial(
            read_json_file(fiducial_path).get<conika::StateVector>());
    } else {
        throw std::runtime_error("unknown --kind \"" + kind +
                                 "\" (expected mub, sic, basis or sic-fiducial)");
    }
    if (depolarize_t > 0.0) {
        p = conika::depolarize(p, depolarize_t);
    }
    write_json_file(out_path, json(p));
    std::printf("wrote %s (%zu elements, dim %zu, label \"%s\")\n", out_path.c_str(),
                p.size(), p.dim, p.label.c_str());
    return 0;
}

int run_design_certify(const std::string &in_source, std::size_t d,
                       const CommonOptions &common) {
    const conika::Povm p = load_design(in_source, d);
    const conika::DesignCertificate cert = conika::certify(p, common.tol);
    if (common.json_mode()) {
        std::cout << json(cert).dump(2) << "\n";
    } else {
        std::printf("design: %s (m=%zu, d=%zu)\n", p.label.c_str(), p.size(), p.dim);
        print_certificate_text(cert);
    }
    return 0;
}

int run_concurrence(const std::string &design_source, std::size_t d,
                    const std::string &state_path, const CommonOptions &common) {
    const conika::Povm p = load_design(design_source, d);
    const conika::BipartiteState state = load_state(state_path);
    const conika::DesignCertificate cert = conika::certify(p, common.tol);
    if (!cert.is_conical_design) {
        throw std::runtime_error("design \"" + p.label +
                                 "\" is not a conical 2-design (residual " +
                                 conika::detail::format_double(cert.design_residual) + ")");
    }
    const conika::ProbabilityTable table = conika::probability_vector(p, state);
    const double c_design = conika::design_concurrence(cert, table.norm, common.tol);
    const double c_oracle = conika::concurrence_oracle(state);
    if (common.json_mode()) {
        json j{{"k_s", cert.k_s},
               {"k_a", cert.k_a},
               {"pnorm", table.norm},
               {"concurrence_design_formula", c_design},
               {"concurrence_oracle", c_oracle},
               {"difference", c_design - c_oracle}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("pnorm                      = %.17g\n", table.norm);
        std::printf("concurrence (design formula) = %.17g\n", c_design);
        std::printf("concurrence (oracle)         = %.17g\n", c_oracle);
        std::printf("difference                   = %.3g\n", c_design - c_oracle);
    }
    return 0;
}

int run_invariance(const std::string &design_source, std::size_t d,
                   const std::string &state_path, std::size_t trials,
                   const CommonOptions &common) {
    const conika::Povm p = load_design(design_source, d);
    conika::BipartiteState state;
    if (state_path.empty()) {
        state = conika::random_bipartite_state(p.dim, conika::derive_seed(common.seed, 999));
    } else {
        state = load_state(state_path);
    }
    const std::vector<double> norms =
        conika::local_unitary_orbit_norms(p, state, trials, common.seed);
    const auto [lo, hi] = std::minmax_element(norms.begin(), norms.end());
    const double spread = *hi - *lo;
    if (common.json_mode()) {
        json j{{"norms", norms}, {"spread", spread}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("trials = %zu\n", trials);
        for (const double n : norms) {
            std::printf("  %.17g\n", n);
        }
        std::printf("spread (max - min) = %.5g\n", spread);
    }
    return 0;
}

int run_witness_report(const std::string &design_source, std::size_t d,
                       std::size_t restarts, std::size_t iters,
                       const CommonOptions &common) {
    const conika::Povm p = load_design(design_source, d);
    const conika::DesignCertificate cert = conika::certify(p, common.tol);
    const conika::WitnessReport rep =
        conika::witness_report(cert, p.dim, restarts, iters, common.seed);
    if (common.json_mode()) {
        std::cout << json(rep).dump(2) << "\n";
    } else {
        std::printf("design: %s\n", p.label.c_str());
        print_certificate_text(cert);
        std::printf("N    : s- = %.12g  s+ = %.12g  e- = %.12g  e+ = %.12g\n",
                    rep.s_minus_N, rep.s_plus_N, rep.e_minus_N, rep.e_plus_N);
        std::printf("N^PT : s- = %.12g  s+ = %.12g  e- = %.12g  e+ = %.12g\n",
                    rep.s_minus_NPT, rep.s_plus_NPT, rep.e_minus_NPT, rep.e_plus_NPT);
        std::printf("seesaw N    : s- = %.12g  s+ = %.12g\n", rep.numeric_s_minus_N,
                    rep.numeric_s_plus_N);
        std::printf("seesaw N^PT : s- = %.12g  s+ = %.12g\n", rep.numeric_s_minus_NPT,
                    rep.numeric_s_plus_NPT);
    }
    return 0;
}

int run_werner_scan(const std::string &design_source, std::size_t d, double step,
                    const CommonOptions &common) {
    if (!(step >= 1e-4) || step > 1.0) {
        throw std::runtime_error("--step must lie in [1e-4, 1]");
    }
    const conika::Povm p = load_design(design_source, d);
    const conika::DesignCertificate cert = conika::certify(p, common.tol);
    const conika::WitnessOperators ops = conika::witness_operators(cert, p.dim);

    const auto steps = static_cast<std::size_t>(std::llround(1.0 / step));
    json rows = json::array();
    if (!common.json_mode()) {
        std::printf("%6s  %14s  %6s  %14s  %14s  %9s\n", "p", "tr_rho_N", "below",
                    "quadratic_lhs", "quadratic_bound", "detected");
    }
    for (std::size_t i = 0; i <= steps; ++i) {
        const double pval = static_cast<double>(i) / static_cast<double>(steps);
        const conika::DensityMatrix rho = conika::werner_state(p.dim, pval);
        const double tr_n = conika::trace_product(rho.matrix, ops.n).real();
        const auto [below, above] = conika::detect_linear(rho, cert, p.dim);
        (void)above; // the Werner family never triggers the NPT-above test

        const conika::ComplexMatrix rho1 = conika::partial_trace(rho.matrix, p.dim, 2);
        const conika::ComplexMatrix rho2 = conika::partial_trace(rho.matrix, p.dim, 1);
        conika::ComplexMatrix dev = rho.matrix;
        dev -= conika::tensor_product(rho1, rho2);
        const double lhs =
            std::max(std::abs(conika::trace_product(ops.n, dev).real()),
                     std::abs(conika::trace_product(ops.n_pt, dev).real()));
        const double bound =
            cert.k_minus *
            std::sqrt(std::max(0.0, 1.0 - conika::trace_product(rho1, rho1).real()) *
                      std::max(0.0, 1.0 - conika::trace_product(rho2, rho2).real()));
        const bool quadratic = conika::detect_quadratic(rho, cert, p.dim);

        if (common.json_mode()) {
            rows.push_back(json{{"p", pval},
                                {"tr_rho_N", tr_n},
                                {"below", below},
                                {"quadratic_lhs", lhs},
                                {"quadratic_bound", bound},
                                {"detected", quadratic}});
        } else {
            std::printf("%6.2f  %14.10f  %6s  %14.10f  %14.10f  %9s\n", pval, tr_n,
                        below ? "yes" : "no", lhs, bound, quadratic ? "yes" : "no");
        }
    }
    if (common.json_mode()) {
        std::cout << rows.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"conical 2-design construction, certification, concurrence and "
                 "entanglement witnesses"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions common;
    app.add_option("--tol", common.tol, "certification tolerance")
        ->envname("CONIKA_TOL")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", common.seed, "random seed")->capture_default_str();
    app.add_option("--output", common.output, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // design build / design certify
    auto *design = app.add_subcommand("design", "build or certify POVM designs");
    design->require_subcommand(1);

    std::string build_kind;
    std::size_t build_d = 0;
    double build_depol = 0.0;
    std::string build_fiducial;
    std::string build_out;
    auto *design_build = design->add_subcommand("build", "construct a POVM and write it to a file");
    design_build->add_option("--kind", build_kind, "mub | sic | basis | sic-fiducial")
        ->required();
    design_build->add_option("--d", build_d, "Hilbert space dimension");
    design_build->add_option("--depolarize", build_depol,
                             "smear with E' = t·E + (1-t)·Tr(E)·I/d, t in (0,1]");
    design_build->add_option("--fiducial", build_fiducial,
                             "StateVector JSON file (sic-fiducial only)");
    design_build->add_option("--out", build_out, "output file")->required();

    std::string certify_in;
    std::size_t certify_d = 0;
    auto *design_certify = design->add_subcommand("certify", "certify a POVM file or builtin");
    design_certify->add_option("--in", certify_in, "POVM JSON file or builtin:<name>")
        ->required();
    design_certify->add_option("--d", certify_d, "dimension (builtins only)");

    std::string conc_design, conc_state;
    std::size_t conc_d = 0;
    auto *concurrence =
        app.add_subcommand("concurrence", "concurrence of a pure bipartite state from "
                                          "design probabilities, with oracle cross-check");
    concurrence->add_option("--design", conc_design, "POVM JSON file or builtin:<name>")
        ->required();
    concurrence->add_option("--d", conc_d, "dimension (builtins only)");
    concurrence->add_option("--state", conc_state, "BipartiteState JSON file")->required();

    std::string inv_design, inv_state;
    std::size_t inv_d = 0;
    std::size_t inv_trials = 50;
    auto *invariance = app.add_subcommand(
        "invariance", "probability-vector norms along a local unitary orbit");
    invariance->add_option("--design", inv_design, "POVM JSON file or builtin:<name>")
        ->required();
    invariance->add_option("--d", inv_d, "dimension (builtins only)");
    invariance->add_option("--state", inv_state,
                           "BipartiteState JSON file (default: seeded random state)");
    invariance->add_option("--trials", inv_trials, "number of (U,V) pairs")
        ->capture_default_str();

    auto *witness = app.add_subcommand("witness", "entanglement witness reports");
    witness->require_subcommand(1);
    std::string wit_design;
    std::size_t wit_d = 0;
    std::size_t wit_restarts = 32, wit_iters = 200;
    auto *witness_rep = witness->add_subcommand(
        "report", "analytic witness bounds plus see-saw certification");
    witness_rep->add_option("--design", wit_design, "POVM JSON file or builtin:<name>")
        ->required();
    witness_rep->add_option("--d", wit_d, "dimension (builtins only)");
    witness_rep->add_option("--restarts", wit_restarts, "see-saw restarts")
        ->capture_default_str();
    witness_rep->add_option("--iters", wit_iters, "see-saw alternations per restart")
        ->capture_default_str();

    auto *werner = app.add_subcommand("werner", "Werner state detection scans");
    werner->require_subcommand(1);
    std::string wer_design;
    std::size_t wer_d = 0;
    double wer_step = 0.01;
    auto *werner_scan = werner->add_subcommand(
        "scan", "scan p in [0,1]: linear and quadratic detection of Werner states");
    werner_scan->add_option("--d", wer_d, "Hilbert space dimension")->required();
    werner_scan->add_option("--design", wer_design, "POVM JSON file or builtin:<name>")
        ->required();
    werner_scan->add_option("--step", wer_step, "grid step")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (design_build->parsed()) {
            return run_design_build(build_kind, build_d, build_depol, build_fiducial,
                                    build_out);
        }
        if (design_certify->parsed()) {
            return run_design_certify(certify_in, certify_d, common);
        }
        if (concurrence->parsed()) {
            return run_concurrence(conc_design, conc_d, conc_state, common);
        }
        if (invariance->parsed()) {
            return run_invariance(inv_design, inv_d, inv_state, inv_trials, common);
        }
        if (witness_rep->parsed()) {
            return run_witness_report(wit_design, wit_d, wit_restarts, wit_iters, common);
        }
        if (werner_scan->parsed()) {
            return run_werner_scan(wer_design, wer_d, wer_step, common);
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
