/*
   Copyright 2026 The skewcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// skewcodes: command-line front end.
//
//   skewcodes ring-info        [context flags]
//   skewcodes divisors         [context flags] [--residue-only]
//   skewcodes ideals           [context flags] [--format text|json|dot]
//   skewcodes dual             [context flags] --gen POLY... [--euclidean] [--hermitian] [--verify]
//   skewcodes selfdual-search  [context flags]
//   skewcodes verify-paper     [--beta B] [--format text|json]
//
// Context flags: --p --m --modulus --theta-exp --beta --n --lambda --max-bruteforce --format --config.
// Exit status: 0 on success, 1 on failed checks or oracle mismatch, 2 on usage or context errors.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewcodes/cli.hpp"

namespace {

using skewcodes::cli::RunConfig;

struct ContextFlags {
    RunConfig cli;
    std::string config_path;
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> overrides;

    void attach(CLI::App* app) {
        auto add = [&](CLI::Option* opt, std::function<void(RunConfig&)> apply) { overrides.emplace_back(opt, apply); };
        add(app->add_option("--p", cli.p, "field characteristic (default 3)"), [this](RunConfig& c) { c.p = cli.p; });
        add(app->add_option("--m", cli.m, "extension degree (default 1)"), [this](RunConfig& c) { c.m = cli.m; });
        add(app->add_option("--modulus", modulus_, "field modulus coefficients c0 ... cm, ascending"),
            [this](RunConfig& c) { c.modulus = modulus_; });
        add(app->add_option("--theta-exp", cli.theta_exp, "Frobenius exponent s of Theta (default 0)"),
            [this](RunConfig& c) { c.theta_exp = cli.theta_exp; });
        add(app->add_option("--beta", beta_, "u-multiplier beta of Theta (default 2 over F_3, else 1)"),
            [this](RunConfig& c) { c.beta = beta_; });
        add(app->add_option("--n", cli.n, "code length (default 2)"), [this](RunConfig& c) { c.n = cli.n; });
        add(app->add_option("--lambda", cli.lambda, "constacyclic constant (default 1)"),
            [this](RunConfig& c) { c.lambda = cli.lambda; });
        add(app->add_option("--max-bruteforce", cli.max_bruteforce, "bound on exhaustive vector counts (default 1e6)"),
            [this](RunConfig& c) { c.max_bruteforce = cli.max_bruteforce; });
        add(app->add_option("--format", cli.format, "output format: text, json or dot"),
            [this](RunConfig& c) { c.format = cli.format; });
        app->add_option("--config", config_path, "JSON config file; command-line flags take precedence");
    }

    RunConfig resolve() const {
        if (config_path.empty()) {
            RunConfig c = cli;
            if (!modulus_.empty()) c.modulus = modulus_;
            if (!beta_.empty()) c.beta = beta_;
            return c;
        }
        RunConfig c = skewcodes::cli::load_config(config_path);
        for (const auto& [opt, apply] : overrides)
            if (opt->count() > 0) apply(c);
        return c;
    }

   private:
    std::vector<int> modulus_;
    std::string beta_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew constacyclic codes over F_{p^m} + u F_{p^m}"};
    app.require_subcommand(1);

    ContextFlags info_flags, div_flags, ideal_flags, dual_flags, sd_flags;

    auto* ring_info = app.add_subcommand("ring-info", "describe the ring, Theta and the quotient");
    info_flags.attach(ring_info);

    auto* divisors = app.add_subcommand("divisors", "list monic right divisors of x^n - lambda");
    div_flags.attach(divisors);
    bool residue_only = false;
    divisors->add_flag("--residue-only", residue_only, "divisors of x^n - lambda-bar over F_{p^m} only");

    auto* ideals = app.add_subcommand("ideals", "enumerate all left ideals and their inclusion lattice");
    ideal_flags.attach(ideals);

    auto* dual = app.add_subcommand("dual", "dual code of the left ideal generated by --gen");
    dual_flags.attach(dual);
    std::vector<std::string> gens;
    bool euclidean = false, hermitian = false, verify = false;
    dual->add_option("--gen", gens, "generator polynomial (repeatable)")->required();
    dual->add_flag("--euclidean", euclidean, "Euclidean dual (default)");
    dual->add_flag("--hermitian", hermitian, "Hermitian dual (needs ord(Theta) = 2)");
    dual->add_flag("--verify", verify, "compare against the brute-force orthogonal complement");

    auto* selfdual = app.add_subcommand("selfdual-search", "list all self-dual left ideals");
    sd_flags.attach(selfdual);

    auto* verify_paper = app.add_subcommand("verify-paper", "run the pinned reproduction checks");
    std::string vp_beta, vp_format = "text";
    bool vp_json = false;
    verify_paper->add_option("--beta", vp_beta, "override beta of the skew context (fault injection)");
    verify_paper->add_option("--format", vp_format, "text or json");
    verify_paper->add_flag("--json", vp_json, "same as --format json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ring_info) return skewcodes::cli::cmd_ring_info(info_flags.resolve(), std::cout);
        if (*divisors) return skewcodes::cli::cmd_divisors(div_flags.resolve(), residue_only, std::cout);
        if (*ideals) return skewcodes::cli::cmd_ideals(ideal_flags.resolve(), std::cout);
        if (*dual) {
            std::vector<skewcodes::InnerProduct> kinds;
            if (euclidean || !hermitian) kinds.push_back(skewcodes::InnerProduct::euclidean);
            if (hermitian) kinds.push_back(skewcodes::InnerProduct::hermitian);
            return skewcodes::cli::cmd_dual(dual_flags.resolve(), gens, kinds, verify, std::cout);
        }
        if (*selfdual) return skewcodes::cli::cmd_selfdual_search(sd_flags.resolve(), std::cout);
        if (*verify_paper) {
            std::optional<std::string> beta;
            if (!vp_beta.empty()) beta = vp_beta;
            return skewcodes::cli::cmd_verify_paper(beta, vp_json ? "json" : vp_format, std::cout);
        }
    } catch (const skewcodes::ContextError& e) {
        std::cerr << "context error: " << e.what() << "\n";
        return 2;
    } catch (const skewcodes::BoundError& e) {
        std::cerr << "bound error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
