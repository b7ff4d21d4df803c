#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mayachar/report.hpp"
#include "mayachar/verify.hpp"

namespace mayachar {

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline Partition ones(long n) {
    std::vector<int> v(static_cast<std::size_t>(n), 1);
    return Partition(v);
}

/// Accepts both "4,2,2" and the maya text form "[3,0,-1 | 4]".
inline Partition parse_label(const std::string& text) {
    if (text.find('[') != std::string::npos) return to_partition(parse_maya(text));
    return parse_partition(text);
}

inline std::string run_char(const std::string& group, const std::string& lambda_text,
                            const std::string& mu_text, const std::string& kappa_text,
                            const std::string& nu_text, bool walled, int n_opt) {
    Partition lambda = parse_label(lambda_text);
    Partition mu = parse_partition(mu_text);
    if (walled || group == "walled") {
        Partition kappa = parse_label(kappa_text);
        Partition nu = parse_partition(nu_text);
        WalledLabel label(static_cast<int>(mu.size()), static_cast<int>(nu.size()), lambda, kappa);
        return to_string(walled_char(label, mu, nu));
    }
    if (group == "sym") {
        if (lambda.size() != mu.size())
            throw input_error("char: |lambda| must equal |mu|");
        return character(lambda, mu).get_str();
    }
    if (group == "spin") return to_string(psi_tilde(lambda, mu));
    if (group == "brauer") {
        int n = n_opt >= 0 ? n_opt : static_cast<int>(mu.size());
        return to_string(brauer_char(BrauerLabel(n, lambda), mu));
    }
    throw input_error("char: unknown group " + group);
}

inline SweepResult run_verify(const std::string& theorem, int max_size) {
    if (theorem == "main") return verify_main(max_size);
    if (theorem == "multim") return verify_multim(max_size);
    if (theorem == "degree") return verify_degree(max_size);
    if (theorem == "bernpm") return verify_bernpm(max_size);
    if (theorem == "projthm") return verify_projthm(max_size);
    if (theorem == "corollary") return verify_corollary(max_size);
    if (theorem == "brauer") return verify_brauer(max_size, max_size);
    if (theorem == "walled") return verify_walled(max_size);
    throw input_error("verify: unknown theorem " + theorem);
}

} // namespace detail

/// Runs one CLI invocation. Exit codes: 0 ok, 1 counterexample, 2 usage error.
inline RunResult run_command(std::vector<std::string> args) {
    RunResult result;
    std::ostringstream out;

    CLI::App app{"Exact character calculus on maya diagrams"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    // char-table
    auto* table = app.add_subcommand("char-table", "Print a character table");
    std::string tbl_group = "sym";
    int tbl_n = -1, tbl_r = -1, tbl_s = -1;
    std::string tbl_format = "text";
    table->add_option("--group", tbl_group, "sym|spin|brauer|walled")
        ->check(CLI::IsMember({"sym", "spin", "brauer", "walled"}));
    table->add_option("--n", tbl_n, "size of the algebra");
    table->add_option("--r", tbl_r, "walled only: left size");
    table->add_option("--s", tbl_s, "walled only: right size");
    table->add_option("--format", tbl_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // char
    auto* chr = app.add_subcommand("char", "Evaluate one character");
    std::string chr_group = "sym", chr_lambda, chr_mu, chr_kappa, chr_nu;
    int chr_n = -1;
    chr->add_option("--group", chr_group, "sym|spin|brauer|walled")
        ->check(CLI::IsMember({"sym", "spin", "brauer", "walled"}));
    chr->add_option("--lambda", chr_lambda, "row label")->required();
    chr->add_option("--mu", chr_mu, "cycle type")->required();
    auto* kappa_opt = chr->add_option("--kappa", chr_kappa, "walled: second row label");
    auto* nu_opt = chr->add_option("--nu", chr_nu, "walled: second cycle type");
    chr->add_option("--n", chr_n, "brauer: algebra size (default |mu|)");

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "Apply phi_k^(m) to a partition");
    int phi_m = 0, phi_k = 0;
    std::string phi_lambda;
    bool phi_as_maya = false;
    phi_cmd->add_option("--m", phi_m, "modulus")->required();
    phi_cmd->add_option("--k", phi_k, "index")->required();
    phi_cmd->add_option("--lambda", phi_lambda, "partition or maya text")->required();
    phi_cmd->add_flag("--maya", phi_as_maya, "print terms as maya diagrams");

    // verify
    auto* ver = app.add_subcommand("verify", "Sweep a theorem over all small cases");
    std::string ver_theorem;
    int ver_max = 0;
    ver->add_option("--theorem", ver_theorem,
                    "main|multim|degree|bernpm|projthm|corollary|brauer|walled")
        ->required()
        ->check(CLI::IsMember(
            {"main", "multim", "degree", "bernpm", "projthm", "corollary", "brauer", "walled"}));
    ver->add_option("--max-size", ver_max, "size bound for the sweep")->required();

    // degrees
    auto* deg = app.add_subcommand("degrees", "Degrees of the S_n irreducibles");
    int deg_n = -1;
    deg->add_option("--n", deg_n, "symmetric group size")->required();

    try {
        std::reverse(args.begin(), args.end()); // CLI11 takes args reversed
        app.parse(std::move(args));

        if (*table) {
            TableReport report;
            if (tbl_group == "walled") {
                if (tbl_r < 0 || tbl_s < 0)
                    throw input_error("char-table --group walled needs --r and --s");
                report = walled_table(tbl_r, tbl_s);
            } else {
                if (tbl_n < 0) throw input_error("char-table needs --n");
                if (tbl_group == "sym") report = sym_table(tbl_n);
                else if (tbl_group == "spin") report = spin_table(tbl_n);
                else report = brauer_table(tbl_n);
            }
            out << format_table(report, tbl_format);
        } else if (*chr) {
            bool walled = kappa_opt->count() > 0 || nu_opt->count() > 0;
            out << detail::run_char(chr_group, chr_lambda, chr_mu, chr_kappa, chr_nu, walled,
                                    chr_n)
                << '\n';
        } else if (*phi_cmd) {
            Partition lambda = detail::parse_label(phi_lambda);
            FockVector image = phi(phi_m, phi_k, to_maya(lambda));
            out << (phi_as_maya ? to_maya_string(image) : to_string(image)) << '\n';
        } else if (*ver) {
            SweepResult r = detail::run_verify(ver_theorem, ver_max);
            if (r.ok) {
                out << "ok: " << ver_theorem << " holds on " << r.cases << " cases (max size "
                    << ver_max << ")\n";
            } else {
                out << "counterexample: " << r.counterexample << '\n';
                result.exit_code = 1;
            }
        } else if (*deg) {
            if (deg_n < 0) throw input_error("degrees needs --n >= 0");
            std::string line;
            Partition ones_cls = detail::ones(deg_n);
            for (const auto& lam : partitions_of(deg_n)) {
                if (!line.empty()) line += ',';
                line += character(lam, ones_cls).get_str();
            }
            out << line << '\n';
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
    } catch (const CLI::ParseError& e) {
        result.err = e.what();
        result.exit_code = 2;
    } catch (const input_error& e) {
        result.err = e.what();
        result.exit_code = 2;
    }

    result.out = out.str();
    return result;
}

} // namespace mayachar
