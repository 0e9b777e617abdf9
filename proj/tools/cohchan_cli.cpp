// Command-line frontend: sweeps, figure datasets, self-verification,
// coefficient tables, and per-state coherence reports.

#include "cohchan/cohchan.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

std::string format_fixed(double value) {
    // nine decimals; flush the rounded-away negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9f", value);
    std::string text(buf);
    if (text == "-0.000000000") text = "0.000000000";
    return text;
}

int run_sweep_command(const std::string& config_path, const std::string& out_override,
                      const std::string& format_override) {
    std::ifstream ifs(config_path);
    if (!ifs) {
        std::cerr << "error: cannot open config file: " << config_path << "\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << ifs.rdbuf();
    cohchan::SweepConfig config = cohchan::parse_sweep_config(buffer.str());
    if (!out_override.empty()) config.out = out_override;
    if (!format_override.empty()) {
        if (format_override == "csv") config.format = cohchan::OutputFormat::Csv;
        else if (format_override == "json") config.format = cohchan::OutputFormat::Json;
        else throw cohchan::ArgumentError("unknown format '" + format_override + "'");
    }
    const cohchan::SweepResult result = cohchan::run_sweep(config);
    cohchan::write_output(result, config.format, config.out);
    return kExitOk;
}

int run_figure_command(int id, const std::string& panel, const std::string& out) {
    std::optional<char> panel_opt;
    if (!panel.empty()) {
        if (panel.size() != 1)
            throw cohchan::ArgumentError("panel must be one of a, b, c, d");
        panel_opt = panel[0];
    }
    const cohchan::SweepResult result = cohchan::reproduce_figure(id, panel_opt);
    cohchan::write_output(result, cohchan::OutputFormat::Csv, out);
    return kExitOk;
}

int run_verify_command(int n_max) {
    const cohchan::VerificationReport report = cohchan::verify(n_max);
    for (const auto& check : report.checks) {
        std::printf("%s %-40s worst=%.3e (%s)\n", check.passed ? "PASS" : "FAIL",
                    check.name.c_str(), check.worst_deviation, check.detail.c_str());
    }
    std::printf("%s: %zu checks, n_max=%d\n", report.all_passed() ? "OK" : "FAILED",
                report.checks.size(), n_max);
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int run_coeffs_command(const std::string& family_name, int n) {
    cohchan::CoefficientFamily family;
    if (family_name == "alpha") family = cohchan::CoefficientFamily::Alpha;
    else if (family_name == "beta") family = cohchan::CoefficientFamily::Beta;
    else if (family_name == "eta") family = cohchan::CoefficientFamily::Eta;
    else throw cohchan::ArgumentError("unknown coefficient family '" + family_name + "'");

    const cohchan::CoefficientTable table = cohchan::coefficients(family, n);
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << table.values[i];
    }
    std::cout << '\n';
    return kExitOk;
}

int run_report_command(const std::string& kind_name, double p, double mu, int n) {
    const auto kind = cohchan::parse_channel_kind(kind_name);
    if (!kind)
        throw cohchan::ArgumentError("unknown channel '" + kind_name +
                                     "' (expected phaseflip, bitflip, bitphaseflip or depolarizing)");
    const cohchan::CorrelatedChannel channel(*kind, p, mu, n);
    const cohchan::ComplexMatrix input = cohchan::maximally_coherent_state(n);
    const cohchan::ComplexMatrix output =
        *kind == cohchan::ChannelKind::PhaseFlip
            ? cohchan::apply_phase_flip_fast(input, channel)
            : cohchan::apply_channel(input, channel);
    const cohchan::CoherenceReport rep = cohchan::report(output);

    char num[40];
    std::snprintf(num, sizeof num, "%.12g", p);
    std::cout << "channel=" << cohchan::to_string(*kind) << '\n';
    std::cout << "n_qubits=" << n << '\n';
    std::cout << "p=" << num << '\n';
    std::snprintf(num, sizeof num, "%.12g", mu);
    std::cout << "mu=" << num << '\n';
    std::cout << "c_l1=" << format_fixed(rep.c_l1) << '\n';
    std::cout << "c_l1_norm=" << format_fixed(rep.c_l1_normalized) << '\n';
    std::cout << "c_re=" << format_fixed(rep.c_re) << '\n';
    std::cout << "c_re_norm=" << format_fixed(rep.c_re_normalized) << '\n';
    std::cout << "local_c_re=";
    for (std::size_t i = 0; i < rep.local_c_re.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << format_fixed(rep.local_c_re[i]);
    }
    std::cout << '\n';
    std::cout << "uqc=" << format_fixed(rep.uqc) << '\n';
    std::cout << "mutual_info=" << format_fixed(rep.mutual_information) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlated Pauli channel coherence toolkit"};
    app.require_subcommand(1);

    auto* sweep_cmd = app.add_subcommand("sweep", "Run a (channel, p, mu, N) grid from a JSON config");
    std::string config_path, sweep_out, sweep_format;
    sweep_cmd->add_option("--config", config_path, "JSON sweep configuration")->required();
    sweep_cmd->add_option("--out", sweep_out, "Output path (default: standard output)");
    sweep_cmd->add_option("--format", sweep_format, "csv or json (default: csv)")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* figure_cmd = app.add_subcommand("figure", "Emit a figure-reproduction dataset as CSV");
    int figure_id = 0;
    std::string figure_panel, figure_out;
    figure_cmd->add_option("--id", figure_id, "Figure id (1, 2 or 3)")->required();
    figure_cmd->add_option("--panel", figure_panel, "Panel a, b, c or d (figures 1 and 2)")
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
    figure_cmd->add_option("--out", figure_out, "Output path (default: standard output)");

    auto* verify_cmd = app.add_subcommand("verify", "Run the built-in cross-check suite");
    int n_max = 5;
    verify_cmd->add_option("--n-max", n_max, "Largest qubit count to check (1..7, default 5)");

    auto* coeffs_cmd = app.add_subcommand("coeffs", "Print a coefficient table");
    std::string family;
    int coeff_n = 0;
    coeffs_cmd->add_option("--family", family, "alpha, beta or eta")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta", "eta"}));
    coeffs_cmd->add_option("--n", coeff_n, "Qubit count")->required();

    auto* report_cmd =
        app.add_subcommand("report", "Coherence report of a channel output on |Psi_N>");
    std::string report_channel;
    double report_p = 0.0, report_mu = 0.0;
    int report_n = 0;
    report_cmd->add_option("--channel", report_channel, "phaseflip, bitflip, bitphaseflip, depolarizing")
        ->required();
    report_cmd->add_option("--p", report_p, "Error probability in [0, 1]")->required();
    report_cmd->add_option("--mu", report_mu, "Correlation strength in [0, 1]")->required();
    report_cmd->add_option("--n", report_n, "Qubit count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return kExitUsage;
    }

    try {
        if (sweep_cmd->parsed()) return run_sweep_command(config_path, sweep_out, sweep_format);
        if (figure_cmd->parsed()) return run_figure_command(figure_id, figure_panel, figure_out);
        if (verify_cmd->parsed()) return run_verify_command(n_max);
        if (coeffs_cmd->parsed()) return run_coeffs_command(family, coeff_n);
        if (report_cmd->parsed()) return run_report_command(report_channel, report_p, report_mu, report_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
