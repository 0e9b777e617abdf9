#pragma once

#include "cohchan/channel.hpp"
#include "cohchan/coherence.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cohchan {

enum class Engine { BruteForce, ClosedForm, Both };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Engine engine);
std::optional<Engine> parse_engine(std::string_view name);

struct InputSpec {
    enum class Kind { MaximallyCoherent, RandomSeeded };
    Kind kind = Kind::MaximallyCoherent;
    std::uint64_t seed = 0;
};

struct SweepConfig {
    std::vector<ChannelKind> channels;
    std::vector<double> p_grid;
    std::vector<double> mu_grid;
    std::vector<int> n_list;
    InputSpec input;
    Engine engine = Engine::BruteForce;
    std::string out;                       // empty = standard output
    OutputFormat format = OutputFormat::Csv;
};

/// Parses and validates a JSON config document; throws ArgumentError on
/// malformed or out-of-domain fields.
SweepConfig parse_sweep_config(const std::string& json_text);

/// One grid point. n_qubits = 0 marks an N -> infinity asymptote row.
/// Rows with a nonempty `error` carry engine = "error" and no values.
struct SweepRow {
    ChannelKind kind = ChannelKind::PhaseFlip;
    int n_qubits = 0;
    double p = 0.0;
    double mu = 0.0;
    std::optional<double> c_l1_norm;
    std::optional<double> c_re_norm;
    std::optional<double> uqc;
    std::optional<double> mutual_info;
    std::string engine;
    std::optional<double> abs_deviation;   // engine "both" only
    std::string error;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

/// Seeded Gram construction M M^dagger / tr(M M^dagger) with a pinned
/// generator, so identical seeds reproduce identical states.
ComplexMatrix random_density_matrix(int n_qubits, std::uint64_t seed);

/// Runs the grid; rows come back sorted by (kind, N, p, mu).
SweepResult run_sweep(const SweepConfig& config);

/// Datasets behind the three figure families:
///   1 - normalized l1 vs p, panels a..d = mu in {0, 0.4, 0.8, 1},
///       N = 2..7 brute force, plus N = 100 (panel a) and the asymptote
///       (panel d) from closed forms;
///   2 - same grid for the normalized relative entropy of coherence;
///   3 - 101x101 (p, mu) surface of the asymptotic relative entropy.
SweepResult reproduce_figure(int figure_id, std::optional<char> panel = std::nullopt);

struct VerificationCheck {
    std::string name;
    bool passed = false;
    double worst_deviation = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool all_passed() const;
};

/// Cross-checks closed forms, the fast phase-flip path, channel reductions
/// and the correlation identities up to n_max qubits (1 <= n_max <= 7).
VerificationReport verify(int n_max);

void write_output(const SweepResult& result, OutputFormat format, std::ostream& os);

/// Writes to `path`, or to standard output when path is empty or "-".
void write_output(const SweepResult& result, OutputFormat format, const std::string& path);

SweepResult read_csv(std::istream& is);
SweepResult read_json(std::istream& is);

}  // namespace cohchan
