#include "cohchan/sweep.hpp"

#include "cohchan/closedform.hpp"
#include "cohchan/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

namespace cohchan {

namespace {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_opt(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string{};
}

bool row_less(const SweepRow& a, const SweepRow& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.n_qubits != b.n_qubits) return a.n_qubits < b.n_qubits;
    if (a.p != b.p) return a.p < b.p;
    return a.mu < b.mu;
}

void validate_config(const SweepConfig& config) {
    if (config.channels.empty()) throw ArgumentError("config: channels must be nonempty");
    if (config.p_grid.empty() || config.mu_grid.empty())
        throw ArgumentError("config: p_grid and mu_grid must be nonempty");
    if (config.n_list.empty()) throw ArgumentError("config: n_list must be nonempty");
    for (const double p : config.p_grid)
        if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("config: p value outside [0, 1]");
    for (const double mu : config.mu_grid)
        if (!(mu >= 0.0 && mu <= 1.0)) throw ArgumentError("config: mu value outside [0, 1]");
    const bool needs_state = config.engine != Engine::ClosedForm;
    const int n_cap = needs_state ? max_qubits() : 64;
    for (const int n : config.n_list) {
        if (n < 1) throw ArgumentError("config: qubit counts must be positive");
        if (n > n_cap)
            throw ArgumentError("config: N = " + std::to_string(n) + " exceeds the limit of " +
                                std::to_string(n_cap) + " for this engine");
    }
    if (config.input.kind == InputSpec::Kind::RandomSeeded && config.engine != Engine::BruteForce)
        throw ArgumentError("config: closed forms hold for the maximally coherent input only");
}

ComplexMatrix make_input(const InputSpec& input, int n_qubits) {
    if (input.kind == InputSpec::Kind::MaximallyCoherent)
        return maximally_coherent_state(n_qubits);
    const std::uint64_t mixed =
        input.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n_qubits));
    return random_density_matrix(n_qubits, mixed);
}

ComplexMatrix channel_output(const ComplexMatrix& rho0, const CorrelatedChannel& channel) {
    if (channel.kind == ChannelKind::PhaseFlip)
        return apply_phase_flip_fast(rho0, channel);
    return apply_channel(rho0, channel);
}

struct ClosedValues {
    std::optional<double> l1;
    double re = 0.0;
    double uqc = 0.0;
};

ClosedValues closed_values(ChannelKind kind, int n, double p, double mu) {
    const auto reduced = reduce_channel(kind, p);
    if (!reduced) return {1.0, 1.0, 0.0};  // frozen: the input passes undisturbed
    const double pe = *reduced;
    ClosedValues v;
    v.l1 = l1_phase_flip(n, pe, mu);
    v.re = re_phase_flip(n, pe, mu);
    if (pe > 0.0 && pe < 1.0 && mu > 0.0)
        v.uqc = static_cast<double>(n - 1) * k_factor(pe, mu) * binary_entropy(pe);
    return v;
}

using ordered_json = nlohmann::ordered_json;

ordered_json row_to_json(const SweepRow& row) {
    ordered_json j;
    j["kind"] = to_string(row.kind);
    j["N"] = row.n_qubits;
    j["p"] = row.p;
    j["mu"] = row.mu;
    auto put = [&j](const char* key, const std::optional<double>& v) {
        if (v) j[key] = *v; else j[key] = nullptr;
    };
    put("c_l1_norm", row.c_l1_norm);
    put("c_re_norm", row.c_re_norm);
    put("uqc", row.uqc);
    put("mutual_info", row.mutual_info);
    j["engine"] = row.engine;
    put("abs_deviation", row.abs_deviation);
    if (!row.error.empty()) j["error"] = row.error;
    return j;
}

}  // namespace

std::string_view to_string(Engine engine) {
    switch (engine) {
        case Engine::BruteForce: return "brute_force";
        case Engine::ClosedForm: return "closed_form";
        case Engine::Both: return "both";
    }
    throw ArgumentError("unknown engine");
}

std::optional<Engine> parse_engine(std::string_view name) {
    if (name == "brute_force") return Engine::BruteForce;
    if (name == "closed_form") return Engine::ClosedForm;
    if (name == "both") return Engine::Both;
    return std::nullopt;
}

ComplexMatrix random_density_matrix(int n_qubits, std::uint64_t seed) {
    if (n_qubits < 1 || n_qubits > max_qubits())
        throw DimensionLimitError("random_density_matrix: qubit count outside [1, " +
                                  std::to_string(max_qubits()) + "]");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    std::mt19937_64 rng(seed);
    // Box-Muller over raw 53-bit uniforms: identical draws on every platform
    auto gauss = [&rng] {
        const double u1 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        const double u2 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    };
    ComplexMatrix m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i)
            m(i, j) = Complex(gauss(), gauss());
    ComplexMatrix g = m * m.adjoint();
    g = (0.5 * (g + g.adjoint())).eval();
    return g / g.trace().real();
}

SweepConfig parse_sweep_config(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw ArgumentError("config: expected a JSON object");

    SweepConfig config;
    try {
        for (const auto& name : doc.at("channels")) {
            const auto text = name.get<std::string>();
            const auto kind = parse_channel_kind(text);
            if (!kind) throw ArgumentError("config: unknown channel kind '" + text + "'");
            config.channels.push_back(*kind);
        }
        config.p_grid = doc.at("p_grid").get<std::vector<double>>();
        config.mu_grid = doc.at("mu_grid").get<std::vector<double>>();
        config.n_list = doc.at("n_list").get<std::vector<int>>();
        if (doc.contains("input")) {
            const auto& input = doc.at("input");
            const auto type = input.at("type").get<std::string>();
            if (type == "maximally_coherent") {
                config.input.kind = InputSpec::Kind::MaximallyCoherent;
            } else if (type == "random") {
                config.input.kind = InputSpec::Kind::RandomSeeded;
                config.input.seed = input.at("seed").get<std::uint64_t>();
            } else {
                throw ArgumentError("config: unknown input type '" + type + "'");
            }
        }
        if (doc.contains("engine")) {
            const auto text = doc.at("engine").get<std::string>();
            const auto engine = parse_engine(text);
            if (!engine) throw ArgumentError("config: unknown engine '" + text + "'");
            config.engine = *engine;
        }
        if (doc.contains("out")) config.out = doc.at("out").get<std::string>();
        if (doc.contains("format")) {
            const auto text = doc.at("format").get<std::string>();
            if (text == "csv") config.format = OutputFormat::Csv;
            else if (text == "json") config.format = OutputFormat::Json;
            else throw ArgumentError("config: unknown format '" + text + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("config: ") + e.what());
    }
    validate_config(config);
    return config;
}

SweepResult run_sweep(const SweepConfig& config) {
    validate_config(config);

    auto kinds = config.channels;
    std::sort(kinds.begin(), kinds.end(),
              [](ChannelKind a, ChannelKind b) { return static_cast<int>(a) < static_cast<int>(b); });
    auto n_list = config.n_list;
    std::sort(n_list.begin(), n_list.end());
    auto p_grid = config.p_grid;
    std::sort(p_grid.begin(), p_grid.end());
    auto mu_grid = config.mu_grid;
    std::sort(mu_grid.begin(), mu_grid.end());

    SweepResult result;
    for (const ChannelKind kind : kinds) {
        for (const int n : n_list) {
            std::optional<ComplexMatrix> input_state;
            for (const double p : p_grid) {
                for (const double mu : mu_grid) {
                    SweepRow row;
                    row.kind = kind;
                    row.n_qubits = n;
                    row.p = p;
                    row.mu = mu;
                    row.engine = std::string(to_string(config.engine));
                    try {
                        std::optional<CoherenceReport> brute;
                        if (config.engine != Engine::ClosedForm) {
                            if (!input_state) input_state = make_input(config.input, n);
                            const CorrelatedChannel channel(kind, p, mu, n);
                            brute = report(channel_output(*input_state, channel));
                            row.c_l1_norm = brute->c_l1_normalized;
                            row.c_re_norm = brute->c_re_normalized;
                            row.uqc = brute->uqc;
                            row.mutual_info = brute->mutual_information;
                        }
                        if (config.engine != Engine::BruteForce) {
                            const ClosedValues closed = closed_values(kind, n, p, mu);
                            if (config.engine == Engine::ClosedForm) {
                                row.c_l1_norm = closed.l1;
                                row.c_re_norm = closed.re;
                                row.uqc = closed.uqc;
                                row.mutual_info = closed.uqc;
                            } else {
                                double deviation = std::abs(brute->c_re_normalized - closed.re);
                                if (closed.l1)
                                    deviation = std::max(
                                        deviation, std::abs(brute->c_l1_normalized - *closed.l1));
                                row.abs_deviation = deviation;
                            }
                        }
                    } catch (const EnumerationLimitError& e) {
                        row = SweepRow{};
                        row.kind = kind;
                        row.n_qubits = n;
                        row.p = p;
                        row.mu = mu;
                        row.engine = "error";
                        row.error = e.what();
                    } catch (const DimensionLimitError& e) {
                        row = SweepRow{};
                        row.kind = kind;
                        row.n_qubits = n;
                        row.p = p;
                        row.mu = mu;
                        row.engine = "error";
                        row.error = e.what();
                    }
                    result.rows.push_back(std::move(row));
                }
            }
        }
    }
    std::stable_sort(result.rows.begin(), result.rows.end(), row_less);
    return result;
}

SweepResult reproduce_figure(int figure_id, std::optional<char> panel) {
    if (figure_id < 1 || figure_id > 3)
        throw ArgumentError("figure id must be 1, 2 or 3");

    SweepResult result;
    if (figure_id == 3) {
        if (panel) throw ArgumentError("figure 3 has no panels");
        for (int i = 0; i <= 100; ++i) {
            const double p = i / 100.0;
            for (int j = 0; j <= 100; ++j) {
                const double mu = j / 100.0;
                SweepRow row;
                row.kind = ChannelKind::PhaseFlip;
                row.n_qubits = 0;
                row.p = p;
                row.mu = mu;
                row.engine = "closed_form";
                row.c_re_norm = asymptotic_re(p, mu);
                result.rows.push_back(std::move(row));
            }
        }
        std::stable_sort(result.rows.begin(), result.rows.end(), row_less);
        return result;
    }

    static constexpr std::array<std::pair<char, double>, 4> kPanels{
        {{'a', 0.0}, {'b', 0.4}, {'c', 0.8}, {'d', 1.0}}};
    std::vector<std::pair<char, double>> selected;
    for (const auto& entry : kPanels)
        if (!panel || *panel == entry.first) selected.push_back(entry);
    if (selected.empty())
        throw ArgumentError("panel must be one of a, b, c, d");

    constexpr int kPointCount = 201;
    for (int n = 2; n <= 7; ++n) {
        const ComplexMatrix input = maximally_coherent_state(n);
        for (const auto& [label, mu] : selected) {
            for (int i = 0; i < kPointCount; ++i) {
                const double p = i / 200.0;
                const CorrelatedChannel channel(ChannelKind::PhaseFlip, p, mu, n);
                const CoherenceReport rep = report(apply_phase_flip_fast(input, channel));
                SweepRow row;
                row.kind = ChannelKind::PhaseFlip;
                row.n_qubits = n;
                row.p = p;
                row.mu = mu;
                row.engine = "brute_force";
                row.c_l1_norm = rep.c_l1_normalized;
                row.c_re_norm = rep.c_re_normalized;
                row.uqc = rep.uqc;
                row.mutual_info = rep.mutual_information;
                result.rows.push_back(std::move(row));
            }
        }
    }

    if (figure_id == 1) {
        for (const auto& [label, mu] : selected) {
            if (label == 'a') {
                // dashed N = 100 reference curve, uncorrelated closed form
                for (int i = 0; i < kPointCount; ++i) {
                    const double p = i / 200.0;
                    SweepRow row;
                    row.kind = ChannelKind::PhaseFlip;
                    row.n_qubits = 100;
                    row.p = p;
                    row.mu = mu;
                    row.engine = "closed_form";
                    row.c_l1_norm = l1_phase_flip(100, p, 0.0);
                    result.rows.push_back(std::move(row));
                }
            }
            if (label == 'd') {
                // fully correlated N -> infinity asymptote, encoded as N = 0
                for (int i = 0; i < kPointCount; ++i) {
                    const double p = i / 200.0;
                    SweepRow row;
                    row.kind = ChannelKind::PhaseFlip;
                    row.n_qubits = 0;
                    row.p = p;
                    row.mu = mu;
                    row.engine = "closed_form";
                    row.c_l1_norm = asymptotic_l1_fully_correlated(p);
                    result.rows.push_back(std::move(row));
                }
            }
        }
    }

    std::stable_sort(result.rows.begin(), result.rows.end(), row_less);
    return result;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerificationCheck& c) { return c.passed; });
}

void write_output(const SweepResult& result, OutputFormat format, std::ostream& os) {
    if (format == OutputFormat::Csv) {
        os << "kind,N,p,mu,c_l1_norm,c_re_norm,uqc,mutual_info,engine,abs_deviation\n";
        for (const SweepRow& row : result.rows) {
            os << to_string(row.kind) << ',' << row.n_qubits << ',' << format_number(row.p) << ','
               << format_number(row.mu) << ',' << format_opt(row.c_l1_norm) << ','
               << format_opt(row.c_re_norm) << ',' << format_opt(row.uqc) << ','
               << format_opt(row.mutual_info) << ',' << row.engine << ','
               << format_opt(row.abs_deviation) << '\n';
        }
    } else {
        ordered_json arr = ordered_json::array();
        for (const SweepRow& row : result.rows) arr.push_back(row_to_json(row));
        os << arr.dump(2) << '\n';
    }
}

void write_output(const SweepResult& result, OutputFormat format, const std::string& path) {
    if (path.empty() || path == "-") {
        write_output(result, format, std::cout);
        return;
    }
    std::ofstream ofs(path);
    if (!ofs) throw std::runtime_error("cannot open output file: " + path);
    write_output(result, format, ofs);
    ofs.flush();
    if (!ofs) throw std::runtime_error("failed while writing output file: " + path);
}

namespace {

std::optional<double> parse_opt(const std::string& field) {
    if (field.empty()) return std::nullopt;
    return std::stod(field);
}

}  // namespace

SweepResult read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw ArgumentError("csv: missing header");
    if (line != "kind,N,p,mu,c_l1_norm,c_re_norm,uqc,mutual_info,engine,abs_deviation")
        throw ArgumentError("csv: unexpected header: " + line);

    SweepResult result;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (line.back() == ',') fields.emplace_back();
        if (fields.size() != 10)
            throw ArgumentError("csv: expected 10 fields, got " + std::to_string(fields.size()));
        SweepRow row;
        const auto kind = parse_channel_kind(fields[0]);
        if (!kind) throw ArgumentError("csv: unknown channel kind '" + fields[0] + "'");
        row.kind = *kind;
        row.n_qubits = std::stoi(fields[1]);
        row.p = std::stod(fields[2]);
        row.mu = std::stod(fields[3]);
        row.c_l1_norm = parse_opt(fields[4]);
        row.c_re_norm = parse_opt(fields[5]);
        row.uqc = parse_opt(fields[6]);
        row.mutual_info = parse_opt(fields[7]);
        row.engine = fields[8];
        row.abs_deviation = parse_opt(fields[9]);
        if (row.engine == "error") row.error = "error row";
        result.rows.push_back(std::move(row));
    }
    return result;
}

SweepResult read_json(std::istream& is) {
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("json: ") + e.what());
    }
    if (!doc.is_array()) throw ArgumentError("json: expected an array of records");
    SweepResult result;
    for (const auto& rec : doc) {
        SweepRow row;
        const auto kind = parse_channel_kind(rec.at("kind").get<std::string>());
        if (!kind) throw ArgumentError("json: unknown channel kind");
        row.kind = *kind;
        row.n_qubits = rec.at("N").get<int>();
        row.p = rec.at("p").get<double>();
        row.mu = rec.at("mu").get<double>();
        auto get = [&rec](const char* key) -> std::optional<double> {
            if (!rec.contains(key) || rec.at(key).is_null()) return std::nullopt;
            return rec.at(key).get<double>();
        };
        row.c_l1_norm = get("c_l1_norm");
        row.c_re_norm = get("c_re_norm");
        row.uqc = get("uqc");
        row.mutual_info = get("mutual_info");
        row.engine = rec.at("engine").get<std::string>();
        row.abs_deviation = get("abs_deviation");
        if (rec.contains("error")) row.error = rec.at("error").get<std::string>();
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace cohchan
