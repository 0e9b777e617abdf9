#include "cohchan/channel.hpp"

#include "cohchan/errors.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace cohchan {

namespace {

void check_probability(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0))
        throw ArgumentError(std::string(name) + " = " + std::to_string(value) + " outside [0, 1]");
}

struct StringMasks {
    std::uint64_t x = 0;  // bits flipped by X/Y parts
    std::uint64_t z = 0;  // bits signed by Y/Z parts
};

StringMasks masks_of(std::span<const std::uint8_t> word) {
    StringMasks m;
    const int n = static_cast<int>(word.size());
    for (int i = 0; i < n; ++i) {
        const std::uint8_t s = word[i];
        if (s > 3) throw ArgumentError("Pauli word symbol out of range");
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - i);  // qubit 0 = MSB
        if (s == 1 || s == 2) m.x |= bit;
        if (s == 2 || s == 3) m.z |= bit;
    }
    return m;
}

// Accumulates weight * (sigma-string) rho (sigma-string)^dagger into out.
// sign(a, b) factorizes as sign(a) * sign(b), so a per-index sign table
// turns each term into one multiply per entry.
void accumulate_string(const ComplexMatrix& rho, const StringMasks& m, double weight,
                       std::vector<double>& sign, ComplexMatrix& out) {
    const Eigen::Index dim = rho.rows();
    for (Eigen::Index v = 0; v < dim; ++v)
        sign[static_cast<std::size_t>(v)] =
            (std::popcount(m.z & static_cast<std::uint64_t>(v)) & 1) ? -1.0 : 1.0;
    for (Eigen::Index b = 0; b < dim; ++b) {
        const double col_factor = weight * sign[static_cast<std::size_t>(b)];
        const Eigen::Index bx = static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ m.x);
        for (Eigen::Index a = 0; a < dim; ++a) {
            const Eigen::Index ax = static_cast<Eigen::Index>(static_cast<std::uint64_t>(a) ^ m.x);
            out(a, b) += col_factor * sign[static_cast<std::size_t>(a)] * rho(ax, bx);
        }
    }
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::PhaseFlip: return "phaseflip";
        case ChannelKind::BitFlip: return "bitflip";
        case ChannelKind::BitPhaseFlip: return "bitphaseflip";
        case ChannelKind::Depolarizing: return "depolarizing";
    }
    throw ArgumentError("unknown channel kind");
}

std::optional<ChannelKind> parse_channel_kind(std::string_view name) {
    if (name == "phaseflip") return ChannelKind::PhaseFlip;
    if (name == "bitflip") return ChannelKind::BitFlip;
    if (name == "bitphaseflip") return ChannelKind::BitPhaseFlip;
    if (name == "depolarizing") return ChannelKind::Depolarizing;
    return std::nullopt;
}

CorrelatedChannel::CorrelatedChannel(ChannelKind kind_, double p_, double mu_, int n_qubits_)
    : kind(kind_), p(p_), mu(mu_), n_qubits(n_qubits_) {
    check_probability(p, "p");
    check_probability(mu, "mu");
    if (n_qubits < 1)
        throw ArgumentError("channel qubit count must be positive");
    if (n_qubits > max_qubits())
        throw DimensionLimitError("channel on " + std::to_string(n_qubits) +
                                  " qubits exceeds the configured maximum of " +
                                  std::to_string(max_qubits()));
}

std::array<double, 4> single_qubit_probs(ChannelKind kind, double p) {
    check_probability(p, "p");
    switch (kind) {
        case ChannelKind::PhaseFlip: return {1.0 - p, 0.0, 0.0, p};
        case ChannelKind::BitFlip: return {1.0 - p, p, 0.0, 0.0};
        case ChannelKind::BitPhaseFlip: return {1.0 - p, 0.0, p, 0.0};
        case ChannelKind::Depolarizing: return {1.0 - p, p / 3.0, p / 3.0, p / 3.0};
    }
    throw ArgumentError("unknown channel kind");
}

double joint_probability(std::span<const std::uint8_t> word,
                         const std::array<double, 4>& probs, double mu) {
    if (word.empty()) throw ArgumentError("joint_probability: empty word");
    check_probability(mu, "mu");
    double sum = 0.0;
    for (const double q : probs) {
        if (q < 0.0) throw ArgumentError("joint_probability: negative marginal probability");
        sum += q;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw ArgumentError("joint_probability: marginal probabilities do not sum to 1");
    if (word[0] > 3) throw ArgumentError("Pauli word symbol out of range");

    double pr = probs[word[0]];
    for (std::size_t n = 1; n < word.size(); ++n) {
        if (word[n] > 3) throw ArgumentError("Pauli word symbol out of range");
        pr *= (1.0 - mu) * probs[word[n]] + (word[n] == word[n - 1] ? mu : 0.0);
    }
    return pr;
}

std::vector<PauliString> enumerate_strings(const CorrelatedChannel& channel,
                                           std::size_t enumeration_cap) {
    const auto probs = single_qubit_probs(channel.kind, channel.p);
    std::vector<std::uint8_t> support;
    for (std::uint8_t s = 0; s < 4; ++s)
        if (probs[s] > 0.0) support.push_back(s);

    const int n = channel.n_qubits;
    double count = 1.0;
    for (int i = 0; i < n; ++i) count *= static_cast<double>(support.size());
    if (count > static_cast<double>(enumeration_cap))
        throw EnumerationLimitError("enumerating " + std::to_string(support.size()) + "^" +
                                    std::to_string(n) + " Pauli strings exceeds the cap of " +
                                    std::to_string(enumeration_cap));

    // depth-first in lexicographic symbol order; zero-weight branches are
    // pruned (mu = 1 keeps only repeated-symbol words)
    std::vector<PauliString> out;
    PauliWord word(static_cast<std::size_t>(n));
    std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 1.0);
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    int depth = 0;
    while (depth >= 0) {
        if (choice[static_cast<std::size_t>(depth)] == support.size()) {
            choice[static_cast<std::size_t>(depth)] = 0;
            --depth;
            if (depth >= 0) ++choice[static_cast<std::size_t>(depth)];
            continue;
        }
        const std::uint8_t sym = support[choice[static_cast<std::size_t>(depth)]];
        word[static_cast<std::size_t>(depth)] = sym;
        const double step =
            depth == 0 ? probs[sym]
                       : (1.0 - channel.mu) * probs[sym] +
                             (sym == word[static_cast<std::size_t>(depth - 1)] ? channel.mu : 0.0);
        const double weight = prefix[static_cast<std::size_t>(depth)] * step;
        if (weight == 0.0) {
            ++choice[static_cast<std::size_t>(depth)];
            continue;
        }
        if (depth == n - 1) {
            out.push_back(PauliString{word, weight});
            ++choice[static_cast<std::size_t>(depth)];
        } else {
            prefix[static_cast<std::size_t>(depth) + 1] = weight;
            ++depth;
        }
    }
    return out;
}

ComplexMatrix apply_string(const ComplexMatrix& rho, std::span<const std::uint8_t> word) {
    if (rho.rows() != rho.cols())
        throw ArgumentError("apply_string: state must be square");
    const int n = static_cast<int>(word.size());
    if (n < 1 || rho.rows() != (Eigen::Index{1} << n))
        throw ArgumentError("apply_string: word length does not match the state dimension");
    const StringMasks m = masks_of(word);
    ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
    std::vector<double> sign(static_cast<std::size_t>(rho.rows()));
    accumulate_string(rho, m, 1.0, sign, out);
    return out;
}

ComplexMatrix apply_channel(const ComplexMatrix& rho0, const CorrelatedChannel& channel,
                            std::size_t enumeration_cap) {
    if (rho0.rows() != rho0.cols() || rho0.rows() != (Eigen::Index{1} << channel.n_qubits))
        throw ArgumentError("apply_channel: state dimension does not match the channel");
    const auto strings = enumerate_strings(channel, enumeration_cap);
    ComplexMatrix out = ComplexMatrix::Zero(rho0.rows(), rho0.cols());
    std::vector<double> sign(static_cast<std::size_t>(rho0.rows()));
    for (const auto& ps : strings)
        accumulate_string(rho0, masks_of(ps.word), ps.probability, sign, out);
    return out;
}

double dephasing_factor(std::uint64_t diff_mask, int n_qubits, double p, double mu) {
    if (n_qubits < 1 || n_qubits > 63)
        throw ArgumentError("dephasing_factor: invalid qubit count");
    if (diff_mask >= (std::uint64_t{1} << n_qubits))
        throw ArgumentError("dephasing_factor: mask out of range");
    check_probability(p, "p");
    check_probability(mu, "mu");

    // state over the symbols (I, Z); a set mask bit negates the Z component
    double vi = 1.0 - p;
    double vz = (diff_mask >> (n_qubits - 1)) & 1 ? -p : p;
    for (int pos = 1; pos < n_qubits; ++pos) {
        const double total = vi + vz;
        double wi = (1.0 - mu) * (1.0 - p) * total + mu * vi;
        double wz = (1.0 - mu) * p * total + mu * vz;
        if ((diff_mask >> (n_qubits - 1 - pos)) & 1) wz = -wz;
        vi = wi;
        vz = wz;
    }
    return vi + vz;
}

ComplexMatrix apply_phase_flip_fast(const ComplexMatrix& rho0, const CorrelatedChannel& channel) {
    if (channel.kind != ChannelKind::PhaseFlip)
        throw ArgumentError("apply_phase_flip_fast: channel kind must be phaseflip");
    if (rho0.rows() != rho0.cols() || rho0.rows() != (Eigen::Index{1} << channel.n_qubits))
        throw ArgumentError("apply_phase_flip_fast: state dimension does not match the channel");

    const Eigen::Index dim = rho0.rows();
    std::vector<double> factor(static_cast<std::size_t>(dim));
    for (Eigen::Index m = 0; m < dim; ++m)
        factor[static_cast<std::size_t>(m)] =
            dephasing_factor(static_cast<std::uint64_t>(m), channel.n_qubits, channel.p, channel.mu);

    ComplexMatrix out(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b)
        for (Eigen::Index a = 0; a < dim; ++a)
            out(a, b) = rho0(a, b) * factor[static_cast<std::size_t>(a ^ b)];
    return out;
}

}  // namespace cohchan
