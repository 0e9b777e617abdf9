#pragma once

#include "cohchan/config.hpp"
#include "cohchan/linalg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cohchan {

enum class ChannelKind { PhaseFlip, BitFlip, BitPhaseFlip, Depolarizing };

std::string_view to_string(ChannelKind kind);
std::optional<ChannelKind> parse_channel_kind(std::string_view name);

/// Pauli symbol indices along a word: I=0, X=1, Y=2, Z=3.
using PauliWord = std::vector<std::uint8_t>;

/// One Pauli word together with its joint probability.
struct PauliString {
    PauliWord word;
    double probability = 0.0;
};

/// A Pauli channel applied to N consecutive qubits with Markov-correlated
/// symbol choices: mu = 0 is independent, mu = 1 repeats the first symbol.
struct CorrelatedChannel {
    ChannelKind kind;
    double p;
    double mu;
    int n_qubits;

    CorrelatedChannel(ChannelKind kind, double p, double mu, int n_qubits);
};

/// Single-qubit marginal distribution over (I, X, Y, Z).
std::array<double, 4> single_qubit_probs(ChannelKind kind, double p);

/// Markov-chain probability of a word:
///   p(i1) * prod_{n>=2} [(1-mu) p(i_n) + mu delta(i_n, i_{n-1})].
double joint_probability(std::span<const std::uint8_t> word,
                         const std::array<double, 4>& probs, double mu);

/// Exhaustive enumeration of the nonzero-probability words over the
/// channel's support alphabet, lexicographic in (I, X, Y, Z) order.
/// Probabilities sum to 1. Throws EnumerationLimitError if the support
/// alphabet raised to N exceeds the cap.
std::vector<PauliString> enumerate_strings(const CorrelatedChannel& channel,
                                           std::size_t enumeration_cap = kDefaultEnumerationCap);

/// Conjugation (sigma-string) rho (sigma-string)^dagger, computed as an
/// index permutation (X/Y parts) plus sign flips (Y/Z parts); the dense
/// operator is never formed.
ComplexMatrix apply_string(const ComplexMatrix& rho, std::span<const std::uint8_t> word);

/// Kraus sum rho = sum_words p(word) * apply_string(rho0, word), with
/// words accumulated in enumeration order.
ComplexMatrix apply_channel(const ComplexMatrix& rho0, const CorrelatedChannel& channel,
                            std::size_t enumeration_cap = kDefaultEnumerationCap);

/// Phase-flip damping factor
///   f(mask) = sum_{s in {I,Z}^N} p(s) * (-1)^(number of positions where
///             both the mask bit and a Z are set),
/// evaluated in O(N) as a product of 2x2 transfer matrices over the Markov
/// chain. Bit N-1-n of the mask belongs to chain position n.
double dephasing_factor(std::uint64_t diff_mask, int n_qubits, double p, double mu);

/// Element-wise phase-flip application: out(x, y) = rho0(x, y) * f(x ^ y).
/// Matches apply_channel entrywise to ~1e-12 at a fraction of the cost.
ComplexMatrix apply_phase_flip_fast(const ComplexMatrix& rho0, const CorrelatedChannel& channel);

}  // namespace cohchan
