#pragma once

#include "cohchan/channel.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <vector>

namespace cohchan {

using BigInt = boost::multiprecision::cpp_int;

enum class CoefficientFamily { Alpha, Beta, Eta };

/// Exact integer coefficients of the phase-flip coherence polynomials.
/// values[n-1] holds the order-n coefficient; lengths are N (alpha),
/// N+1 (beta) and N-1 (eta).
struct CoefficientTable {
    CoefficientFamily family = CoefficientFamily::Alpha;
    int n_qubits = 0;
    std::vector<BigInt> values;
};

/// Builds a table via its recursion. alpha additionally equals the
/// binomial coefficients C(N, n). Eta requires N >= 2.
CoefficientTable coefficients(CoefficientFamily family, int n_qubits);

/// True where the normalized l1 coherence of the phase-flip output on
/// |Psi_N> admits a closed form: mu in {0, 0.5, 1}, or p = 0.5 (any mu),
/// or N = 1 where the channel output is q = |1-2p| regardless of mu.
bool l1_closed_form_available(int n_qubits, double p, double mu);

/// Normalized l1 coherence where a closed form exists, nullopt otherwise.
std::optional<double> l1_phase_flip(int n_qubits, double p, double mu);

/// Normalized relative entropy of coherence of the phase-flip output on
/// |Psi_N>; defined for every (p, mu).
double re_phase_flip(int n_qubits, double p, double mu);

/// Spectrum of the two-qubit phase-flip output on |Psi_2>:
/// (p(1-p)(1-mu), p(1-p)(1-mu), p(p+mu-p mu), (1-p)(1-p+p mu)).
std::array<double, 4> epsilon_eigenvalues(double p, double mu);

/// Interpolation factor k in [0, 1] between the mu = 0 and mu = 1 entropy
/// curves; k(p,0) = 0 and k(p,1) = 1 exactly. Throws SingularParameterError
/// for p in {0, 1} where H2(p) = 0.
double k_factor(double p, double mu);

/// N -> infinity limit of re_phase_flip: 1 - (1 - k) H2(p).
double asymptotic_re(double p, double mu);

/// N -> infinity limit of the fully correlated l1 curve: (1 + |1-2p|)/2.
double asymptotic_l1_fully_correlated(double p);

/// Maps a channel onto the phase flip reproducing its coherence behavior
/// on |Psi_N>: nullopt means the coherence is frozen (bit flip), otherwise
/// the effective phase-flip probability (p for bit-phase flip, 2p/3 for
/// depolarizing).
std::optional<double> reduce_channel(ChannelKind kind, double p);

}  // namespace cohchan
