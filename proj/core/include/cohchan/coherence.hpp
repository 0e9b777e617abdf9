#pragma once

#include "cohchan/linalg.hpp"

#include <vector>

namespace cohchan {

enum class Measure { L1, RelativeEntropy };

/// Coherence and correlation quantities of one state, all in the
/// computational basis. Entropic quantities are in bits.
struct CoherenceReport {
    double c_l1 = 0.0;
    double c_re = 0.0;
    double c_l1_normalized = 0.0;
    double c_re_normalized = 0.0;
    std::vector<double> local_c_re;      // per-qubit C_re of the reduced states
    double uqc = 0.0;                    // c_re minus the sum of local_c_re
    double mutual_information = 0.0;
};

/// |Psi_N><Psi_N| with |Psi_1> = (|0> + |1>)/sqrt(2): every entry 1/2^N.
ComplexMatrix maximally_coherent_state(int n_qubits);

/// Projection onto the diagonal; idempotent.
ComplexMatrix dephase(const ComplexMatrix& rho);

/// l1 norm of coherence: sum of off-diagonal absolute values.
double coherence_l1(const ComplexMatrix& rho);

/// Relative entropy of coherence S(dephase(rho)) - S(rho).
/// Tiny negatives are clamped to 0; below -1e-9 throws
/// NumericalConsistencyError.
double coherence_relative_entropy(const ComplexMatrix& rho);

/// value / (2^N - 1) for L1, value / N for RelativeEntropy.
double normalized(double value, Measure measure, int n_qubits);

/// Joint C_re minus the sum of single-qubit C_re values.
double unlocalized_coherence(const ComplexMatrix& rho);

/// I(rho) = sum_i S(rho_i) - S(rho).
double mutual_information(const ComplexMatrix& rho);

CoherenceReport report(const ComplexMatrix& rho);

}  // namespace cohchan
