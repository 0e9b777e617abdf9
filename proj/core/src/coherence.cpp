#include "cohchan/coherence.hpp"

#include "cohchan/config.hpp"
#include "cohchan/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace cohchan {

namespace {

double clamp_coherence(double value, const char* name) {
    if (value < -1e-9)
        throw NumericalConsistencyError(std::string(name) + " = " + std::to_string(value) +
                                        " below -1e-9; the eigensolve is suspect");
    return std::max(value, 0.0);
}

}  // namespace

ComplexMatrix maximally_coherent_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > max_qubits())
        throw DimensionLimitError("maximally_coherent_state: qubit count " +
                                  std::to_string(n_qubits) + " outside [1, " +
                                  std::to_string(max_qubits()) + "]");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    return ComplexMatrix::Constant(dim, dim, Complex{1.0 / static_cast<double>(dim)});
}

ComplexMatrix dephase(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols())
        throw ArgumentError("dephase: state must be square");
    return rho.diagonal().asDiagonal();
}

double coherence_l1(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols())
        throw ArgumentError("coherence_l1: state must be square");
    double sum = 0.0;
    for (Eigen::Index j = 0; j < rho.cols(); ++j)
        for (Eigen::Index i = 0; i < rho.rows(); ++i)
            if (i != j) sum += std::abs(rho(i, j));
    return sum;
}

double coherence_relative_entropy(const ComplexMatrix& rho) {
    validate_density_matrix(rho);
    std::vector<double> diag(static_cast<std::size_t>(rho.rows()));
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        diag[static_cast<std::size_t>(i)] = rho(i, i).real();
    const double dephased = entropy_of_spectrum(diag);
    const double joint = entropy_of_spectrum(hermitian_eigenvalues(rho).eigenvalues);
    return clamp_coherence(dephased - joint, "relative entropy of coherence");
}

double normalized(double value, Measure measure, int n_qubits) {
    if (n_qubits < 1)
        throw ArgumentError("normalized: qubit count must be positive");
    switch (measure) {
        case Measure::L1:
            return value / (std::pow(2.0, n_qubits) - 1.0);
        case Measure::RelativeEntropy:
            return value / static_cast<double>(n_qubits);
    }
    throw ArgumentError("normalized: unknown measure");
}

double unlocalized_coherence(const ComplexMatrix& rho) {
    return report(rho).uqc;
}

double mutual_information(const ComplexMatrix& rho) {
    return report(rho).mutual_information;
}

CoherenceReport report(const ComplexMatrix& rho) {
    validate_density_matrix(rho);
    const int n = qubit_count(rho);

    std::vector<double> diag(static_cast<std::size_t>(rho.rows()));
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        diag[static_cast<std::size_t>(i)] = rho(i, i).real();
    const double joint_entropy = entropy_of_spectrum(hermitian_eigenvalues(rho).eigenvalues);
    const double dephased_entropy = entropy_of_spectrum(diag);

    CoherenceReport rep;
    rep.c_l1 = coherence_l1(rho);
    rep.c_re = clamp_coherence(dephased_entropy - joint_entropy, "relative entropy of coherence");
    rep.c_l1_normalized = normalized(rep.c_l1, Measure::L1, n);
    rep.c_re_normalized = normalized(rep.c_re, Measure::RelativeEntropy, n);

    rep.local_c_re.reserve(static_cast<std::size_t>(n));
    double local_sum = 0.0;
    double local_entropy_sum = 0.0;
    for (int qubit = 0; qubit < n; ++qubit) {
        const ComplexMatrix reduced = partial_trace_to_qubit(rho, n, qubit);
        const double s = entropy_of_spectrum(hermitian_eigenvalues(reduced).eigenvalues);
        const std::array<double, 2> rdiag{reduced(0, 0).real(), reduced(1, 1).real()};
        const double local = clamp_coherence(entropy_of_spectrum(rdiag) - s, "local coherence");
        rep.local_c_re.push_back(local);
        local_sum += local;
        local_entropy_sum += s;
    }
    rep.uqc = rep.c_re - local_sum;
    rep.mutual_information = local_entropy_sum - joint_entropy;
    if (rep.uqc < -1e-9)
        throw NumericalConsistencyError("unlocalized coherence below -1e-9");
    if (rep.mutual_information < -1e-9)
        throw NumericalConsistencyError("mutual information below -1e-9");
    return rep;
}

}  // namespace cohchan
