#include "cohchan/linalg.hpp"

#include "cohchan/config.hpp"
#include "cohchan/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

namespace cohchan {

const ComplexMatrix& pauli(int index) {
    static const std::array<ComplexMatrix, 4> sigma = [] {
        std::array<ComplexMatrix, 4> s;
        s[0] = ComplexMatrix::Identity(2, 2);
        s[1] = ComplexMatrix{{0, 1}, {1, 0}};
        s[2] = ComplexMatrix{{0, Complex(0, -1)}, {Complex(0, 1), 0}};
        s[3] = ComplexMatrix{{1, 0}, {0, -1}};
        return s;
    }();
    if (index < 0 || index > 3)
        throw ArgumentError("pauli: index must be in [0, 3]");
    return sigma[static_cast<std::size_t>(index)];
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const auto rows = static_cast<std::uint64_t>(a.rows()) * static_cast<std::uint64_t>(b.rows());
    const auto cols = static_cast<std::uint64_t>(a.cols()) * static_cast<std::uint64_t>(b.cols());
    if (rows > max_dimension() || cols > max_dimension())
        throw DimensionLimitError("kron: result dimension " + std::to_string(std::max(rows, cols)) +
                                  " exceeds the configured maximum " + std::to_string(max_dimension()));
    ComplexMatrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

int qubit_count(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw ArgumentError("qubit_count: matrix must be square and nonempty");
    const auto dim = static_cast<std::uint64_t>(m.rows());
    if (!std::has_single_bit(dim))
        throw ArgumentError("qubit_count: dimension " + std::to_string(dim) + " is not a power of 2");
    return std::bit_width(dim) - 1;
}

ComplexMatrix partial_trace_to_qubit(const ComplexMatrix& rho, int n_qubits, int keep) {
    if (n_qubits < 1 || rho.rows() != rho.cols() ||
        rho.rows() != (Eigen::Index{1} << n_qubits))
        throw ArgumentError("partial_trace_to_qubit: state dimension does not match qubit count");
    if (keep < 0 || keep >= n_qubits)
        throw ArgumentError("partial_trace_to_qubit: qubit index " + std::to_string(keep) +
                            " out of range for " + std::to_string(n_qubits) + " qubits");

    const int pos = n_qubits - 1 - keep;  // bit position of the kept qubit
    const std::uint64_t low_mask = (std::uint64_t{1} << pos) - 1;
    const std::uint64_t rest = std::uint64_t{1} << (n_qubits - 1);

    Complex e00{}, e01{}, e11{};
    for (std::uint64_t r = 0; r < rest; ++r) {
        const std::uint64_t base = ((r & ~low_mask) << 1) | (r & low_mask);
        const auto i0 = static_cast<Eigen::Index>(base);
        const auto i1 = static_cast<Eigen::Index>(base | (std::uint64_t{1} << pos));
        e00 += rho(i0, i0);
        e11 += rho(i1, i1);
        e01 += rho(i0, i1);
    }
    ComplexMatrix out(2, 2);
    out(0, 0) = e00;
    out(1, 1) = e11;
    out(0, 1) = e01;
    out(1, 0) = std::conj(e01);  // Hermitian by construction
    return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void validate_density_matrix(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols() || rho.rows() < 1)
        throw ValidationError("density matrix must be square and nonempty");
    if (!is_hermitian(rho, 1e-10))
        throw ValidationError("density matrix is not Hermitian within 1e-10");
    if (std::abs(rho.trace() - Complex{1.0}) > 1e-10)
        throw ValidationError("density matrix trace deviates from 1 beyond 1e-10");
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw ValidationError("hermitian_eigenvalues: matrix must be square and nonempty");
    if (!is_hermitian(m, 1e-10))
        throw ValidationError("hermitian_eigenvalues: input is not Hermitian within 1e-10");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalConsistencyError("hermitian_eigenvalues: eigensolver did not converge");
    const auto& ev = solver.eigenvalues();  // ascending
    Spectrum spectrum;
    spectrum.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    std::reverse(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
    return spectrum;
}

double entropy_of_spectrum(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (const double lambda : eigenvalues) {
        if (lambda < -1e-10)
            throw ValidationError("entropy_of_spectrum: eigenvalue " + std::to_string(lambda) +
                                  " below the positivity tolerance");
        if (lambda > 1e-12) s -= lambda * std::log2(lambda);
    }
    return std::max(s, 0.0);
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    validate_density_matrix(rho);
    const Spectrum spectrum = hermitian_eigenvalues(rho);
    return entropy_of_spectrum(spectrum.eigenvalues);
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ArgumentError("binary_entropy: probability " + std::to_string(p) + " outside [0, 1]");
    double s = 0.0;
    if (p > 0.0) s -= p * std::log2(p);
    if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
    return s;
}

}  // namespace cohchan
