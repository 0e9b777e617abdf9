#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace cohchan {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Real eigenvalues of a Hermitian matrix, sorted descending.
struct Spectrum {
    std::vector<double> eigenvalues;
};

/// sigma_0..sigma_3: identity, X, Y, Z.
const ComplexMatrix& pauli(int index);

/// Kronecker product. Throws DimensionLimitError if the result would
/// exceed max_dimension().
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Number of qubits encoded by a square matrix of dimension 2^N.
int qubit_count(const ComplexMatrix& m);

/// Reduced single-qubit state of qubit `keep` (qubit 0 is the leftmost
/// tensor factor, i.e. the most significant index bit). The result is
/// Hermitian by construction.
ComplexMatrix partial_trace_to_qubit(const ComplexMatrix& rho, int n_qubits, int keep);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);

/// Throws ValidationError unless rho is square, Hermitian and unit-trace
/// within 1e-10. Positivity is checked where eigenvalues are computed.
void validate_density_matrix(const ComplexMatrix& rho);

/// Eigenvalues of a Hermitian matrix (checked within 1e-10), descending.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

/// -sum lambda log2 lambda over eigenvalues above the 1e-12 cutoff.
/// Values in [-1e-10, 0) count as 0; anything lower throws ValidationError.
double entropy_of_spectrum(std::span<const double> eigenvalues);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const ComplexMatrix& rho);

/// Binary Shannon entropy in bits, with H2(0) = H2(1) = 0.
double binary_entropy(double p);

}  // namespace cohchan
