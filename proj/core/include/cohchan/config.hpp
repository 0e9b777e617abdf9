#pragma once

#include <cstddef>

namespace cohchan {

/// Hard ceiling on dense simulation size (2^12 = 4096-dimensional states).
inline constexpr int kMaxQubitsHard = 12;

/// Default cap on the number of enumerated Pauli strings (4^8).
inline constexpr std::size_t kDefaultEnumerationCap = 65536;

/// Effective qubit ceiling: kMaxQubitsHard, optionally lowered (never
/// raised) by the COHCHAN_NMAX environment variable. Read once per process.
int max_qubits();

/// Largest permitted dense matrix dimension, 2^max_qubits().
std::size_t max_dimension();

}  // namespace cohchan
