#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace opcirc {

using cplx = std::complex<double>;

/// A linear map from `arity_in` wires to `arity_out` wires. Not necessarily
/// unitary: erasures, projectors and state preparations are ordinary gates.
/// The matrix is dense, row-major, 2^arity_out rows by 2^arity_in columns.
/// Basis indices are big-endian over the wire lists: the first listed wire
/// is the most significant bit.
struct LinearGate {
  std::size_t arity_in = 0;
  std::size_t arity_out = 0;
  std::vector<cplx> matrix;  // size rows()*cols(), row-major
  std::string name;          // optional label, kept through serialization

  std::size_t rows() const { return std::size_t{1} << arity_out; }
  std::size_t cols() const { return std::size_t{1} << arity_in; }

  cplx& at(std::size_t row, std::size_t col) { return matrix[row * cols() + col]; }
  const cplx& at(std::size_t row, std::size_t col) const { return matrix[row * cols() + col]; }
};

/// Throws std::invalid_argument if the gate shape or entries are malformed
/// (wrong matrix size, zero total arity, non-finite entries).
void check_gate(const LinearGate& g);

/// Conjugate transpose with the arities swapped. check_gate(g) must hold.
LinearGate adjoint_gate(const LinearGate& g);

bool is_unitary(const LinearGate& g, double tol = 1e-10);

/// True if both shapes match and all entries are exactly equal.
bool gates_equal(const LinearGate& a, const LinearGate& b);

// Built-in gates. Names match the circuit file format.
LinearGate hadamard_gate();
LinearGate identity_gate();
LinearGate pauli_x_gate();
LinearGate cnot_gate();
LinearGate copy_gate();     // |b> -> |b>|b>
LinearGate erase_gate();    // |0>,|1> -> 1 (scalar)
LinearGate prep0_gate();    // 1 -> |0>
LinearGate proj0_gate();    // diag(1, 0): keeps the |0> component of a wire
LinearGate cphase_gate(double theta);  // |x>|y> -> exp(2*pi*i*theta*x*y)|x>|y>

/// Parses built-in gate names: H, CNOT, COPY, ERASE, PREP0, CPHASE(theta),
/// plus I, X, PROJ0. Returns false if the name is not recognized.
bool builtin_gate(const std::string& name, LinearGate& out);

}  // namespace opcirc
