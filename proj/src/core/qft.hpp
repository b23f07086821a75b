#pragma once

#include <cstdint>
#include <vector>

#include "circuit.hpp"
#include "dense_sim.hpp"

namespace opcirc {

/// Fresh wire ids in the builder stay below this; the n phase-carrying
/// output wires get ids kMuWireBase + j so that the outputs sort in block
/// order mu_0 .. mu_{n-1}.
constexpr WireId kMuWireBase = WireId{1} << 20;

struct QftParams {
  std::size_t n = 1;      // qubit count
  double epsilon = 0.01;  // target approximation error, in (0,1)
  std::size_t k = 1;      // phase precision digits, 1 <= k <= n

  /// k = ceil(2*log2(n/epsilon)) + 2, clamped to [1, n]. For k >= n the
  /// construction is exact, so the clamp loses nothing.
  static QftParams from_epsilon(std::size_t n, double epsilon);
  static QftParams from_k(std::size_t n, std::size_t k);

  void check() const;  // throws on out-of-range values
};

/// Balanced binary tree of copy gates fanning one wire out to k wires
/// carrying the same classical bit: k-1 gates, depth ceil(log2 k).
OperatorCircuit copy_tree(std::size_t k);
std::size_t copy_tree_depth(std::size_t k);

/// Stage circuits, exposed for inspection and stage-level tests. Wire
/// layout: block p (one per input bit, most significant first) is k copy
/// wires then k fresh |0> ancillas, 2nk wires in total.
OperatorCircuit build_stage1(const QftParams& p);  // |x> -> copies + ancillas
OperatorCircuit build_stage2(const QftParams& p);  // phase gadgets: one ancilla per block becomes mu
OperatorCircuit build_stage3(const QftParams& p);  // erase everything except the n mu wires

struct QftBuild {
  QftParams params;
  OperatorCircuit circuit;
  std::vector<WireId> mu_wires;  // output wire of gadget j, = kMuWireBase + j
  /// Gate indices of each gadget's Hadamard and controlled phases.
  std::vector<std::vector<std::size_t>> gadget_gates;
  std::size_t copy_count = 0, prep_count = 0, phase_count = 0, erase_count = 0;
};

/// The full approximate-transform circuit. Gate set equals the composition
/// of the three stages; the gate list is scheduled column by column (one
/// column per input bit) so that the number of simultaneously live wires
/// stays near n + k, and every gate carries its column as the layer tag.
/// The answer wire is the first mu output.
QftBuild build_approx_qft(const QftParams& p);

/// 2^n x 2^n discrete Fourier matrix, entries w^{xy}/sqrt(2^n) with
/// w = exp(2*pi*i/2^n), row-major. Under the builder's output order (mu_0
/// first, big-endian) no bit-reversal is needed: column x is the exact
/// transform of basis input x. n <= 12.
std::vector<cplx> exact_qft_matrix(std::size_t n);
std::vector<cplx> exact_qft_column(std::size_t n, std::size_t x);

/// (|0> + exp(2*pi*i*theta)|1>)/sqrt(2).
struct MuState {
  double theta = 0.0;
  std::vector<cplx> amplitudes() const;
};

/// Product of mu states with the phase of output j truncated to the k bits
/// x_j x_{j-1} ... x_{j-k+1}; equals exact_qft_column when k = n.
std::vector<cplx> psi_tilde(std::size_t n, std::size_t k, std::size_t x);

/// Phase angle 0.x_j x_{j-1} ... of output j, truncated to k digits.
double mu_theta(std::size_t n, std::size_t k, std::size_t x, std::size_t j);

struct QftWidthRow {
  std::size_t n = 0, k = 0, gate_count = 0, width = 0;
  double width_over_k2 = 0.0;
};

/// Builds the circuit for each n at the given epsilon, measures the width
/// of the layered bubbling, and checks width <= 4k^2.
std::vector<QftWidthRow> qft_width_report(const std::vector<std::size_t>& ns,
                                          double epsilon = 0.01);

}  // namespace opcirc
