#pragma once

#include <string>
#include <vector>

#include "circuit.hpp"
#include "graph.hpp"

namespace opcirc {

constexpr std::size_t kDefaultBruteForceEdgeCap = 22;

/// A complex tensor attached to a vertex: one entry per 0/1 labeling of its
/// incident edges, indexed big-endian in the listed edge order. A degree-0
/// tensor is a single scalar.
struct Tensor {
  std::vector<EdgeId> edges;  // distinct ids
  std::vector<cplx> entries;  // size 2^edges.size()
};

/// A graph with one tensor per vertex; the tensor edge lists must match the
/// graph's incidence exactly (every edge appears in exactly two tensors).
struct TensorCircuit {
  CircuitGraph graph;
  std::vector<Tensor> tensors;

  void check() const;  // throws on any mismatch
};

/// Tensor circuit computing <y|Q|x>: gate vertices carry the gate matrix
/// reshaped over [in edges..., out edges...], input terminals select the
/// circuit's input bits, output terminals select y (over output_wires()
/// order). Edge ids are wire ids.
TensorCircuit tensor_circuit_for_amplitude(const OperatorCircuit& q, const std::string& y_bits);
TensorCircuit tensor_circuit_for_amplitude(const OperatorCircuit& q, const std::string& y_bits,
                                           const CircuitGraphMap& m);

/// Tensor circuit whose value is <x|Q'|x>: built from qp.circuit with the
/// bra side selecting the input bits on the mirrored outputs.
TensorCircuit tensor_circuit_for_q_prime(const QPrime& qp, const std::string& input_bits);

/// Reshapes a gate matrix into a vertex tensor over [in..., out...] edges.
Tensor gate_tensor(const LinearGate& g, const std::vector<EdgeId>& in_edges,
                   const std::vector<EdgeId>& out_edges);

/// Sum over all 2^|E| edge labelings of the product of tensor entries.
/// The independent oracle for the frontier contraction.
cplx value_brute_force(const TensorCircuit& t, std::size_t edge_cap = kDefaultBruteForceEdgeCap);

/// Debug dump: one line per vertex with incident edges and entries.
std::string dump_tensor_circuit(const TensorCircuit& t);

}  // namespace opcirc
