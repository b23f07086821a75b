#pragma once

#include <vector>

#include "circuit.hpp"

namespace opcirc {

constexpr std::size_t kDefaultDenseWireCap = 20;

/// Dense amplitudes over the listed live wires, big-endian (first listed
/// wire is the most significant bit). Not necessarily normalized. A state
/// with zero wires is a single scalar.
struct StateVector {
  std::vector<WireId> wire_order;
  std::vector<cplx> amplitudes;  // size 2^wire_order.size()
};

/// Reorders the live wires to the given order (a permutation of the current
/// one), permuting amplitudes accordingly.
StateVector reordered(const StateVector& s, const std::vector<WireId>& new_order);

double norm(const StateVector& s);

/// <a|b> with both states over the same wires (b is reordered to match a).
cplx inner_product(const StateVector& a, const StateVector& b);

/// Applies every gate of q in list order, starting from the basis state
/// given by input_bits. The final wire order is ascending wire id, matching
/// output_wires(). Throws if the live-wire count ever exceeds wire_cap.
StateVector dense_apply(const OperatorCircuit& q, std::size_t wire_cap = kDefaultDenseWireCap);

/// Same but starting from an arbitrary state over the input wires
/// 0..num_inputs-1 (input_bits is ignored). Supports superposition inputs.
StateVector dense_apply_initial(const OperatorCircuit& q, const StateVector& initial,
                                std::size_t wire_cap = kDefaultDenseWireCap);

/// ||projection of dense_apply(q) onto answer-wire = 0||^2.
double prob_answer_zero_dense(const OperatorCircuit& q,
                              std::size_t wire_cap = kDefaultDenseWireCap);

/// <y|Q|x> read off the dense final state; y is over output_wires() order.
cplx amplitude_dense(const OperatorCircuit& q, const std::string& y_bits,
                     std::size_t wire_cap = kDefaultDenseWireCap);

/// Basis state |bits> over the given wires.
StateVector basis_state(const std::vector<WireId>& wires, const std::string& bits);

}  // namespace opcirc
