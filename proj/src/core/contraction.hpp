#pragma once

#include <string>

#include "tensor_network.hpp"
#include "width.hpp"

namespace opcirc {

constexpr std::size_t kDefaultMaxFrontierWidth = 26;  // 2^26 amplitudes ~ 1 GiB

struct ContractionLimits {
  std::size_t max_width = kDefaultMaxFrontierWidth;
};

struct ContractionStats {
  std::size_t width = 0;                // width of the bubbling used
  std::size_t peak_frontier_edges = 0;  // max live edge count observed
  unsigned long long multiply_ops = 0;  // complex multiply-adds in the per-step products
  unsigned long long move_ops = 0;      // element moves in slot permutations
  double imag_residual = 0.0;           // |imag| of a value that should be real
};

/// Frontier contraction along the bubbling: swallow vertices in order,
/// keeping the vector over the edges that currently cross the cut. The live
/// edge slots are kept sorted by edge id; each step permutes the consumed
/// slots to the front, multiplies by the vertex tensor reshaped as a matrix,
/// and inserts the produced slots. Returns the circuit value. Throws when a
/// cut would exceed limits.max_width.
cplx contract(const TensorCircuit& t, const Bubbling& b, const ContractionLimits& limits = {},
              ContractionStats* stats = nullptr);

/// <y|Q|x> by contracting the amplitude tensor circuit of q along b.
/// b must be a bubbling of circuit_graph(q).graph.
cplx amplitude(const OperatorCircuit& q, const std::string& y_bits, const Bubbling& b,
               const ContractionLimits& limits = {}, ContractionStats* stats = nullptr);

/// ||answer=0 component of Q|x>||^2 by contracting the mirrored circuit
/// along b, which must be a bubbling of circuit_graph(build_q_prime(q)).
/// The value's imaginary part is reported in stats and must be noise.
double prob_answer_zero(const OperatorCircuit& q, const Bubbling& b,
                        const ContractionLimits& limits = {}, ContractionStats* stats = nullptr);

/// Lifts a bubbling of q's graph to one of build_q_prime(q)'s graph: each
/// step swallows the forward copy of the vertex, then its adjoint copy; the
/// projector goes at the answer terminal's turn. The resulting width is at
/// most about twice the input width plus the maximum degree.
Bubbling q_prime_bubbling(const OperatorCircuit& q, const Bubbling& b);

enum class BubblingStrategy { Auto, Exact, Greedy, Layered };

/// Picks a bubbling of m.graph. Auto = exact below the vertex cap, else the
/// best of layered (when the circuit is layer-tagged) and greedy.
Bubbling resolve_bubbling(const OperatorCircuit& q, const CircuitGraphMap& m,
                          BubblingStrategy strategy,
                          std::size_t exact_cap = kDefaultExactVertexCap);

}  // namespace opcirc
