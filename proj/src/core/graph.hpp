#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace opcirc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class VertexKind : std::uint8_t { Input, Gate, Output, Plain };

/// Undirected multigraph. Edges keep their ids (for circuit graphs the edge
/// id is the wire id); self-loops are not allowed.
struct CircuitGraph {
  struct Edge {
    VertexId u, v;
    EdgeId id;
  };
  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<VertexKind> kinds;  // size num_vertices, Plain for imported graphs

  std::size_t degree(VertexId v) const;
  std::size_t max_degree() const;
  /// Edge indices incident to each vertex.
  std::vector<std::vector<std::size_t>> incidence() const;
  bool connected() const;

  void check() const;  // throws on bad endpoints or self-loops
};

/// How the vertices of a circuit graph are numbered:
/// inputs 0..n-1, then gates in list order, then output terminals in
/// output_wires() order.
struct CircuitGraphMap {
  CircuitGraph graph;
  std::size_t num_inputs = 0;
  std::size_t num_gates = 0;
  std::vector<WireId> output_order;  // wire carried by each output terminal

  VertexId input_vertex(std::size_t i) const { return static_cast<VertexId>(i); }
  VertexId gate_vertex(std::size_t g) const { return static_cast<VertexId>(num_inputs + g); }
  VertexId output_vertex(std::size_t o) const {
    return static_cast<VertexId>(num_inputs + num_gates + o);
  }
};

/// One vertex per input terminal, gate, and output terminal; one edge per
/// wire, with the edge id equal to the wire id.
CircuitGraphMap circuit_graph(const OperatorCircuit& q);

/// A total order on the vertices together with the per-step cut profile:
/// cut_edges[i] lists the edge indices with exactly one endpoint among the
/// first i+1 vertices.
struct Bubbling {
  std::vector<VertexId> order;
  std::vector<std::vector<std::size_t>> cut_edges;

  std::size_t width() const;
};

/// Builds the cut profile for the given order. Throws if `order` is not a
/// permutation of the graph's vertices. Multi-edges count with multiplicity.
Bubbling make_bubbling(const CircuitGraph& g, std::vector<VertexId> order);

std::size_t bubbling_width(const CircuitGraph& g, const std::vector<VertexId>& order);

}  // namespace opcirc
