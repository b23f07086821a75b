#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace opcirc {

constexpr std::size_t kDefaultExactVertexCap = 20;

struct ExactWidthResult {
  std::size_t width = 0;
  std::vector<VertexId> order;  // a witnessing optimal order
};

/// Minimum over all vertex orders of the maximum prefix edge cut, with a
/// witnessing order. Dynamic program over vertex subsets: the best width of
/// a prefix depends only on its set. Throws when num_vertices > cap.
ExactWidthResult exact_bubble_width(const CircuitGraph& g,
                                    std::size_t cap = kDefaultExactVertexCap);

/// Exact pathwidth, computed as the vertex separation number (the same
/// subset DP with vertex-boundary cost instead of edge-boundary cost).
std::size_t exact_path_width(const CircuitGraph& g, std::size_t cap = kDefaultExactVertexCap);

/// Repeatedly swallows the vertex minimizing the resulting cut size, ties
/// broken by lowest vertex id. The result's width upper-bounds the exact one.
Bubbling greedy_bubbling(const CircuitGraph& g);

/// Order by the builder's layer tags: input terminals go at their consumer
/// gate's layer (before its gates), output terminals at their producer's
/// layer (after its gates), gates within a layer by ascending wire id.
/// Requires every gate to carry a layer tag.
Bubbling layered_bubbling(const OperatorCircuit& q);
Bubbling layered_bubbling(const OperatorCircuit& q, const CircuitGraphMap& m);

struct PathDecomposition {
  std::vector<std::vector<VertexId>> bags;

  std::size_t width() const;  // max bag size (not the off-by-one convention)
};

/// Checks that every edge is covered by some bag and every vertex occupies
/// a contiguous interval of bags. Throws on violation.
void check_path_decomposition(const CircuitGraph& g, const PathDecomposition& p);

/// Bag i = endpoints of the edges crossing the cut after step i; empty cuts
/// are dropped. Max bag size is at most twice the bubbling width.
PathDecomposition path_decomposition_from_bubbling(const CircuitGraph& g, const Bubbling& b);

/// Vertices ordered by first bag of appearance (ascending id within a bag);
/// vertices in no bag go last. Width is at most max_degree * max bag size.
Bubbling bubbling_from_path_decomposition(const CircuitGraph& g, const PathDecomposition& p);

}  // namespace opcirc
