#include "width.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

namespace opcirc {

namespace {

struct AdjInfo {
  std::vector<std::size_t> degree;
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> neighbors;  // (vertex, multiplicity)
  std::vector<std::uint32_t> adj_bits;  // only for num_vertices <= 32
};

AdjInfo adjacency(const CircuitGraph& g) {
  AdjInfo a;
  a.degree.assign(g.num_vertices, 0);
  std::vector<std::map<VertexId, std::size_t>> nb(g.num_vertices);
  for (const auto& e : g.edges) {
    ++a.degree[e.u];
    ++a.degree[e.v];
    ++nb[e.u][e.v];
    ++nb[e.v][e.u];
  }
  a.neighbors.resize(g.num_vertices);
  for (std::size_t v = 0; v < g.num_vertices; ++v)
    a.neighbors[v].assign(nb[v].begin(), nb[v].end());
  if (g.num_vertices <= 32) {
    a.adj_bits.assign(g.num_vertices, 0);
    for (std::size_t v = 0; v < g.num_vertices; ++v)
      for (const auto& [u, mult] : nb[v]) a.adj_bits[v] |= std::uint32_t{1} << u;
  }
  return a;
}

}  // namespace

ExactWidthResult exact_bubble_width(const CircuitGraph& g, std::size_t cap) {
  g.check();
  const std::size_t n = g.num_vertices;
  if (n > cap)
    throw std::runtime_error("exact width search exceeds vertex cap (" + std::to_string(n) +
                             " > " + std::to_string(cap) + ")");
  if (n == 0) return {0, {}};
  if (g.edges.size() >= std::numeric_limits<std::uint16_t>::max())
    throw std::runtime_error("too many edges for exact width search");

  const AdjInfo adj = adjacency(g);
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::uint16_t> cut(full + 1, 0), best(full + 1, 0);
  std::vector<std::uint8_t> choice(full + 1, 0);

  for (std::size_t s = 1; s <= full; ++s) {
    const unsigned low = static_cast<unsigned>(std::countr_zero(s));
    const std::size_t rest = s & (s - 1);
    std::size_t back = 0;
    for (const auto& [u, mult] : adj.neighbors[low])
      if (rest >> u & 1) back += mult;
    cut[s] = static_cast<std::uint16_t>(cut[rest] + adj.degree[low] - 2 * back);

    std::uint16_t m = std::numeric_limits<std::uint16_t>::max();
    std::uint8_t pick = 0;
    for (unsigned v = low; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      const std::uint16_t sub = best[s ^ (std::size_t{1} << v)];
      if (sub < m) {
        m = sub;
        pick = static_cast<std::uint8_t>(v);
      }
    }
    best[s] = std::max(cut[s], m);
    choice[s] = pick;
  }

  ExactWidthResult res;
  res.width = best[full];
  res.order.resize(n);
  std::size_t s = full;
  for (std::size_t i = n; i-- > 0;) {
    res.order[i] = choice[s];
    s ^= std::size_t{1} << choice[s];
  }
  return res;
}

std::size_t exact_path_width(const CircuitGraph& g, std::size_t cap) {
  g.check();
  const std::size_t n = g.num_vertices;
  if (n > cap)
    throw std::runtime_error("exact pathwidth search exceeds vertex cap");
  if (n == 0) return 0;

  const AdjInfo adj = adjacency(g);
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::uint16_t> best(full + 1, 0);
  for (std::size_t s = 1; s <= full; ++s) {
    std::uint16_t boundary = 0;
    for (unsigned v = 0; v < n; ++v)
      if ((s >> v & 1) && (adj.adj_bits[v] & ~s)) ++boundary;
    std::uint16_t m = std::numeric_limits<std::uint16_t>::max();
    for (unsigned v = 0; v < n; ++v)
      if (s >> v & 1) m = std::min(m, best[s ^ (std::size_t{1} << v)]);
    best[s] = std::max(boundary, m);
  }
  return best[full];
}

Bubbling greedy_bubbling(const CircuitGraph& g) {
  g.check();
  const std::size_t n = g.num_vertices;
  const AdjInfo adj = adjacency(g);
  std::vector<std::size_t> back(n, 0);  // edge multiplicity into the swallowed set
  std::vector<bool> done(n, false);
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::ptrdiff_t best_delta = 0;
    VertexId pick = 0;
    bool have = false;
    for (VertexId v = 0; v < n; ++v) {
      if (done[v]) continue;
      const std::ptrdiff_t delta = static_cast<std::ptrdiff_t>(adj.degree[v]) -
                                   2 * static_cast<std::ptrdiff_t>(back[v]);
      if (!have || delta < best_delta) {
        best_delta = delta;
        pick = v;
        have = true;
      }
    }
    done[pick] = true;
    order.push_back(pick);
    for (const auto& [u, mult] : adj.neighbors[pick])
      if (!done[u]) back[u] += mult;
  }
  return make_bubbling(g, std::move(order));
}

Bubbling layered_bubbling(const OperatorCircuit& q) { return layered_bubbling(q, circuit_graph(q)); }

Bubbling layered_bubbling(const OperatorCircuit& q, const CircuitGraphMap& m) {
  if (!q.has_layers())
    throw std::invalid_argument("layered bubbling requires layer tags on every gate");

  // consumer gate of each wire, if any
  std::map<WireId, std::size_t> consumer;
  for (std::size_t gi = 0; gi < q.gates.size(); ++gi)
    for (WireId w : q.gates[gi].in_wires) consumer[w] = gi;
  std::map<WireId, std::size_t> producer_gate;
  for (std::size_t gi = 0; gi < q.gates.size(); ++gi)
    for (WireId w : q.gates[gi].out_wires) producer_gate[w] = gi;

  // key: (layer, rank, wire id, stable index); rank orders inputs before
  // gates before outputs within a layer
  using Key = std::tuple<long, int, WireId, std::size_t>;
  std::vector<std::pair<Key, VertexId>> items;
  items.reserve(m.graph.num_vertices);

  for (std::size_t i = 0; i < m.num_inputs; ++i) {
    auto it = consumer.find(static_cast<WireId>(i));
    const long layer = it != consumer.end() ? q.gates[it->second].layer : 0;
    items.push_back({{layer, 0, static_cast<WireId>(i), i}, m.input_vertex(i)});
  }
  for (std::size_t gi = 0; gi < q.gates.size(); ++gi) {
    const GateApp& g = q.gates[gi];
    WireId key_wire = 0;
    if (!g.out_wires.empty())
      key_wire = *std::min_element(g.out_wires.begin(), g.out_wires.end());
    else if (!g.in_wires.empty())
      key_wire = *std::min_element(g.in_wires.begin(), g.in_wires.end());
    items.push_back({{g.layer, 1, key_wire, gi}, m.gate_vertex(gi)});
  }
  for (std::size_t o = 0; o < m.output_order.size(); ++o) {
    const WireId w = m.output_order[o];
    auto it = producer_gate.find(w);
    const long layer = it != producer_gate.end() ? q.gates[it->second].layer : 0;
    items.push_back({{layer, 2, w, o}, m.output_vertex(o)});
  }

  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<VertexId> order;
  order.reserve(items.size());
  for (const auto& [key, v] : items) order.push_back(v);
  return make_bubbling(m.graph, std::move(order));
}

std::size_t PathDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& bag : bags) w = std::max(w, bag.size());
  return w;
}

void check_path_decomposition(const CircuitGraph& g, const PathDecomposition& p) {
  std::vector<std::size_t> first(g.num_vertices, SIZE_MAX), last(g.num_vertices, SIZE_MAX);
  std::vector<std::vector<bool>> contains(p.bags.size(),
                                          std::vector<bool>(g.num_vertices, false));
  for (std::size_t i = 0; i < p.bags.size(); ++i) {
    for (VertexId v : p.bags[i]) {
      if (v >= g.num_vertices) throw std::invalid_argument("bag vertex out of range");
      contains[i][v] = true;
      if (first[v] == SIZE_MAX) first[v] = i;
      last[v] = i;
    }
  }
  for (std::size_t v = 0; v < g.num_vertices; ++v) {
    if (first[v] == SIZE_MAX) continue;
    for (std::size_t i = first[v]; i <= last[v]; ++i)
      if (!contains[i][v])
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " does not occupy a contiguous bag interval");
  }
  for (const auto& e : g.edges) {
    bool covered = false;
    for (std::size_t i = 0; i < p.bags.size() && !covered; ++i)
      covered = contains[i][e.u] && contains[i][e.v];
    if (!covered)
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") not covered by any bag");
  }
}

PathDecomposition path_decomposition_from_bubbling(const CircuitGraph& g, const Bubbling& b) {
  PathDecomposition p;
  for (const auto& cut : b.cut_edges) {
    if (cut.empty()) continue;
    std::vector<VertexId> bag;
    for (std::size_t ei : cut) {
      bag.push_back(g.edges[ei].u);
      bag.push_back(g.edges[ei].v);
    }
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    p.bags.push_back(std::move(bag));
  }
  return p;
}

Bubbling bubbling_from_path_decomposition(const CircuitGraph& g, const PathDecomposition& p) {
  check_path_decomposition(g, p);
  std::vector<bool> listed(g.num_vertices, false);
  std::vector<VertexId> order;
  order.reserve(g.num_vertices);
  for (const auto& bag : p.bags) {
    std::vector<VertexId> fresh;
    for (VertexId v : bag)
      if (!listed[v]) {
        listed[v] = true;
        fresh.push_back(v);
      }
    std::sort(fresh.begin(), fresh.end());
    order.insert(order.end(), fresh.begin(), fresh.end());
  }
  for (VertexId v = 0; v < g.num_vertices; ++v)
    if (!listed[v]) order.push_back(v);
  return make_bubbling(g, std::move(order));
}

}  // namespace opcirc
