#include "graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace opcirc {

std::size_t CircuitGraph::degree(VertexId v) const {
  std::size_t d = 0;
  for (const Edge& e : edges) d += (e.u == v) + (e.v == v);
  return d;
}

std::size_t CircuitGraph::max_degree() const {
  std::vector<std::size_t> deg(num_vertices, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::vector<std::size_t>> CircuitGraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(num_vertices);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    inc[edges[i].u].push_back(i);
    inc[edges[i].v].push_back(i);
  }
  return inc;
}

bool CircuitGraph::connected() const {
  if (num_vertices == 0) return true;
  std::vector<std::vector<VertexId>> adj(num_vertices);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(num_vertices, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    ++count;
    for (VertexId w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return count == num_vertices;
}

void CircuitGraph::check() const {
  for (const Edge& e : edges) {
    if (e.u >= num_vertices || e.v >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
  }
  if (!kinds.empty() && kinds.size() != num_vertices)
    throw std::invalid_argument("vertex kind list has wrong size");
}

CircuitGraphMap circuit_graph(const OperatorCircuit& q) {
  require_valid(q);
  CircuitGraphMap m;
  m.num_inputs = q.num_inputs;
  m.num_gates = q.gates.size();
  m.output_order = q.output_wires();

  CircuitGraph& g = m.graph;
  g.num_vertices = m.num_inputs + m.num_gates + m.output_order.size();
  g.kinds.assign(g.num_vertices, VertexKind::Plain);
  for (std::size_t i = 0; i < m.num_inputs; ++i) g.kinds[m.input_vertex(i)] = VertexKind::Input;
  for (std::size_t i = 0; i < m.num_gates; ++i) g.kinds[m.gate_vertex(i)] = VertexKind::Gate;
  for (std::size_t i = 0; i < m.output_order.size(); ++i)
    g.kinds[m.output_vertex(i)] = VertexKind::Output;

  std::map<WireId, VertexId> producer;
  for (WireId i = 0; i < q.num_inputs; ++i) producer[i] = m.input_vertex(i);
  for (std::size_t gi = 0; gi < q.gates.size(); ++gi)
    for (WireId w : q.gates[gi].out_wires) producer[w] = m.gate_vertex(gi);

  for (std::size_t gi = 0; gi < q.gates.size(); ++gi)
    for (WireId w : q.gates[gi].in_wires)
      g.edges.push_back({producer.at(w), m.gate_vertex(gi), w});
  for (std::size_t o = 0; o < m.output_order.size(); ++o)
    g.edges.push_back({producer.at(m.output_order[o]), m.output_vertex(o), m.output_order[o]});

  g.check();
  return m;
}

std::size_t Bubbling::width() const {
  std::size_t w = 0;
  for (const auto& cut : cut_edges) w = std::max(w, cut.size());
  return w;
}

Bubbling make_bubbling(const CircuitGraph& g, std::vector<VertexId> order) {
  if (order.size() != g.num_vertices)
    throw std::invalid_argument("bubbling order is not a permutation: wrong length");
  std::vector<bool> seen(g.num_vertices, false);
  for (VertexId v : order) {
    if (v >= g.num_vertices || seen[v])
      throw std::invalid_argument("bubbling order is not a permutation");
    seen[v] = true;
  }

  std::vector<std::size_t> position(g.num_vertices);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  Bubbling b;
  b.order = std::move(order);
  b.cut_edges.resize(g.num_vertices);
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const auto& e = g.edges[ei];
    std::size_t lo = std::min(position[e.u], position[e.v]);
    std::size_t hi = std::max(position[e.u], position[e.v]);
    for (std::size_t i = lo; i < hi; ++i) b.cut_edges[i].push_back(ei);
  }
  return b;
}

std::size_t bubbling_width(const CircuitGraph& g, const std::vector<VertexId>& order) {
  return make_bubbling(g, order).width();
}

}  // namespace opcirc
