#include "tensor_network.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

namespace opcirc {

void TensorCircuit::check() const {
  graph.check();
  if (tensors.size() != graph.num_vertices)
    throw std::invalid_argument("tensor count does not match vertex count");
  std::set<EdgeId> ids;
  for (const auto& e : graph.edges)
    if (!ids.insert(e.id).second)
      throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
  // incident edge ids per vertex, from the graph
  std::vector<std::multiset<EdgeId>> want(graph.num_vertices);
  for (const auto& e : graph.edges) {
    want[e.u].insert(e.id);
    want[e.v].insert(e.id);
  }
  for (std::size_t v = 0; v < tensors.size(); ++v) {
    const Tensor& t = tensors[v];
    if (t.entries.size() != (std::size_t{1} << t.edges.size()))
      throw std::invalid_argument("tensor entry count is not 2^degree at vertex " +
                                  std::to_string(v));
    std::set<EdgeId> uniq(t.edges.begin(), t.edges.end());
    if (uniq.size() != t.edges.size())
      throw std::invalid_argument("tensor has duplicate incident edge at vertex " +
                                  std::to_string(v));
    std::multiset<EdgeId> got(t.edges.begin(), t.edges.end());
    if (got != want[v])
      throw std::invalid_argument("tensor edges do not match graph incidence at vertex " +
                                  std::to_string(v));
  }
}

Tensor gate_tensor(const LinearGate& g, const std::vector<EdgeId>& in_edges,
                   const std::vector<EdgeId>& out_edges) {
  check_gate(g);
  if (in_edges.size() != g.arity_in || out_edges.size() != g.arity_out)
    throw std::invalid_argument("gate_tensor: edge lists do not match arities");
  Tensor t;
  t.edges = in_edges;
  t.edges.insert(t.edges.end(), out_edges.begin(), out_edges.end());
  const std::size_t m = g.arity_in, n = g.arity_out;
  t.entries.resize(std::size_t{1} << (m + n));
  for (std::size_t in = 0; in < (std::size_t{1} << m); ++in)
    for (std::size_t out = 0; out < (std::size_t{1} << n); ++out)
      t.entries[(in << n) | out] = g.matrix[out * (std::size_t{1} << m) + in];
  return t;
}

namespace {

Tensor selector_tensor(EdgeId edge, char bit) {
  Tensor t;
  t.edges = {edge};
  t.entries = {bit == '0' ? cplx{1.0} : cplx{0.0}, bit == '1' ? cplx{1.0} : cplx{0.0}};
  return t;
}

TensorCircuit build(const OperatorCircuit& q, const CircuitGraphMap& m,
                    const std::string& boundary_bits) {
  TensorCircuit t;
  t.graph = m.graph;
  t.tensors.resize(m.graph.num_vertices);
  for (std::size_t i = 0; i < m.num_inputs; ++i)
    t.tensors[m.input_vertex(i)] = selector_tensor(static_cast<EdgeId>(i), q.input_bits[i]);
  for (std::size_t gi = 0; gi < q.gates.size(); ++gi) {
    const GateApp& g = q.gates[gi];
    t.tensors[m.gate_vertex(gi)] = gate_tensor(g.gate, g.in_wires, g.out_wires);
  }
  for (std::size_t o = 0; o < m.output_order.size(); ++o)
    t.tensors[m.output_vertex(o)] = selector_tensor(m.output_order[o], boundary_bits[o]);
  t.check();
  return t;
}

}  // namespace

TensorCircuit tensor_circuit_for_amplitude(const OperatorCircuit& q, const std::string& y_bits) {
  return tensor_circuit_for_amplitude(q, y_bits, circuit_graph(q));
}

TensorCircuit tensor_circuit_for_amplitude(const OperatorCircuit& q, const std::string& y_bits,
                                           const CircuitGraphMap& m) {
  if (y_bits.size() != m.output_order.size())
    throw std::invalid_argument("y has wrong length: expected " +
                                std::to_string(m.output_order.size()) + ", got " +
                                std::to_string(y_bits.size()));
  for (char c : y_bits)
    if (c != '0' && c != '1') throw std::invalid_argument("y must contain only 0/1");
  return build(q, m, y_bits);
}

TensorCircuit tensor_circuit_for_q_prime(const QPrime& qp, const std::string& input_bits) {
  const CircuitGraphMap m = circuit_graph(qp.circuit);
  if (input_bits.size() != qp.mirrored_output_of_input.size())
    throw std::invalid_argument("input bit string has wrong length");
  // bra bits in output order: mirrored output of input i selects bit i
  std::map<WireId, char> bra;
  for (std::size_t i = 0; i < input_bits.size(); ++i)
    bra[qp.mirrored_output_of_input[i]] = input_bits[i];
  std::string y;
  for (WireId w : m.output_order) y.push_back(bra.at(w));
  return build(qp.circuit, m, y);
}

cplx value_brute_force(const TensorCircuit& t, std::size_t edge_cap) {
  t.check();
  const std::size_t ne = t.graph.edges.size();
  if (ne > edge_cap)
    throw std::runtime_error("brute-force value exceeds edge cap (" + std::to_string(ne) +
                             " > " + std::to_string(edge_cap) + ")");

  // position of each edge id in the global labeling word
  std::map<EdgeId, std::size_t> edge_pos;
  for (std::size_t i = 0; i < ne; ++i) edge_pos[t.graph.edges[i].id] = i;

  // per vertex: bit position of each incident edge, big-endian in listed order
  std::vector<std::vector<std::size_t>> slots(t.tensors.size());
  for (std::size_t v = 0; v < t.tensors.size(); ++v)
    for (EdgeId e : t.tensors[v].edges) slots[v].push_back(edge_pos.at(e));

  cplx total = 0.0;
  for (std::size_t label = 0; label < (std::size_t{1} << ne); ++label) {
    cplx prod = 1.0;
    for (std::size_t v = 0; v < t.tensors.size() && prod != cplx{}; ++v) {
      std::size_t idx = 0;
      for (std::size_t s : slots[v]) idx = (idx << 1) | ((label >> s) & 1u);
      prod *= t.tensors[v].entries[idx];
    }
    total += prod;
  }
  return total;
}

std::string dump_tensor_circuit(const TensorCircuit& t) {
  std::string out;
  char buf[64];
  for (std::size_t v = 0; v < t.tensors.size(); ++v) {
    out += "vertex " + std::to_string(v) + " edges [";
    for (std::size_t i = 0; i < t.tensors[v].edges.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(t.tensors[v].edges[i]);
    }
    out += "] entries [";
    for (std::size_t i = 0; i < t.tensors[v].entries.size(); ++i) {
      if (i) out += " ";
      std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", t.tensors[v].entries[i].real(),
                    t.tensors[v].entries[i].imag());
      out += buf;
    }
    out += "]\n";
  }
  return out;
}

}  // namespace opcirc
