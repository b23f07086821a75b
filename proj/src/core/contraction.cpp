#include "contraction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace opcirc {

namespace {

/// Permutes the slot order of a frontier vector. Slots are big-endian:
/// slot 0 is the most significant bit of the index.
std::vector<cplx> permute_slots(const std::vector<cplx>& amps,
                                const std::vector<EdgeId>& cur,
                                const std::vector<EdgeId>& target,
                                unsigned long long* moves) {
  const std::size_t n = cur.size();
  if (cur == target) return amps;
  std::vector<unsigned> from_shift(n), to_shift(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto it = std::find(cur.begin(), cur.end(), target[j]);
    if (it == cur.end()) throw std::logic_error("permute_slots: slot mismatch");
    from_shift[j] = static_cast<unsigned>(n - 1 - (it - cur.begin()));
    to_shift[j] = static_cast<unsigned>(n - 1 - j);
  }
  std::vector<cplx> out(amps.size());
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    std::size_t to = 0;
    for (std::size_t j = 0; j < n; ++j) to |= ((idx >> from_shift[j]) & 1u) << to_shift[j];
    out[to] = amps[idx];
  }
  if (moves) *moves += amps.size();
  return out;
}

}  // namespace

cplx contract(const TensorCircuit& t, const Bubbling& b, const ContractionLimits& limits,
              ContractionStats* stats) {
  t.check();
  const CircuitGraph& g = t.graph;
  if (b.order.size() != g.num_vertices)
    throw std::invalid_argument("bubbling does not match graph: wrong vertex count");
  {
    std::vector<bool> seen(g.num_vertices, false);
    for (VertexId v : b.order) {
      if (v >= g.num_vertices || seen[v])
        throw std::invalid_argument("bubbling does not match graph: not a permutation");
      seen[v] = true;
    }
  }

  ContractionStats local;
  ContractionStats& st = stats ? *stats : local;
  st = ContractionStats{};
  const bool have_profile = b.cut_edges.size() == b.order.size();
  st.width = have_profile ? b.width() : 0;

  std::vector<std::size_t> position(g.num_vertices);
  for (std::size_t i = 0; i < b.order.size(); ++i) position[b.order[i]] = i;

  // incident (edge id, other endpoint) lists
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> inc(g.num_vertices);
  for (const auto& e : g.edges) {
    inc[e.u].push_back({e.id, e.v});
    inc[e.v].push_back({e.id, e.u});
  }

  std::vector<EdgeId> frontier;               // sorted by edge id
  std::vector<cplx> amps{cplx{1.0}};          // scalar 1 over the empty frontier

  for (std::size_t step = 0; step < b.order.size(); ++step) {
    const VertexId v = b.order[step];
    const Tensor& tensor = t.tensors[v];
    const std::size_t deg = tensor.edges.size();

    // split incident edges by whether the other endpoint is swallowed
    std::vector<EdgeId> e1, e2;
    for (const auto& [eid, other] : inc[v])
      (position[other] < step ? e1 : e2).push_back(eid);
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());

    // rest of the frontier, already sorted
    std::vector<EdgeId> rest;
    for (EdgeId e : frontier)
      if (!std::binary_search(e1.begin(), e1.end(), e)) rest.push_back(e);
    if (rest.size() + e1.size() != frontier.size())
      throw std::logic_error("contract: frontier out of sync with cut");

    std::vector<EdgeId> next_frontier = rest;
    next_frontier.insert(next_frontier.end(), e2.begin(), e2.end());
    std::sort(next_frontier.begin(), next_frontier.end());
    if (next_frontier.size() > limits.max_width)
      throw std::runtime_error("frontier exceeds the width cap (" +
                               std::to_string(next_frontier.size()) + " > " +
                               std::to_string(limits.max_width) +
                               "); a narrower bubbling is needed");
    // the live edges must be exactly the edges crossing this cut
    if (have_profile && next_frontier.size() != b.cut_edges[step].size())
      throw std::logic_error("contract: frontier out of sync with the cut profile");

    // vertex tensor as a matrix over (sorted e2) x (sorted e1)
    std::vector<unsigned> bit_shift(deg);  // within the tensor's own index
    for (std::size_t j = 0; j < deg; ++j) bit_shift[j] = static_cast<unsigned>(deg - 1 - j);
    std::vector<int> slot_of_edge(deg);  // output bit position in (l1,l2) split
    std::vector<bool> edge_in_e1(deg);
    for (std::size_t j = 0; j < deg; ++j) {
      const EdgeId id = tensor.edges[j];
      auto i1 = std::lower_bound(e1.begin(), e1.end(), id);
      if (i1 != e1.end() && *i1 == id) {
        edge_in_e1[j] = true;
        slot_of_edge[j] = static_cast<int>(i1 - e1.begin());
      } else {
        auto i2 = std::lower_bound(e2.begin(), e2.end(), id);
        edge_in_e1[j] = false;
        slot_of_edge[j] = static_cast<int>(i2 - e2.begin());
      }
    }
    const std::size_t n1 = e1.size(), n2 = e2.size();
    std::vector<cplx> matrix((std::size_t{1} << n2) << n1, cplx{});
    for (std::size_t idx = 0; idx < tensor.entries.size(); ++idx) {
      std::size_t l1 = 0, l2 = 0;
      for (std::size_t j = 0; j < deg; ++j) {
        const std::size_t bit = (idx >> bit_shift[j]) & 1u;
        if (edge_in_e1[j])
          l1 |= bit << (n1 - 1 - static_cast<std::size_t>(slot_of_edge[j]));
        else
          l2 |= bit << (n2 - 1 - static_cast<std::size_t>(slot_of_edge[j]));
      }
      matrix[(l2 << n1) | l1] = tensor.entries[idx];
    }

    // bring consumed slots to the front: frontier -> [e1..., rest...]
    std::vector<EdgeId> staged = e1;
    staged.insert(staged.end(), rest.begin(), rest.end());
    amps = permute_slots(amps, frontier, staged, &st.move_ops);

    // multiply: out[l2, r] = sum_l1 matrix[l2, l1] * amps[l1, r]
    const std::size_t nr = rest.size();
    std::vector<cplx> out(std::size_t{1} << (n2 + nr), cplx{});
    const std::size_t r_count = std::size_t{1} << nr;
    for (std::size_t l2 = 0; l2 < (std::size_t{1} << n2); ++l2) {
      cplx* dst = out.data() + (l2 << nr);
      for (std::size_t l1 = 0; l1 < (std::size_t{1} << n1); ++l1) {
        const cplx coef = matrix[(l2 << n1) | l1];
        if (coef == cplx{}) continue;
        const cplx* src = amps.data() + (l1 << nr);
        for (std::size_t r = 0; r < r_count; ++r) dst[r] += coef * src[r];
      }
    }
    st.multiply_ops += (std::size_t{1} << (n1 + n2)) * r_count;

    // restore the canonical sorted slot order
    std::vector<EdgeId> produced = e2;
    produced.insert(produced.end(), rest.begin(), rest.end());
    amps = permute_slots(out, produced, next_frontier, &st.move_ops);
    frontier = std::move(next_frontier);
    st.peak_frontier_edges = std::max(st.peak_frontier_edges, frontier.size());
  }

  if (!frontier.empty()) throw std::logic_error("contract: frontier not empty at the end");
  if (!have_profile) st.width = st.peak_frontier_edges;
  return amps[0];
}

cplx amplitude(const OperatorCircuit& q, const std::string& y_bits, const Bubbling& b,
               const ContractionLimits& limits, ContractionStats* stats) {
  return contract(tensor_circuit_for_amplitude(q, y_bits), b, limits, stats);
}

double prob_answer_zero(const OperatorCircuit& q, const Bubbling& b,
                        const ContractionLimits& limits, ContractionStats* stats) {
  const QPrime qp = build_q_prime(q, ProjectorKind::Proj0);
  const cplx value = contract(tensor_circuit_for_q_prime(qp, q.input_bits), b, limits, stats);
  if (stats) stats->imag_residual = std::abs(value.imag());
  return value.real();
}

Bubbling q_prime_bubbling(const OperatorCircuit& q, const Bubbling& b) {
  require_valid(q);
  if (!q.answer_wire) throw std::invalid_argument("q_prime_bubbling: no answer wire");
  const CircuitGraphMap mq = circuit_graph(q);
  if (b.order.size() != mq.graph.num_vertices)
    throw std::invalid_argument("q_prime_bubbling: bubbling does not match the circuit graph");

  const QPrime qp = build_q_prime(q);
  const CircuitGraphMap mp = circuit_graph(qp.circuit);
  const std::size_t n = q.num_inputs;
  const std::size_t gates = q.gates.size();

  // position of each Q' output terminal by wire id
  std::map<WireId, std::size_t> out_pos;
  for (std::size_t o = 0; o < mp.output_order.size(); ++o) out_pos[mp.output_order[o]] = o;

  std::vector<VertexId> order;
  order.reserve(mp.graph.num_vertices);
  for (VertexId v : b.order) {
    if (v < n) {
      // input terminal: forward copy, then the mirrored output terminal
      order.push_back(mp.input_vertex(v));
      order.push_back(
          mp.output_vertex(out_pos.at(qp.mirrored_output_of_input[v])));
    } else if (v < n + gates) {
      const std::size_t gi = v - n;
      order.push_back(mp.gate_vertex(gi));                  // forward gate
      order.push_back(mp.gate_vertex(2 * gates - gi));      // its adjoint
    } else {
      // output terminal of q: the answer becomes the projector vertex, the
      // others vanish into the adjoint half
      const std::size_t o = v - n - gates;
      if (mq.output_order[o] == *q.answer_wire) order.push_back(mp.gate_vertex(gates));
    }
  }
  return make_bubbling(mp.graph, std::move(order));
}

Bubbling resolve_bubbling(const OperatorCircuit& q, const CircuitGraphMap& m,
                          BubblingStrategy strategy, std::size_t exact_cap) {
  switch (strategy) {
    case BubblingStrategy::Exact: {
      ExactWidthResult r = exact_bubble_width(m.graph, exact_cap);
      return make_bubbling(m.graph, std::move(r.order));
    }
    case BubblingStrategy::Greedy:
      return greedy_bubbling(m.graph);
    case BubblingStrategy::Layered:
      return layered_bubbling(q, m);
    case BubblingStrategy::Auto:
      break;
  }
  if (m.graph.num_vertices <= exact_cap) {
    ExactWidthResult r = exact_bubble_width(m.graph, exact_cap);
    return make_bubbling(m.graph, std::move(r.order));
  }
  Bubbling best = greedy_bubbling(m.graph);
  if (q.has_layers()) {
    Bubbling layered = layered_bubbling(q, m);
    if (layered.width() < best.width()) return layered;
  }
  return best;
}

}  // namespace opcirc
