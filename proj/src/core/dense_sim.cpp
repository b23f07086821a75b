#include "dense_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opcirc {

namespace {

std::size_t index_of(const std::vector<WireId>& order, WireId w) {
  auto it = std::find(order.begin(), order.end(), w);
  if (it == order.end()) throw std::logic_error("wire not live: " + std::to_string(w));
  return static_cast<std::size_t>(it - order.begin());
}

}  // namespace

StateVector reordered(const StateVector& s, const std::vector<WireId>& new_order) {
  const std::size_t n = s.wire_order.size();
  if (new_order.size() != n) throw std::invalid_argument("reorder: wire count mismatch");
  if (new_order == s.wire_order) return s;
  // shift[j] = bit position (from the right) of new wire j in the old index.
  std::vector<unsigned> old_shift(n), new_shift(n);
  for (std::size_t j = 0; j < n; ++j) {
    old_shift[j] = static_cast<unsigned>(n - 1 - index_of(s.wire_order, new_order[j]));
    new_shift[j] = static_cast<unsigned>(n - 1 - j);
  }
  StateVector out;
  out.wire_order = new_order;
  out.amplitudes.assign(s.amplitudes.size(), cplx{});
  for (std::size_t idx = 0; idx < s.amplitudes.size(); ++idx) {
    std::size_t to = 0;
    for (std::size_t j = 0; j < n; ++j)
      to |= ((idx >> old_shift[j]) & 1u) << new_shift[j];
    out.amplitudes[to] = s.amplitudes[idx];
  }
  return out;
}

double norm(const StateVector& s) {
  double sum = 0.0;
  for (const cplx& a : s.amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  StateVector bb = reordered(b, a.wire_order);
  cplx dot = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    dot += std::conj(a.amplitudes[i]) * bb.amplitudes[i];
  return dot;
}

StateVector basis_state(const std::vector<WireId>& wires, const std::string& bits) {
  if (wires.size() != bits.size()) throw std::invalid_argument("basis_state: length mismatch");
  StateVector s;
  s.wire_order = wires;
  s.amplitudes.assign(std::size_t{1} << wires.size(), cplx{});
  std::size_t idx = 0;
  for (char c : bits) idx = (idx << 1) | static_cast<std::size_t>(c == '1');
  s.amplitudes[idx] = 1.0;
  return s;
}

namespace {

void apply_gate(StateVector& s, const GateApp& g, std::size_t wire_cap) {
  const std::size_t m = g.gate.arity_in;
  const std::size_t n_out = g.gate.arity_out;
  const std::size_t live = s.wire_order.size();

  std::vector<std::size_t> in_pos;
  for (WireId w : g.in_wires) in_pos.push_back(index_of(s.wire_order, w));

  std::vector<WireId> keep;
  std::vector<std::size_t> keep_pos;
  for (std::size_t p = 0; p < live; ++p) {
    if (std::find(in_pos.begin(), in_pos.end(), p) == in_pos.end()) {
      keep.push_back(s.wire_order[p]);
      keep_pos.push_back(p);
    }
  }

  const std::size_t new_live = keep.size() + n_out;
  if (new_live > wire_cap)
    throw std::runtime_error("dense simulation exceeds live-wire cap (" +
                             std::to_string(new_live) + " > " + std::to_string(wire_cap) + ")");

  // New order: kept wires (most significant) then the gate outputs.
  std::vector<cplx> next(std::size_t{1} << new_live, cplx{});
  const std::size_t keep_count = keep.size();
  for (std::size_t kb = 0; kb < (std::size_t{1} << keep_count); ++kb) {
    std::size_t base = 0;
    for (std::size_t j = 0; j < keep_count; ++j)
      base |= ((kb >> (keep_count - 1 - j)) & 1u) << (live - 1 - keep_pos[j]);
    for (std::size_t c = 0; c < (std::size_t{1} << m); ++c) {
      std::size_t old_idx = base;
      for (std::size_t j = 0; j < m; ++j)
        old_idx |= ((c >> (m - 1 - j)) & 1u) << (live - 1 - in_pos[j]);
      const cplx amp = s.amplitudes[old_idx];
      if (amp == cplx{}) continue;
      for (std::size_t r = 0; r < (std::size_t{1} << n_out); ++r) {
        const cplx coef = g.gate.matrix[r * (std::size_t{1} << m) + c];
        if (coef == cplx{}) continue;
        next[(kb << n_out) | r] += coef * amp;
      }
    }
  }

  s.wire_order = keep;
  s.wire_order.insert(s.wire_order.end(), g.out_wires.begin(), g.out_wires.end());
  s.amplitudes = std::move(next);
}

StateVector run(const OperatorCircuit& q, StateVector state, std::size_t wire_cap) {
  if (state.wire_order.size() > wire_cap)
    throw std::runtime_error("dense simulation exceeds live-wire cap");
  for (const GateApp& g : q.gates) apply_gate(state, g, wire_cap);
  std::vector<WireId> canonical = state.wire_order;
  std::sort(canonical.begin(), canonical.end());
  return reordered(state, canonical);
}

}  // namespace

StateVector dense_apply(const OperatorCircuit& q, std::size_t wire_cap) {
  require_valid(q);
  std::vector<WireId> inputs(q.num_inputs);
  for (WireId i = 0; i < q.num_inputs; ++i) inputs[i] = i;
  return run(q, basis_state(inputs, q.input_bits), wire_cap);
}

StateVector dense_apply_initial(const OperatorCircuit& q, const StateVector& initial,
                                std::size_t wire_cap) {
  require_valid(q);
  if (initial.wire_order.size() != q.num_inputs)
    throw std::invalid_argument("initial state must cover exactly the input wires");
  return run(q, initial, wire_cap);
}

double prob_answer_zero_dense(const OperatorCircuit& q, std::size_t wire_cap) {
  require_valid(q);
  if (!q.answer_wire) throw std::invalid_argument("circuit has no answer wire");
  StateVector s = dense_apply(q, wire_cap);
  const std::size_t pos = index_of(s.wire_order, *q.answer_wire);
  const std::size_t bit = s.wire_order.size() - 1 - pos;
  double p = 0.0;
  for (std::size_t idx = 0; idx < s.amplitudes.size(); ++idx)
    if (((idx >> bit) & 1u) == 0) p += std::norm(s.amplitudes[idx]);
  return p;
}

cplx amplitude_dense(const OperatorCircuit& q, const std::string& y_bits, std::size_t wire_cap) {
  StateVector s = dense_apply(q, wire_cap);
  if (y_bits.size() != s.wire_order.size())
    throw std::invalid_argument("y has wrong length: expected " +
                                std::to_string(s.wire_order.size()));
  std::size_t idx = 0;
  for (char c : y_bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("y must contain only 0/1");
    idx = (idx << 1) | static_cast<std::size_t>(c == '1');
  }
  return s.amplitudes[idx];
}

}  // namespace opcirc
