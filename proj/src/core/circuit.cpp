#include "circuit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace opcirc {

std::vector<WireId> OperatorCircuit::output_wires() const {
  std::set<WireId> live;
  for (WireId i = 0; i < num_inputs; ++i) live.insert(i);
  for (const GateApp& g : gates) {
    for (WireId w : g.in_wires) live.erase(w);
    for (WireId w : g.out_wires) live.insert(w);
  }
  return {live.begin(), live.end()};
}

WireId OperatorCircuit::next_wire_id() const {
  WireId next = static_cast<WireId>(num_inputs);
  for (const GateApp& g : gates)
    for (WireId w : g.out_wires) next = std::max(next, w + 1);
  return next;
}

bool OperatorCircuit::has_layers() const {
  for (const GateApp& g : gates)
    if (g.layer == kNoLayer) return false;
  return true;
}

namespace {

ValidationReport fail(std::string msg, std::optional<std::size_t> gi = {},
                      std::optional<WireId> w = {}) {
  return ValidationReport{false, std::move(msg), gi, w};
}

}  // namespace

ValidationReport validate(const OperatorCircuit& q) {
  if (q.input_bits.size() != q.num_inputs)
    return fail("input_bits length does not match num_inputs");
  for (char c : q.input_bits)
    if (c != '0' && c != '1') return fail("input_bits must contain only 0/1");

  // Wires ever produced anywhere, for distinguishing unknown ids from
  // forward references.
  std::set<WireId> produced_anywhere;
  for (WireId i = 0; i < q.num_inputs; ++i) produced_anywhere.insert(i);
  for (std::size_t gi = 0; gi < q.gates.size(); ++gi)
    for (WireId w : q.gates[gi].out_wires) {
      if (!produced_anywhere.insert(w).second)
        return fail("wire produced twice: " + std::to_string(w), gi, w);
    }

  std::set<WireId> live;
  for (WireId i = 0; i < q.num_inputs; ++i) live.insert(i);
  std::set<WireId> consumed;
  for (std::size_t gi = 0; gi < q.gates.size(); ++gi) {
    const GateApp& g = q.gates[gi];
    try {
      check_gate(g.gate);
    } catch (const std::exception& e) {
      return fail(std::string("gate ") + std::to_string(gi) + ": " + e.what(), gi);
    }
    if (g.in_wires.size() != g.gate.arity_in || g.out_wires.size() != g.gate.arity_out)
      return fail("gate arity does not match wire lists", gi);
    std::set<WireId> seen;
    for (WireId w : g.in_wires) {
      if (!seen.insert(w).second || consumed.count(w))
        return fail("wire reuse: " + std::to_string(w), gi, w);
      if (!produced_anywhere.count(w))
        return fail("unknown wire: " + std::to_string(w), gi, w);
      if (!live.count(w))
        return fail("wire consumed before it is produced: " + std::to_string(w), gi, w);
    }
    for (WireId w : g.in_wires) {
      live.erase(w);
      consumed.insert(w);
    }
    for (WireId w : g.out_wires) live.insert(w);
  }

  if (q.answer_wire) {
    if (!live.count(*q.answer_wire))
      return fail("answer wire is not a dangling output: " + std::to_string(*q.answer_wire),
                  std::nullopt, *q.answer_wire);
  }
  return {};
}

void require_valid(const OperatorCircuit& q) {
  ValidationReport r = validate(q);
  if (!r.ok) throw std::invalid_argument("invalid circuit: " + r.message);
}

QPrime build_q_prime(const OperatorCircuit& q, ProjectorKind kind) {
  require_valid(q);
  if (!q.answer_wire) throw std::invalid_argument("build_q_prime: circuit has no answer wire");

  const int max_layer = [&] {
    int m = -1;
    for (const GateApp& g : q.gates) m = std::max(m, g.layer);
    return m;
  }();
  const bool layered = q.has_layers() && !q.gates.empty();

  QPrime result;
  OperatorCircuit& qp = result.circuit;
  qp.num_inputs = q.num_inputs;
  qp.input_bits = q.input_bits;
  qp.gates = q.gates;

  WireId next = q.next_wire_id();

  // Projector on the answer wire, between the two halves.
  GateApp proj;
  proj.gate = kind == ProjectorKind::Proj0 ? proj0_gate() : identity_gate();
  proj.in_wires = {*q.answer_wire};
  proj.out_wires = {next++};
  if (layered) proj.layer = max_layer + 1;
  qp.gates.push_back(proj);

  // Mirror map: current incarnation in Q' of each forward-half wire.
  std::map<WireId, WireId> mirror;
  for (WireId w : q.output_wires()) mirror[w] = w;
  mirror[*q.answer_wire] = proj.out_wires[0];

  for (std::size_t i = q.gates.size(); i-- > 0;) {
    const GateApp& fwd = q.gates[i];
    GateApp adj;
    adj.gate = adjoint_gate(fwd.gate);
    for (WireId w : fwd.out_wires) adj.in_wires.push_back(mirror.at(w));
    for (WireId w : fwd.in_wires) {
      adj.out_wires.push_back(next);
      mirror[w] = next++;
    }
    if (layered) adj.layer = 2 * max_layer + 2 - fwd.layer;
    qp.gates.push_back(adj);
  }

  for (WireId i = 0; i < q.num_inputs; ++i)
    result.mirrored_output_of_input.push_back(mirror.at(i));
  require_valid(qp);
  return result;
}

}  // namespace opcirc
