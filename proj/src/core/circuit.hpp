#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gate.hpp"

namespace opcirc {

using WireId = std::uint32_t;

constexpr int kNoLayer = -1;

/// One gate application. Consumed wires must already exist; produced wires
/// are fresh ids. `layer` is an optional scheduling tag used by the layered
/// bubbling (kNoLayer when untagged).
struct GateApp {
  LinearGate gate;
  std::vector<WireId> in_wires;
  std::vector<WireId> out_wires;
  int layer = kNoLayer;
};

/// A circuit over wires carrying one qubit each. Input terminals produce
/// wires 0..num_inputs-1 holding the classical bits of `input_bits`; each
/// gate consumes existing wires and produces fresh ones. Wires produced but
/// never consumed are the outputs, ordered by ascending wire id.
struct OperatorCircuit {
  std::size_t num_inputs = 0;
  std::string input_bits;  // '0'/'1', length num_inputs
  std::vector<GateApp> gates;
  std::optional<WireId> answer_wire;  // must name a dangling wire when set

  /// Dangling wires in ascending id order. Valid on validated circuits.
  std::vector<WireId> output_wires() const;
  std::size_t num_outputs() const { return output_wires().size(); }

  /// Smallest id strictly greater than every wire id used so far.
  WireId next_wire_id() const;

  bool has_layers() const;
};

struct ValidationReport {
  bool ok = true;
  std::string message;           // empty when ok
  std::optional<std::size_t> gate_index;
  std::optional<WireId> wire;
};

/// Checks all structural invariants and reports the first violation:
/// unknown wires, wire reuse, duplicate production, malformed gates,
/// bad input_bits, answer wire not dangling.
ValidationReport validate(const OperatorCircuit& q);

/// Throws std::invalid_argument with the report message if invalid.
void require_valid(const OperatorCircuit& q);

enum class ProjectorKind {
  Proj0,     // diag(1,0): the mirrored circuit value is |projection onto answer=0|^2
  Identity,  // pass-through: the mirrored circuit value is the full norm squared
};

/// The circuit q followed by a projector on the answer wire followed by the
/// adjoint of q with gates in reversed order. Its x-to-x amplitude equals
/// the norm squared of the answer=0 component of q applied to x (Proj0) or
/// the full output norm squared (Identity).
struct QPrime {
  OperatorCircuit circuit;
  /// For each input terminal i of q, the output wire of `circuit` that
  /// mirrors it; the bra side of <x|Q'|x> selects input_bits[i] there.
  std::vector<WireId> mirrored_output_of_input;
};

QPrime build_q_prime(const OperatorCircuit& q, ProjectorKind kind = ProjectorKind::Proj0);

}  // namespace opcirc
