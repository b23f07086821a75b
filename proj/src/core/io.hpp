#pragma once

#include <string>

#include "circuit.hpp"
#include "graph.hpp"

namespace opcirc {

/// Thrown on malformed input files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Circuit files are JSON documents with fields num_inputs, input_bits,
/// optional answer_wire, and gates: records with in_wires, out_wires, an
/// optional layer tag, and either a built-in name (H, CNOT, COPY, ERASE,
/// PREP0, CPHASE(theta), ...) or an explicit matrix as a row-major list of
/// [re, im] pairs, 2^|out| rows by 2^|in| columns.
OperatorCircuit parse_circuit(const std::string& text);
std::string format_circuit(const OperatorCircuit& q);

OperatorCircuit load_circuit(const std::string& path);
void save_circuit(const OperatorCircuit& q, const std::string& path);

/// Edge-list format: header "p <num_vertices> <num_edges>", then one
/// "u v" pair per line (0-based). Edge ids are assigned in file order.
CircuitGraph parse_graph(const std::string& text);
std::string format_graph(const CircuitGraph& g);
CircuitGraph load_graph(const std::string& path);
void save_graph(const CircuitGraph& g, const std::string& path);

/// A bubbling file is a single line of space-separated vertex ids.
std::vector<VertexId> parse_bubbling_order(const std::string& text);
std::string format_bubbling_order(const std::vector<VertexId>& order);
std::vector<VertexId> load_bubbling_order(const std::string& path);
void save_bubbling_order(const std::vector<VertexId>& order, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace opcirc
