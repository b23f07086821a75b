#include "io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace opcirc {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

OperatorCircuit parse_circuit(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("circuit parse error: ") + e.what());
  }
  try {
    OperatorCircuit q;
    q.num_inputs = doc.at("num_inputs").get<std::size_t>();
    q.input_bits = doc.at("input_bits").get<std::string>();
    if (doc.contains("answer_wire") && !doc["answer_wire"].is_null())
      q.answer_wire = doc["answer_wire"].get<WireId>();
    for (const json& rec : doc.at("gates")) {
      GateApp app;
      app.in_wires = rec.at("in_wires").get<std::vector<WireId>>();
      app.out_wires = rec.at("out_wires").get<std::vector<WireId>>();
      if (rec.contains("layer") && !rec["layer"].is_null()) app.layer = rec["layer"].get<int>();
      const std::string name = rec.contains("name") ? rec["name"].get<std::string>() : "";
      if (rec.contains("matrix")) {
        app.gate.arity_in = app.in_wires.size();
        app.gate.arity_out = app.out_wires.size();
        app.gate.name = name;
        for (const json& pair : rec["matrix"]) {
          if (!pair.is_array() || pair.size() != 2)
            throw ParseError("matrix entries must be [re, im] pairs");
          app.gate.matrix.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
        check_gate(app.gate);
      } else if (!builtin_gate(name, app.gate)) {
        throw ParseError("unknown gate name and no matrix given: '" + name + "'");
      }
      q.gates.push_back(std::move(app));
    }
    const ValidationReport r = validate(q);
    if (!r.ok) throw ParseError("invalid circuit: " + r.message);
    return q;
  } catch (const json::exception& e) {
    throw ParseError(std::string("circuit parse error: ") + e.what());
  }
}

std::string format_circuit(const OperatorCircuit& q) {
  json doc;
  doc["num_inputs"] = q.num_inputs;
  doc["input_bits"] = q.input_bits;
  if (q.answer_wire) doc["answer_wire"] = *q.answer_wire;
  json gates = json::array();
  for (const GateApp& app : q.gates) {
    json rec;
    if (!app.gate.name.empty()) rec["name"] = app.gate.name;
    rec["in_wires"] = app.in_wires;
    rec["out_wires"] = app.out_wires;
    if (app.layer != kNoLayer) rec["layer"] = app.layer;
    // built-ins round-trip by name alone; anything else carries its matrix
    LinearGate builtin;
    if (app.gate.name.empty() || !builtin_gate(app.gate.name, builtin) ||
        !gates_equal(builtin, app.gate)) {
      json matrix = json::array();
      for (const cplx& e : app.gate.matrix) matrix.push_back({e.real(), e.imag()});
      rec["matrix"] = std::move(matrix);
    }
    gates.push_back(std::move(rec));
  }
  doc["gates"] = std::move(gates);
  return doc.dump(2) + "\n";
}

OperatorCircuit load_circuit(const std::string& path) { return parse_circuit(read_file(path)); }

void save_circuit(const OperatorCircuit& q, const std::string& path) {
  write_file(path, format_circuit(q));
}

CircuitGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  std::size_t nv = 0, ne = 0;
  if (!(in >> tag >> nv >> ne) || tag != "p")
    throw ParseError("graph parse error: expected header 'p <vertices> <edges>'");
  CircuitGraph g;
  g.num_vertices = nv;
  g.kinds.assign(nv, VertexKind::Plain);
  for (std::size_t i = 0; i < ne; ++i) {
    VertexId u = 0, v = 0;
    if (!(in >> u >> v)) throw ParseError("graph parse error: truncated edge list");
    g.edges.push_back({u, v, static_cast<EdgeId>(i)});
  }
  try {
    g.check();
  } catch (const std::exception& e) {
    throw ParseError(std::string("graph parse error: ") + e.what());
  }
  return g;
}

std::string format_graph(const CircuitGraph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices << " " << g.edges.size() << "\n";
  for (const auto& e : g.edges) out << e.u << " " << e.v << "\n";
  return out.str();
}

CircuitGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void save_graph(const CircuitGraph& g, const std::string& path) {
  write_file(path, format_graph(g));
}

std::vector<VertexId> parse_bubbling_order(const std::string& text) {
  std::istringstream in(text);
  std::vector<VertexId> order;
  VertexId v;
  while (in >> v) order.push_back(v);
  if (!in.eof()) throw ParseError("bubbling parse error: expected vertex ids");
  return order;
}

std::string format_bubbling_order(const std::vector<VertexId>& order) {
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out << " ";
    out << order[i];
  }
  out << "\n";
  return out.str();
}

std::vector<VertexId> load_bubbling_order(const std::string& path) {
  return parse_bubbling_order(read_file(path));
}

void save_bubbling_order(const std::vector<VertexId>& order, const std::string& path) {
  write_file(path, format_bubbling_order(order));
}

}  // namespace opcirc
