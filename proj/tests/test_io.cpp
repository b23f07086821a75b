#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/dense_sim.hpp"
#include "core/io.hpp"
#include "core/qft.hpp"
#include "core/verify.hpp"

using namespace opcirc;

TEST_CASE("parse a hand-written circuit with built-in names") {
  const std::string text = R"json({
    "num_inputs": 2,
    "input_bits": "10",
    "answer_wire": 5,
    "gates": [
      {"name": "H", "in_wires": [0], "out_wires": [2]},
      {"name": "CNOT", "in_wires": [2, 1], "out_wires": [3, 4], "layer": 1},
      {"name": "CPHASE(0.25)", "in_wires": [3, 4], "out_wires": [5, 6]}
    ]
  })json";
  const OperatorCircuit q = parse_circuit(text);
  CHECK(q.num_inputs == 2);
  CHECK(q.answer_wire == WireId{5});
  CHECK(gates_equal(q.gates[0].gate, hadamard_gate()));
  CHECK(gates_equal(q.gates[2].gate, cphase_gate(0.25)));
  CHECK(q.gates[1].layer == 1);
  CHECK(q.gates[0].layer == kNoLayer);

  // parsing validates: an answer wire that a gate consumed is rejected
  std::string bad = text;
  bad.replace(bad.find("\"answer_wire\": 5"), 16, "\"answer_wire\": 4");
  CHECK_THROWS_WITH_AS(parse_circuit(bad), doctest::Contains("invalid circuit"), ParseError);
}

TEST_CASE("round trip through text") {
  OperatorCircuit q;
  q.num_inputs = 2;
  q.input_bits = "10";
  q.gates.push_back({hadamard_gate(), {0}, {2}, 0});
  q.gates.push_back({cnot_gate(), {2, 1}, {3, 4}, 1});
  q.gates.push_back({cphase_gate(0.251), {3, 4}, {5, 6}, 2});
  std::mt19937_64 rng(5);
  q.gates.push_back({random_unitary_gate(rng, 1), {5}, {7}, 3});  // matrix-only gate
  q.answer_wire = 7;

  const std::string text = format_circuit(q);
  const OperatorCircuit back = parse_circuit(text);
  CHECK(back.num_inputs == q.num_inputs);
  CHECK(back.input_bits == q.input_bits);
  CHECK(back.answer_wire == q.answer_wire);
  REQUIRE(back.gates.size() == q.gates.size());
  for (std::size_t i = 0; i < q.gates.size(); ++i) {
    CHECK(back.gates[i].in_wires == q.gates[i].in_wires);
    CHECK(back.gates[i].out_wires == q.gates[i].out_wires);
    CHECK(back.gates[i].layer == q.gates[i].layer);
    CHECK(gates_equal(back.gates[i].gate, q.gates[i].gate));
  }

  // built-ins serialize by name, not matrix
  CHECK(text.find("\"H\"") != std::string::npos);
  CHECK(text.find("CPHASE(0.251") != std::string::npos);
}

TEST_CASE("parse failures carry a message") {
  CHECK_THROWS_WITH_AS(parse_circuit("not json"), doctest::Contains("parse"), ParseError);
  CHECK_THROWS_AS(parse_circuit("{}"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_circuit(R"({"num_inputs":1,"input_bits":"0",
                        "gates":[{"name":"BOGUS","in_wires":[0],"out_wires":[1]}]})"),
      doctest::Contains("unknown gate"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_circuit(R"({"num_inputs":1,"input_bits":"0",
                        "gates":[{"in_wires":[0],"out_wires":[1],"matrix":[[1,0],[0,0],[0,0]]}]})"),
      doctest::Contains("matrix"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_circuit(R"({"num_inputs":1,"input_bits":"0",
                        "gates":[{"name":"H","in_wires":[5],"out_wires":[6]}]})"),
      doctest::Contains("unknown wire"), ParseError);
}

TEST_CASE("matrix gates round trip with full precision") {
  std::mt19937_64 rng(kDefaultSeed);
  OperatorCircuit q;
  q.num_inputs = 2;
  q.input_bits = "01";
  q.gates.push_back({random_unitary_gate(rng, 2), {0, 1}, {2, 3}});
  const OperatorCircuit back = parse_circuit(format_circuit(q));
  CHECK(gates_equal(back.gates[0].gate, q.gates[0].gate));  // bit-exact through %.17g
}

TEST_CASE("the emitted transform circuit round trips and still runs") {
  QftBuild build = build_approx_qft(QftParams::from_k(3, 3));
  build.circuit.input_bits = "101";
  const OperatorCircuit back = parse_circuit(format_circuit(build.circuit));
  CHECK(back.has_layers());
  CHECK(back.answer_wire == build.circuit.answer_wire);
  const StateVector a = dense_apply(build.circuit);
  const StateVector b = dense_apply(back);
  REQUIRE(a.amplitudes.size() == b.amplitudes.size());
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    CHECK(std::abs(a.amplitudes[i] - b.amplitudes[i]) == 0.0);
}

TEST_CASE("graph file format") {
  const std::string text = "p 3 2\n0 1\n1 2\n";
  const CircuitGraph g = parse_graph(text);
  CHECK(g.num_vertices == 3);
  CHECK(g.edges.size() == 2);
  CHECK(format_graph(g) == text);

  CHECK_THROWS_AS(parse_graph("q 3 2\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 2 1\n0 5\n"), ParseError);  // endpoint out of range
  CHECK_THROWS_AS(parse_graph("p 2 1\n1 1\n"), ParseError);  // self-loop
}

TEST_CASE("bubbling order file format") {
  const std::vector<VertexId> order{3, 0, 2, 1};
  CHECK(parse_bubbling_order(format_bubbling_order(order)) == order);
  CHECK(format_bubbling_order(order) == "3 0 2 1\n");
  CHECK_THROWS_AS(parse_bubbling_order("1 2 x"), ParseError);
}

TEST_CASE("file io reaches the filesystem") {
  const std::string path = "/tmp/opcirc_io_test.json";
  OperatorCircuit q;
  q.num_inputs = 1;
  q.input_bits = "0";
  q.gates.push_back({hadamard_gate(), {0}, {1}});
  save_circuit(q, path);
  const OperatorCircuit back = load_circuit(path);
  CHECK(back.gates.size() == 1);
  CHECK_THROWS_AS(load_circuit("/nonexistent/nowhere.json"), ParseError);
}
