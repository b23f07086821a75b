#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "contraction.hpp"
#include "qft.hpp"

namespace opcirc {

constexpr std::uint64_t kDefaultSeed = 0xB0BB1E;

// ---- seeded generators ---------------------------------------------------

LinearGate random_unitary_gate(std::mt19937_64& rng, std::size_t arity);

/// Random graph with unique edge ids; multi-edges allowed, self-loops not.
CircuitGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                          std::size_t max_degree);

/// Random graph with a random tensor per vertex, entries scaled by
/// 2^(-degree/2) to keep circuit values near unit magnitude.
TensorCircuit random_tensor_circuit(std::mt19937_64& rng, std::size_t max_vertices,
                                    std::size_t max_edges, std::size_t max_degree);

/// Random operator circuit mixing unitary gates with copy/erase/prep,
/// keeping the live wire count within max_live. Sets an answer wire.
OperatorCircuit random_operator_circuit(std::mt19937_64& rng, std::size_t max_live,
                                        std::size_t max_gates);

Bubbling random_bubbling(std::mt19937_64& rng, const CircuitGraph& g);

// ---- synthetic contraction-cost family ------------------------------------

/// width x length grid of random tensors: length-1 horizontal edges per row
/// plus vertical rungs in every column. Swallowed column by column, the
/// frontier holds width+1 edges.
TensorCircuit ladder_tensor_circuit(std::size_t width, std::size_t length, std::mt19937_64& rng);

/// The column-major order (vertex ids ascending).
Bubbling ladder_bubbling(const TensorCircuit& t);

/// Least-squares slope of log2(ops) against width.
double fit_slope(const std::vector<std::pair<double, double>>& points);

struct BenchRow {
  std::size_t width = 0;       // measured bubbling width
  std::size_t vertices = 0;
  unsigned long long ops = 0;  // multiply ops from contraction
};

struct BenchResult {
  std::vector<BenchRow> rows;
  double slope = 0.0;  // log2(ops) per unit width
};

BenchResult bench_ladder(std::size_t w_min, std::size_t w_max, std::size_t length,
                         std::uint64_t seed);

// ---- oracle-equivalence suites --------------------------------------------

struct SuiteResult {
  std::string name;
  bool pass = true;
  double max_dev = 0.0;
  std::string detail;  // counts, and the failing instance when not passing
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 1e-9;
  bool full_scale = false;  // acceptance scale instead of desk scale
  int corrupt_circuit = -1;  // fault injection: corrupt this generated circuit
};

/// contract(t, b) against the labeling sum, random tensor circuits and
/// random bubblings.
SuiteResult verify_tensor_value(const VerifyOptions& opt);
/// amplitude and prob_answer_zero against the dense simulator.
SuiteResult verify_circuit_oracles(const VerifyOptions& opt);
/// builder output against the exact transform at k = n, all inputs.
SuiteResult verify_qft_exact(const VerifyOptions& opt);
/// builder output against the truncated product state, and its fidelity
/// against the exact state at the epsilon-derived k.
SuiteResult verify_qft_fidelity(const VerifyOptions& opt);
/// (1/2) PW <= BW <= d PW exhaustively on small connected graphs.
SuiteResult verify_widths(const VerifyOptions& opt);
/// width(q_prime_bubbling(optimal b)) <= 2 BW + 1 + max degree.
SuiteResult verify_qprime_width(const VerifyOptions& opt);
/// contraction cost slope on the ladder family.
SuiteResult verify_scaling(const VerifyOptions& opt);
/// contraction amplitudes of the built transform against the dense oracle.
SuiteResult verify_endtoend(const VerifyOptions& opt);

/// Runs all suites (or the one matching `filter` when non-empty).
std::vector<SuiteResult> run_verify_suites(const std::string& filter, const VerifyOptions& opt);

/// Exhaustive width-sandwich sweep over all connected labeled graphs with
/// at most max_vertices vertices and degree at most 4.
struct SandwichSweep {
  std::size_t graphs_checked = 0;
  bool pass = true;
  std::string failure;  // description of the first violating graph
};
SandwichSweep width_sandwich_sweep(std::size_t max_vertices);

}  // namespace opcirc
