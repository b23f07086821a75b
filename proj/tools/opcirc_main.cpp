// Command-line front end. Links the shared library through the C API only.
//
// Machine-readable key=value lines go to stdout (stable for a fixed config
// and seed); human-readable notes and timings go to stderr. Exit codes:
// 0 success, 2 input parse failure, 3 width/memory cap exceeded, 1 other.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opcirc.h"

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

int exit_code(ocs_status s) {
  switch (s) {
    case OCS_OK: return 0;
    case OCS_ERR_PARSE: return 2;
    case OCS_ERR_CAP_EXCEEDED: return 3;
    default: return 1;
  }
}

[[noreturn]] void die(ocs_status s, const std::string& what) {
  std::fprintf(stderr, "error (%s): %s\n", ocs_status_name(s), ocs_last_error());
  if (s == OCS_ERR_CAP_EXCEEDED)
    std::fprintf(stderr, "hint: raise --max-width or supply a narrower bubbling\n");
  std::fprintf(stderr, "while: %s\n", what.c_str());
  std::exit(exit_code(s));
}

void check(ocs_status s, const std::string& what) {
  if (s != OCS_OK) die(s, what);
}

using CircuitPtr = std::unique_ptr<ocs_circuit, decltype(&ocs_circuit_free)>;
using GraphPtr = std::unique_ptr<ocs_graph, decltype(&ocs_graph_free)>;
using BubblingPtr = std::unique_ptr<ocs_bubbling, decltype(&ocs_bubbling_free)>;

CircuitPtr load_circuit(const std::string& path) {
  ocs_circuit* c = nullptr;
  check(ocs_circuit_load(path.c_str(), &c), "loading circuit " + path);
  return {c, ocs_circuit_free};
}

/// Resolves --bubbling for either the plain circuit graph (amplitude mode)
/// or the mirrored graph (probability mode). Returns null for library auto.
BubblingPtr resolve_bubbling(const ocs_circuit* c, const std::string& mode, bool prob_mode,
                             std::size_t exact_cap) {
  BubblingPtr none{nullptr, ocs_bubbling_free};
  if (mode == "auto") return none;
  ocs_bubbling* b = nullptr;
  if (mode == "layered") {
    check(prob_mode ? ocs_bubbling_layered_for_prob(c, &b) : ocs_bubbling_layered(c, &b),
          "layered bubbling");
    return {b, ocs_bubbling_free};
  }
  GraphPtr g{nullptr, ocs_graph_free};
  {
    ocs_graph* raw = nullptr;
    check(prob_mode ? ocs_graph_for_prob(c, &raw) : ocs_graph_from_circuit(c, &raw),
          "building the contraction graph");
    g.reset(raw);
  }
  if (mode == "exact") {
    check(ocs_bubbling_exact(g.get(), exact_cap, &b), "exact bubbling");
  } else if (mode == "greedy") {
    check(ocs_bubbling_greedy(g.get(), &b), "greedy bubbling");
  } else {
    check(ocs_bubbling_load(g.get(), mode.c_str(), &b), "loading bubbling " + mode);
  }
  return {b, ocs_bubbling_free};
}

int cmd_simulate(const std::string& circuit_path, const std::string& bubbling,
                 const std::string& y, std::size_t max_width, double tolerance,
                 const std::string& dump_path) {
  Timer timer;
  CircuitPtr c = load_circuit(circuit_path);
  const bool amplitude_mode = !y.empty();

  if (!dump_path.empty()) {
    char* text = nullptr;
    check(ocs_tensor_dump(c.get(), amplitude_mode ? y.c_str() : nullptr, &text),
          "dumping the tensor network");
    std::FILE* f = std::fopen(dump_path.c_str(), "wb");
    if (!f) die(OCS_ERR_IO, "opening " + dump_path);
    std::fputs(text, f);
    std::fclose(f);
    ocs_string_free(text);
  }

  BubblingPtr b = resolve_bubbling(c.get(), bubbling, !amplitude_mode, 0);
  ocs_contraction_stats stats{};
  if (amplitude_mode) {
    double re = 0, im = 0;
    check(ocs_amplitude(c.get(), y.c_str(), b.get(), max_width, &re, &im, &stats),
          "contracting the amplitude network");
    std::printf("amp_re=%.17g\n", re);
    std::printf("amp_im=%.17g\n", im);
  } else {
    if (!ocs_circuit_has_answer_wire(c.get()))
      die(OCS_ERR_INVALID_ARGUMENT, "circuit has no answer wire; pass --y for an amplitude");
    double p = 0;
    check(ocs_prob_answer_zero(c.get(), b.get(), max_width, &p, &stats),
          "contracting the mirrored network");
    std::printf("p0=%.17g\n", p);
    std::printf("imag_residual=%.3g\n", stats.imag_residual);
    if (stats.imag_residual > tolerance)
      std::fprintf(stderr, "warning: imaginary residual %.3g above tolerance\n",
                   stats.imag_residual);
  }
  std::printf("width=%zu\n", stats.width);
  std::printf("peak_frontier=%zu\n", stats.peak_frontier);
  std::printf("ops=%" PRIu64 "\n", stats.multiply_ops);
  std::fprintf(stderr, "done in %.1f ms\n", timer.ms());
  return 0;
}

int cmd_width(const std::string& circuit_path, const std::string& graph_path,
              std::size_t max_width_cap, const std::string& emit) {
  Timer timer;
  GraphPtr g{nullptr, ocs_graph_free};
  CircuitPtr c{nullptr, ocs_circuit_free};
  if (!circuit_path.empty()) {
    c = load_circuit(circuit_path);
    ocs_graph* raw = nullptr;
    check(ocs_graph_from_circuit(c.get(), &raw), "building the circuit graph");
    g.reset(raw);
  } else {
    ocs_graph* raw = nullptr;
    check(ocs_graph_load(graph_path.c_str(), &raw), "loading graph " + graph_path);
    g.reset(raw);
  }
  std::printf("vertices=%zu\n", ocs_graph_num_vertices(g.get()));
  std::printf("edges=%zu\n", ocs_graph_num_edges(g.get()));
  std::printf("max_degree=%zu\n", ocs_graph_max_degree(g.get()));

  BubblingPtr best{nullptr, ocs_bubbling_free};
  const std::size_t cap = max_width_cap ? max_width_cap : 20;
  if (ocs_graph_num_vertices(g.get()) <= cap) {
    ocs_bubbling* exact = nullptr;
    check(ocs_bubbling_exact(g.get(), cap, &exact), "exact width search");
    std::printf("exact_width=%zu\n", ocs_bubbling_width(exact));
    best.reset(exact);
  }
  {
    ocs_bubbling* greedy = nullptr;
    check(ocs_bubbling_greedy(g.get(), &greedy), "greedy bubbling");
    std::printf("greedy_width=%zu\n", ocs_bubbling_width(greedy));
    if (!best || ocs_bubbling_width(greedy) < ocs_bubbling_width(best.get()))
      best.reset(greedy);
    else
      ocs_bubbling_free(greedy);
  }
  if (c && ocs_circuit_has_layers(c.get())) {
    ocs_bubbling* layered = nullptr;
    check(ocs_bubbling_layered(c.get(), &layered), "layered bubbling");
    std::printf("layered_width=%zu\n", ocs_bubbling_width(layered));
    if (!best || ocs_bubbling_width(layered) < ocs_bubbling_width(best.get()))
      best.reset(layered);
    else
      ocs_bubbling_free(layered);
  }
  if (!emit.empty() && best) {
    check(ocs_bubbling_save(best.get(), emit.c_str()), "writing bubbling " + emit);
    std::printf("emitted=%s\n", emit.c_str());
  }
  std::fprintf(stderr, "done in %.1f ms\n", timer.ms());
  return 0;
}

int cmd_qft(std::size_t n, double epsilon, std::size_t k, const std::string& emit) {
  Timer timer;
  ocs_circuit* raw = nullptr;
  check(ocs_qft_build(n, epsilon, k, &raw), "building the transform circuit");
  CircuitPtr c{raw, ocs_circuit_free};
  std::size_t k_used = k;
  if (k_used == 0) check(ocs_qft_precision(n, epsilon, &k_used), "deriving k");
  std::printf("n=%zu\n", n);
  std::printf("k=%zu\n", k_used);
  std::printf("gates=%zu\n", ocs_circuit_num_gates(c.get()));
  {
    ocs_bubbling* b = nullptr;
    check(ocs_bubbling_layered(c.get(), &b), "layered bubbling");
    std::printf("layered_width=%zu\n", ocs_bubbling_width(b));
    ocs_bubbling_free(b);
  }
  if (!emit.empty()) {
    check(ocs_circuit_save(c.get(), emit.c_str()), "writing circuit " + emit);
    std::printf("emitted=%s\n", emit.c_str());
  }
  std::fprintf(stderr, "done in %.1f ms\n", timer.ms());
  return 0;
}

int cmd_qft_report(std::vector<std::size_t> ns, double epsilon) {
  Timer timer;
  if (ns.empty()) ns = {4, 8, 16, 32, 64};
  std::vector<ocs_qft_width_row> rows(ns.size());
  check(ocs_qft_width_report(ns.data(), ns.size(), epsilon, rows.data()), "width report");
  std::fprintf(stderr, "%6s %6s %10s %8s %10s\n", "n", "k", "gates", "width", "width/k^2");
  for (const auto& r : rows) {
    std::fprintf(stderr, "%6zu %6zu %10zu %8zu %10.4f\n", r.n, r.k, r.gate_count, r.width,
                 r.width_over_k2);
    std::printf("qft.n%zu.k=%zu\n", r.n, r.k);
    std::printf("qft.n%zu.gates=%zu\n", r.n, r.gate_count);
    std::printf("qft.n%zu.width=%zu\n", r.n, r.width);
    std::printf("qft.n%zu.width_over_k2=%.4f\n", r.n, r.width_over_k2);
  }
  std::fprintf(stderr, "done in %.1f ms\n", timer.ms());
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, double tolerance, bool full) {
  Timer timer;
  char* report = nullptr;
  int failures = 0;
  check(ocs_verify(suite.empty() ? nullptr : suite.c_str(), seed, tolerance, full ? 1 : 0,
                   &report, &failures),
        "running verification suites");
  std::fputs(report, stdout);
  std::printf("failures=%d\n", failures);
  ocs_string_free(report);
  std::fprintf(stderr, "done in %.1f ms\n", timer.ms());
  return failures == 0 ? 0 : 1;
}

int cmd_bench(std::size_t w_min, std::size_t w_max, std::size_t length, std::uint64_t seed) {
  Timer timer;
  std::vector<ocs_bench_row> rows(w_max - w_min + 1);
  double slope = 0.0;
  check(ocs_bench_ladder(w_min, w_max, length, seed, rows.data(), &slope), "ladder benchmark");
  for (const auto& r : rows) {
    std::printf("bench.w%zu.vertices=%zu\n", r.width, r.vertices);
    std::printf("bench.w%zu.ops=%" PRIu64 "\n", r.width, r.ops);
  }
  std::printf("slope=%.4f\n", slope);
  std::fprintf(stderr, "log2(ops) slope per unit width: %.4f (want 1.0 +- 0.2)\n", slope);
  std::fprintf(stderr, "done in %.1f ms\n", timer.ms());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator-circuit simulator: tensor contraction along low-width orderings"};
  app.require_subcommand(1);

  std::string circuit_path, graph_path, bubbling = "auto", y, emit, suite, dump_path;
  std::size_t max_width = 0, n = 8, k = 0, w_min = 4, w_max = 18, length = 30;
  double tolerance = 1e-9, epsilon = 0.01;
  std::uint64_t seed = 0xB0BB1E;
  std::vector<std::size_t> ns;
  bool full = false;

  auto* sim = app.add_subcommand("simulate", "contract a circuit file");
  sim->add_option("--circuit", circuit_path, "circuit file")->required();
  sim->add_option("--bubbling", bubbling, "auto|exact|greedy|layered|<order file>");
  sim->add_option("--y", y, "output bit string: compute <y|Q|x> instead of p0");
  sim->add_option("--max-width", max_width, "frontier width cap (default 26)");
  sim->add_option("--tolerance", tolerance, "imaginary-residual tolerance")
      ->check(CLI::Range(1e-300, 1e-3));
  sim->add_option("--dump-tensors", dump_path, "write the tensor network to a file");

  auto* wid = app.add_subcommand("width", "bubble-width report for a graph or circuit");
  wid->add_option("--circuit", circuit_path, "circuit file");
  wid->add_option("--graph", graph_path, "edge-list graph file");
  wid->add_option("--max-width", max_width, "exact-search vertex cap (default 20)");
  wid->add_option("--emit", emit, "write the best bubbling found");

  auto* qft = app.add_subcommand("qft", "build the approximate Fourier-transform circuit");
  qft->add_option("--n", n, "qubit count")->required();
  qft->add_option("--epsilon", epsilon, "target error (ignored when --k is given)");
  qft->add_option("--k", k, "precision digits (overrides --epsilon)");
  qft->add_option("--emit", emit, "write the circuit file");

  auto* rep = app.add_subcommand("qft-report", "width scaling table for the transform builder");
  rep->add_option("--n", ns, "sizes (default 4 8 16 32 64)");
  rep->add_option("--epsilon", epsilon, "target error");

  auto* ver = app.add_subcommand("verify", "run the oracle-equivalence suites");
  ver->add_option("--suite", suite, "run one suite by name");
  ver->add_option("--seed", seed, "random seed");
  ver->add_option("--tolerance", tolerance, "comparison tolerance")
      ->check(CLI::Range(1e-300, 1e-3));
  ver->add_flag("--full", full, "acceptance-scale workloads");

  auto* ben = app.add_subcommand("bench", "contraction cost scaling on the ladder family");
  ben->add_option("--w-min", w_min, "smallest ladder width");
  ben->add_option("--w-max", w_max, "largest ladder width");
  ben->add_option("--length", length, "ladder length");
  ben->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  if (sim->parsed()) return cmd_simulate(circuit_path, bubbling, y, max_width, tolerance, dump_path);
  if (wid->parsed()) {
    if (circuit_path.empty() == graph_path.empty()) {
      std::fprintf(stderr, "error: width needs exactly one of --circuit or --graph\n");
      return 1;
    }
    return cmd_width(circuit_path, graph_path, max_width, emit);
  }
  if (qft->parsed()) return cmd_qft(n, epsilon, k, emit);
  if (rep->parsed()) return cmd_qft_report(ns, epsilon);
  if (ver->parsed()) return cmd_verify(suite, seed, tolerance, full);
  if (ben->parsed()) return cmd_bench(w_min, w_max, length, seed);
  return 1;
}
