#include "opcirc.h"

#include <cstring>
#include <sstream>
#include <string>

#include "core/contraction.hpp"
#include "core/dense_sim.hpp"
#include "core/io.hpp"
#include "core/qft.hpp"
#include "core/verify.hpp"

using namespace opcirc;

struct ocs_circuit {
  OperatorCircuit q;
};
struct ocs_graph {
  CircuitGraph g;
};
struct ocs_bubbling {
  Bubbling b;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Maps C++ failures onto status codes. Cap violations surface as
/// runtime_errors mentioning "cap" or the frontier limit.
template <typename Fn>
ocs_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return OCS_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return OCS_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    const std::string msg = e.what();
    if (msg.find("cap") != std::string::npos || msg.find("width") != std::string::npos ||
        msg.find("frontier") != std::string::npos)
      return OCS_ERR_CAP_EXCEEDED;
    return OCS_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OCS_ERR_INTERNAL;
  }
}

ocs_status need(bool cond, const char* msg) {
  if (!cond) {
    g_last_error = msg;
    return OCS_ERR_INVALID_ARGUMENT;
  }
  return OCS_OK;
}

void fill_stats(ocs_contraction_stats* out, const ContractionStats& st) {
  if (!out) return;
  out->width = st.width;
  out->peak_frontier = st.peak_frontier_edges;
  out->multiply_ops = st.multiply_ops;
  out->move_ops = st.move_ops;
  out->imag_residual = st.imag_residual;
}

Bubbling auto_bubbling(const OperatorCircuit& q, const CircuitGraphMap& m) {
  return resolve_bubbling(q, m, BubblingStrategy::Auto);
}

}  // namespace

extern "C" {

const char* ocs_last_error(void) { return g_last_error.c_str(); }

const char* ocs_status_name(ocs_status status) {
  switch (status) {
    case OCS_OK: return "ok";
    case OCS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case OCS_ERR_PARSE: return "parse error";
    case OCS_ERR_CAP_EXCEEDED: return "cap exceeded";
    case OCS_ERR_IO: return "io error";
    case OCS_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void ocs_string_free(char* s) { delete[] s; }

ocs_status ocs_circuit_parse(const char* text, ocs_circuit** out) {
  if (ocs_status s = need(text && out, "null argument")) return s;
  return guarded([&] {
    *out = new ocs_circuit{parse_circuit(text)};
    return OCS_OK;
  });
}

ocs_status ocs_circuit_load(const char* path, ocs_circuit** out) {
  if (ocs_status s = need(path && out, "null argument")) return s;
  return guarded([&] {
    *out = new ocs_circuit{load_circuit(path)};
    return OCS_OK;
  });
}

ocs_status ocs_circuit_save(const ocs_circuit* c, const char* path) {
  if (ocs_status s = need(c && path, "null argument")) return s;
  return guarded([&] {
    save_circuit(c->q, path);
    return OCS_OK;
  });
}

ocs_status ocs_circuit_to_text(const ocs_circuit* c, char** out) {
  if (ocs_status s = need(c && out, "null argument")) return s;
  return guarded([&] {
    *out = dup_string(format_circuit(c->q));
    return OCS_OK;
  });
}

void ocs_circuit_free(ocs_circuit* c) { delete c; }

ocs_status ocs_circuit_validate(const ocs_circuit* c, int* ok, char** report) {
  if (ocs_status s = need(c && ok, "null argument")) return s;
  return guarded([&] {
    const ValidationReport r = validate(c->q);
    *ok = r.ok ? 1 : 0;
    if (report) *report = dup_string(r.message);
    return OCS_OK;
  });
}

size_t ocs_circuit_num_inputs(const ocs_circuit* c) { return c ? c->q.num_inputs : 0; }
size_t ocs_circuit_num_outputs(const ocs_circuit* c) { return c ? c->q.num_outputs() : 0; }
size_t ocs_circuit_num_gates(const ocs_circuit* c) { return c ? c->q.gates.size() : 0; }
int ocs_circuit_has_answer_wire(const ocs_circuit* c) {
  return c && c->q.answer_wire ? 1 : 0;
}
int ocs_circuit_has_layers(const ocs_circuit* c) { return c && c->q.has_layers() ? 1 : 0; }

ocs_status ocs_circuit_set_input_bits(ocs_circuit* c, const char* bits) {
  if (ocs_status s = need(c && bits, "null argument")) return s;
  return guarded([&] {
    OperatorCircuit candidate = c->q;
    candidate.input_bits = bits;
    require_valid(candidate);
    c->q = std::move(candidate);
    return OCS_OK;
  });
}

ocs_status ocs_qft_precision(size_t n, double epsilon, size_t* k_out) {
  if (ocs_status s = need(k_out != nullptr, "null argument")) return s;
  return guarded([&] {
    *k_out = QftParams::from_epsilon(n, epsilon).k;
    return OCS_OK;
  });
}

ocs_status ocs_qft_build(size_t n, double epsilon, size_t k, ocs_circuit** out) {
  if (ocs_status s = need(out != nullptr, "null argument")) return s;
  return guarded([&] {
    const QftParams p = k == 0 ? QftParams::from_epsilon(n, epsilon) : QftParams::from_k(n, k);
    *out = new ocs_circuit{build_approx_qft(p).circuit};
    return OCS_OK;
  });
}

ocs_status ocs_qft_width_report(const size_t* ns, size_t count, double epsilon,
                                ocs_qft_width_row* rows) {
  if (ocs_status s = need(ns && rows, "null argument")) return s;
  return guarded([&] {
    const std::vector<QftWidthRow> got =
        qft_width_report(std::vector<std::size_t>(ns, ns + count), epsilon);
    for (size_t i = 0; i < got.size(); ++i)
      rows[i] = {got[i].n, got[i].k, got[i].gate_count, got[i].width, got[i].width_over_k2};
    return OCS_OK;
  });
}

ocs_status ocs_graph_from_circuit(const ocs_circuit* c, ocs_graph** out) {
  if (ocs_status s = need(c && out, "null argument")) return s;
  return guarded([&] {
    *out = new ocs_graph{circuit_graph(c->q).graph};
    return OCS_OK;
  });
}

ocs_status ocs_graph_for_prob(const ocs_circuit* c, ocs_graph** out) {
  if (ocs_status s = need(c && out, "null argument")) return s;
  return guarded([&] {
    *out = new ocs_graph{circuit_graph(build_q_prime(c->q).circuit).graph};
    return OCS_OK;
  });
}

ocs_status ocs_graph_parse(const char* text, ocs_graph** out) {
  if (ocs_status s = need(text && out, "null argument")) return s;
  return guarded([&] {
    *out = new ocs_graph{parse_graph(text)};
    return OCS_OK;
  });
}

ocs_status ocs_graph_load(const char* path, ocs_graph** out) {
  if (ocs_status s = need(path && out, "null argument")) return s;
  return guarded([&] {
    *out = new ocs_graph{load_graph(path)};
    return OCS_OK;
  });
}

ocs_status ocs_graph_save(const ocs_graph* g, const char* path) {
  if (ocs_status s = need(g && path, "null argument")) return s;
  return guarded([&] {
    save_graph(g->g, path);
    return OCS_OK;
  });
}

void ocs_graph_free(ocs_graph* g) { delete g; }

size_t ocs_graph_num_vertices(const ocs_graph* g) { return g ? g->g.num_vertices : 0; }
size_t ocs_graph_num_edges(const ocs_graph* g) { return g ? g->g.edges.size() : 0; }
size_t ocs_graph_max_degree(const ocs_graph* g) { return g ? g->g.max_degree() : 0; }

ocs_status ocs_bubbling_exact(const ocs_graph* g, size_t vertex_cap, ocs_bubbling** out) {
  if (ocs_status s = need(g && out, "null argument")) return s;
  return guarded([&] {
    ExactWidthResult r =
        exact_bubble_width(g->g, vertex_cap ? vertex_cap : kDefaultExactVertexCap);
    *out = new ocs_bubbling{make_bubbling(g->g, std::move(r.order))};
    return OCS_OK;
  });
}

ocs_status ocs_bubbling_greedy(const ocs_graph* g, ocs_bubbling** out) {
  if (ocs_status s = need(g && out, "null argument")) return s;
  return guarded([&] {
    *out = new ocs_bubbling{greedy_bubbling(g->g)};
    return OCS_OK;
  });
}

ocs_status ocs_bubbling_layered(const ocs_circuit* c, ocs_bubbling** out) {
  if (ocs_status s = need(c && out, "null argument")) return s;
  return guarded([&] {
    *out = new ocs_bubbling{layered_bubbling(c->q)};
    return OCS_OK;
  });
}

ocs_status ocs_bubbling_load(const ocs_graph* g, const char* path, ocs_bubbling** out) {
  if (ocs_status s = need(g && path && out, "null argument")) return s;
  return guarded([&] {
    *out = new ocs_bubbling{make_bubbling(g->g, load_bubbling_order(path))};
    return OCS_OK;
  });
}

ocs_status ocs_bubbling_save(const ocs_bubbling* b, const char* path) {
  if (ocs_status s = need(b && path, "null argument")) return s;
  return guarded([&] {
    save_bubbling_order(b->b.order, path);
    return OCS_OK;
  });
}

ocs_status ocs_bubbling_for_prob(const ocs_circuit* c, const ocs_bubbling* b,
                                 ocs_bubbling** out) {
  if (ocs_status s = need(c && b && out, "null argument")) return s;
  return guarded([&] {
    *out = new ocs_bubbling{q_prime_bubbling(c->q, b->b)};
    return OCS_OK;
  });
}

ocs_status ocs_bubbling_layered_for_prob(const ocs_circuit* c, ocs_bubbling** out) {
  if (ocs_status s = need(c && out, "null argument")) return s;
  return guarded([&] {
    *out = new ocs_bubbling{layered_bubbling(build_q_prime(c->q).circuit)};
    return OCS_OK;
  });
}

void ocs_bubbling_free(ocs_bubbling* b) { delete b; }

size_t ocs_bubbling_width(const ocs_bubbling* b) { return b ? b->b.width() : 0; }

ocs_status ocs_exact_width(const ocs_graph* g, size_t vertex_cap, size_t* width) {
  if (ocs_status s = need(g && width, "null argument")) return s;
  return guarded([&] {
    *width = exact_bubble_width(g->g, vertex_cap ? vertex_cap : kDefaultExactVertexCap).width;
    return OCS_OK;
  });
}

ocs_status ocs_prob_answer_zero(const ocs_circuit* c, const ocs_bubbling* b, size_t max_width,
                                double* prob, ocs_contraction_stats* stats) {
  if (ocs_status s = need(c && prob, "null argument")) return s;
  return guarded([&] {
    ContractionLimits limits;
    if (max_width) limits.max_width = max_width;
    ContractionStats st;
    if (b) {
      *prob = prob_answer_zero(c->q, b->b, limits, &st);
    } else {
      const QPrime qp = build_q_prime(c->q);
      const CircuitGraphMap m = circuit_graph(qp.circuit);
      *prob = prob_answer_zero(c->q, auto_bubbling(qp.circuit, m), limits, &st);
    }
    fill_stats(stats, st);
    return OCS_OK;
  });
}

ocs_status ocs_amplitude(const ocs_circuit* c, const char* y_bits, const ocs_bubbling* b,
                         size_t max_width, double* re, double* im,
                         ocs_contraction_stats* stats) {
  if (ocs_status s = need(c && y_bits && re && im, "null argument")) return s;
  return guarded([&] {
    ContractionLimits limits;
    if (max_width) limits.max_width = max_width;
    ContractionStats st;
    cplx value;
    if (b) {
      value = amplitude(c->q, y_bits, b->b, limits, &st);
    } else {
      const CircuitGraphMap m = circuit_graph(c->q);
      value = amplitude(c->q, y_bits, auto_bubbling(c->q, m), limits, &st);
    }
    *re = value.real();
    *im = value.imag();
    fill_stats(stats, st);
    return OCS_OK;
  });
}

ocs_status ocs_prob_answer_zero_dense(const ocs_circuit* c, size_t wire_cap, double* prob) {
  if (ocs_status s = need(c && prob, "null argument")) return s;
  return guarded([&] {
    *prob = prob_answer_zero_dense(c->q, wire_cap ? wire_cap : kDefaultDenseWireCap);
    return OCS_OK;
  });
}

ocs_status ocs_amplitude_dense(const ocs_circuit* c, const char* y_bits, size_t wire_cap,
                               double* re, double* im) {
  if (ocs_status s = need(c && y_bits && re && im, "null argument")) return s;
  return guarded([&] {
    const cplx value = amplitude_dense(c->q, y_bits, wire_cap ? wire_cap : kDefaultDenseWireCap);
    *re = value.real();
    *im = value.imag();
    return OCS_OK;
  });
}

ocs_status ocs_tensor_dump(const ocs_circuit* c, const char* y_bits, char** out) {
  if (ocs_status s = need(c && out, "null argument")) return s;
  return guarded([&] {
    if (y_bits) {
      *out = dup_string(dump_tensor_circuit(tensor_circuit_for_amplitude(c->q, y_bits)));
    } else {
      const QPrime qp = build_q_prime(c->q);
      *out = dup_string(dump_tensor_circuit(tensor_circuit_for_q_prime(qp, c->q.input_bits)));
    }
    return OCS_OK;
  });
}

ocs_status ocs_verify(const char* suite, uint64_t seed, double tolerance, int full_scale,
                      char** report, int* failures) {
  if (ocs_status s = need(report && failures, "null argument")) return s;
  return guarded([&] {
    VerifyOptions opt;
    opt.seed = seed;
    opt.tolerance = tolerance;
    opt.full_scale = full_scale != 0;
    const std::vector<SuiteResult> results =
        run_verify_suites(suite ? suite : "", opt);
    std::ostringstream out;
    int failed = 0;
    for (const SuiteResult& r : results) {
      out << "suite." << r.name << ".pass=" << (r.pass ? 1 : 0) << "\n";
      out << "suite." << r.name << ".max_dev=" << r.max_dev << "\n";
      out << "suite." << r.name << ".detail=" << r.detail << "\n";
      if (!r.pass) ++failed;
    }
    *report = dup_string(out.str());
    *failures = failed;
    return OCS_OK;
  });
}

ocs_status ocs_bench_ladder(size_t w_min, size_t w_max, size_t length, uint64_t seed,
                            ocs_bench_row* rows, double* slope) {
  if (ocs_status s = need(slope && w_min >= 1 && w_min <= w_max, "bad bench range")) return s;
  return guarded([&] {
    const BenchResult bench = bench_ladder(w_min, w_max, length, seed);
    if (rows)
      for (size_t i = 0; i < bench.rows.size(); ++i)
        rows[i] = {bench.rows[i].width, bench.rows[i].vertices, bench.rows[i].ops};
    *slope = bench.slope;
    return OCS_OK;
  });
}

}  // extern "C"
