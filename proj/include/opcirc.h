/* opcirc: simulator for circuits of arbitrary linear gates, driven by
 * tensor-network contraction along low-width vertex orderings, plus a
 * builder for an approximate Fourier-transform circuit whose contraction
 * width stays poly-logarithmic.
 *
 * C ABI over the C++ core: opaque handles, status codes, and a thread-local
 * error message. Every function that can fail returns ocs_status; on
 * failure the out-parameters are untouched and ocs_last_error() describes
 * the problem. Handles are freed with their ocs_*_free function.
 */
#ifndef OPCIRC_H
#define OPCIRC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ocs_circuit ocs_circuit;
typedef struct ocs_graph ocs_graph;
typedef struct ocs_bubbling ocs_bubbling;

typedef enum ocs_status {
  OCS_OK = 0,
  OCS_ERR_INVALID_ARGUMENT = 1,
  OCS_ERR_PARSE = 2,
  OCS_ERR_CAP_EXCEEDED = 3,
  OCS_ERR_IO = 4,
  OCS_ERR_INTERNAL = 5,
} ocs_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* ocs_last_error(void);
const char* ocs_status_name(ocs_status status);

/* Strings returned through char** out-parameters are heap-allocated. */
void ocs_string_free(char* s);

/* ---- circuits ---------------------------------------------------------- */

ocs_status ocs_circuit_parse(const char* text, ocs_circuit** out);
ocs_status ocs_circuit_load(const char* path, ocs_circuit** out);
ocs_status ocs_circuit_save(const ocs_circuit* c, const char* path);
ocs_status ocs_circuit_to_text(const ocs_circuit* c, char** out);
void ocs_circuit_free(ocs_circuit* c);

/* Structural validation; *ok is 1/0, *report (optional) gets the first
 * violation when invalid. Parsing already validates, so this is mainly for
 * programmatically built circuits. */
ocs_status ocs_circuit_validate(const ocs_circuit* c, int* ok, char** report);

size_t ocs_circuit_num_inputs(const ocs_circuit* c);
size_t ocs_circuit_num_outputs(const ocs_circuit* c);
size_t ocs_circuit_num_gates(const ocs_circuit* c);
int ocs_circuit_has_answer_wire(const ocs_circuit* c);
int ocs_circuit_has_layers(const ocs_circuit* c);
/* Replaces the baked input bits ('0'/'1' string of length num_inputs). */
ocs_status ocs_circuit_set_input_bits(ocs_circuit* c, const char* bits);

/* ---- approximate Fourier-transform builder ----------------------------- */

/* Precision digits for the given size and target error, clamped to [1, n]. */
ocs_status ocs_qft_precision(size_t n, double epsilon, size_t* k_out);
/* Builds the n-qubit circuit; pass k = 0 to derive k from epsilon. */
ocs_status ocs_qft_build(size_t n, double epsilon, size_t k, ocs_circuit** out);

typedef struct ocs_qft_width_row {
  size_t n;
  size_t k;
  size_t gate_count;
  size_t width; /* layered bubbling width */
  double width_over_k2;
} ocs_qft_width_row;

/* Fills rows[0..count) for the given n values at the given epsilon and
 * checks width <= 4 k^2 for each. */
ocs_status ocs_qft_width_report(const size_t* ns, size_t count, double epsilon,
                                ocs_qft_width_row* rows);

/* ---- graphs ------------------------------------------------------------ */

/* The circuit's graph: one vertex per input terminal, gate, and output
 * terminal, one edge per wire. */
ocs_status ocs_graph_from_circuit(const ocs_circuit* c, ocs_graph** out);
/* The graph of the mirrored circuit used by acceptance-probability runs. */
ocs_status ocs_graph_for_prob(const ocs_circuit* c, ocs_graph** out);
ocs_status ocs_graph_parse(const char* text, ocs_graph** out);
ocs_status ocs_graph_load(const char* path, ocs_graph** out);
ocs_status ocs_graph_save(const ocs_graph* g, const char* path);
void ocs_graph_free(ocs_graph* g);

size_t ocs_graph_num_vertices(const ocs_graph* g);
size_t ocs_graph_num_edges(const ocs_graph* g);
size_t ocs_graph_max_degree(const ocs_graph* g);

/* ---- bubblings (vertex orderings) -------------------------------------- */

/* Exact minimum-width order by dynamic programming over vertex subsets;
 * fails with OCS_ERR_CAP_EXCEEDED when the graph has more vertices than
 * vertex_cap (pass 0 for the default cap of 20). */
ocs_status ocs_bubbling_exact(const ocs_graph* g, size_t vertex_cap, ocs_bubbling** out);
ocs_status ocs_bubbling_greedy(const ocs_graph* g, ocs_bubbling** out);
/* Left-to-right order from the circuit's layer tags. The bubbling belongs
 * to ocs_graph_from_circuit(c). */
ocs_status ocs_bubbling_layered(const ocs_circuit* c, ocs_bubbling** out);
/* Reads an order (space-separated vertex ids) and binds it to the graph. */
ocs_status ocs_bubbling_load(const ocs_graph* g, const char* path, ocs_bubbling** out);
ocs_status ocs_bubbling_save(const ocs_bubbling* b, const char* path);
/* Lifts a bubbling of the circuit's own graph to the mirrored graph used
 * by acceptance-probability runs (forward copy, then adjoint copy). */
ocs_status ocs_bubbling_for_prob(const ocs_circuit* c, const ocs_bubbling* b, ocs_bubbling** out);
/* Layered order of the mirrored graph directly (layer tags propagate
 * through the mirroring, so this stays near the forward width instead of
 * twice it). */
ocs_status ocs_bubbling_layered_for_prob(const ocs_circuit* c, ocs_bubbling** out);
void ocs_bubbling_free(ocs_bubbling* b);

size_t ocs_bubbling_width(const ocs_bubbling* b);
/* Exact minimum width alone (witness discarded). */
ocs_status ocs_exact_width(const ocs_graph* g, size_t vertex_cap, size_t* width);

/* ---- simulation --------------------------------------------------------- */

typedef struct ocs_contraction_stats {
  size_t width;              /* width of the bubbling used */
  size_t peak_frontier;      /* max live edge count */
  uint64_t multiply_ops;     /* complex multiply-adds */
  uint64_t move_ops;         /* slot-permutation element moves */
  double imag_residual;      /* |Im| of a value that must be real */
} ocs_contraction_stats;

/* Probability that the answer wire reads 0, via tensor contraction of the
 * mirrored circuit. `b` must bubble the mirrored graph (see
 * ocs_bubbling_for_prob / ocs_graph_for_prob); pass NULL to choose
 * automatically. max_width 0 means the default cap of 26. */
ocs_status ocs_prob_answer_zero(const ocs_circuit* c, const ocs_bubbling* b, size_t max_width,
                                double* prob, ocs_contraction_stats* stats);

/* <y|Q|x> via contraction; y is over the output wires in ascending wire-id
 * order. `b` bubbles the circuit's own graph; NULL chooses automatically. */
ocs_status ocs_amplitude(const ocs_circuit* c, const char* y_bits, const ocs_bubbling* b,
                         size_t max_width, double* re, double* im,
                         ocs_contraction_stats* stats);

/* Dense state-vector references (exponential in the live wire count;
 * wire_cap 0 means the default cap of 20). */
ocs_status ocs_prob_answer_zero_dense(const ocs_circuit* c, size_t wire_cap, double* prob);
ocs_status ocs_amplitude_dense(const ocs_circuit* c, const char* y_bits, size_t wire_cap,
                               double* re, double* im);

/* Debug dump of the tensor network: one line per vertex with its incident
 * edges and entries. y_bits selects the amplitude network; NULL dumps the
 * mirrored network used for acceptance probabilities. */
ocs_status ocs_tensor_dump(const ocs_circuit* c, const char* y_bits, char** out);

/* ---- verification and benchmarking -------------------------------------- */

/* Runs the oracle-equivalence suites (all of them when suite is NULL or
 * empty). Returns a multi-line report through *report; *failures counts
 * failing suites. full_scale != 0 runs acceptance-scale workloads. */
ocs_status ocs_verify(const char* suite, uint64_t seed, double tolerance, int full_scale,
                      char** report, int* failures);

typedef struct ocs_bench_row {
  size_t width;
  size_t vertices;
  uint64_t ops;
} ocs_bench_row;

/* Contraction cost on the synthetic ladder family, one row per width in
 * [w_min, w_max]; *slope gets the fitted log2(ops)-per-width slope. rows
 * may be NULL when only the slope is wanted. */
ocs_status ocs_bench_ladder(size_t w_min, size_t w_max, size_t length, uint64_t seed,
                            ocs_bench_row* rows, double* slope);

#ifdef __cplusplus
}
#endif

#endif /* OPCIRC_H */
