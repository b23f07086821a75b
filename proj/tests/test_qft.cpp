#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>
#include <set>

#include "core/contraction.hpp"
#include "core/dense_sim.hpp"
#include "core/verify.hpp"
#include "core/width.hpp"

using namespace opcirc;

namespace {

std::string bits_of(std::size_t x, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back((x >> (n - 1 - i)) & 1 ? '1' : '0');
  return s;
}

double max_dev(const std::vector<cplx>& got, const std::vector<cplx>& want) {
  REQUIRE(got.size() == want.size());
  double dev = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) dev = std::max(dev, std::abs(got[i] - want[i]));
  return dev;
}

StateVector run_on(QftBuild& build, std::size_t x) {
  build.circuit.input_bits = bits_of(x, build.params.n);
  return dense_apply(build.circuit, 24);
}

}  // namespace

TEST_CASE("parameter selection") {
  const QftParams p = QftParams::from_epsilon(64, 0.01);
  CHECK(p.k == 28);  // ceil(2 log2(6400)) + 2
  CHECK(QftParams::from_epsilon(8, 0.01).k == 8);  // clamped to n
  CHECK(QftParams::from_epsilon(1, 0.5).k == 1);
  CHECK_THROWS_AS(QftParams::from_epsilon(0, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(QftParams::from_epsilon(4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(QftParams::from_epsilon(4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(QftParams::from_k(4, 0), std::invalid_argument);
  CHECK(QftParams::from_k(4, 9).k == 4);  // clamped
}

TEST_CASE("copy gate behavior through the dense oracle") {
  OperatorCircuit q;
  q.num_inputs = 1;
  q.input_bits = "0";
  q.gates.push_back({copy_gate(), {0}, {1, 2}});

  CHECK(dense_apply(q).amplitudes[0b00] == cplx{1.0});  // |0> -> |00>
  q.input_bits = "1";
  CHECK(dense_apply(q).amplitudes[0b11] == cplx{1.0});  // |1> -> |11>

  // linear extension: (a,b) -> a|00> + b|11>
  StateVector init;
  init.wire_order = {0};
  init.amplitudes = {cplx{0.6}, cplx{0.8}};
  const StateVector out = dense_apply_initial(q, init);
  CHECK(out.amplitudes[0b00] == cplx{0.6});
  CHECK(out.amplitudes[0b11] == cplx{0.8});
  CHECK(out.amplitudes[0b01] == cplx{0.0});

  // copy then erase one branch is the identity on the other
  OperatorCircuit round = q;
  round.gates.push_back({erase_gate(), {1}, {}});
  const StateVector kept = dense_apply_initial(round, init);
  REQUIRE(kept.amplitudes.size() == 2);
  CHECK(std::abs(kept.amplitudes[0] - cplx{0.6}) < 1e-15);
  CHECK(std::abs(kept.amplitudes[1] - cplx{0.8}) < 1e-15);

  // erase directly after copy is the identity too (erase o copy = id)
  OperatorCircuit both = q;
  both.gates.push_back({erase_gate(), {2}, {}});
  const StateVector alt = dense_apply_initial(both, init);
  CHECK(std::abs(alt.amplitudes[0] - cplx{0.6}) < 1e-15);
  CHECK(std::abs(alt.amplitudes[1] - cplx{0.8}) < 1e-15);
}

TEST_CASE("erase and prepare behavior") {
  OperatorCircuit q;
  q.num_inputs = 0;
  q.gates.push_back({prep0_gate(), {}, {0}});
  const StateVector prepared = dense_apply(q);
  CHECK(prepared.amplitudes == std::vector<cplx>{cplx{1.0}, cplx{0.0}});  // 1 -> |0>

  q.gates.push_back({erase_gate(), {0}, {}});
  const StateVector scalar = dense_apply(q);
  REQUIRE(scalar.amplitudes.size() == 1);
  CHECK(scalar.amplitudes[0] == cplx{1.0});  // prep then erase = scalar 1
}

TEST_CASE("copy tree shape") {
  CHECK(copy_tree(1).gates.empty());
  CHECK(copy_tree(5).gates.size() == 4);
  CHECK(copy_tree_depth(1) == 0);
  CHECK(copy_tree_depth(2) == 1);
  CHECK(copy_tree_depth(4) == 2);
  CHECK(copy_tree_depth(5) == 3);
  CHECK(copy_tree(4).num_outputs() == 4);
  CHECK_THROWS_AS(copy_tree(0), std::invalid_argument);
}

TEST_CASE("copy tree output through the dense oracle") {
  OperatorCircuit tree = copy_tree(4);
  tree.input_bits = "1";
  const StateVector out = dense_apply(tree);
  REQUIRE(out.amplitudes.size() == 16);
  for (std::size_t i = 0; i < 16; ++i)
    CHECK(out.amplitudes[i] == (i == 0b1111 ? cplx{1.0} : cplx{0.0}));
}

TEST_CASE("stage 1 produces copies and fresh ancillas") {
  // n=1, k=1: |x>|0>
  OperatorCircuit s1 = build_stage1(QftParams::from_k(1, 1));
  s1.input_bits = "1";
  CHECK(s1.num_outputs() == 2);
  CHECK(dense_apply(s1).amplitudes[0b10] == cplx{1.0});

  // n=2, k=2, x=10: |11 00 00 00> in block order
  OperatorCircuit s2 = build_stage1(QftParams::from_k(2, 2));
  s2.input_bits = "10";
  CHECK(s2.num_outputs() == 8);
  const StateVector out = dense_apply(s2);
  CHECK(out.amplitudes[0b11000000] == cplx{1.0});

  // 2nk wires in general
  CHECK(build_stage1(QftParams::from_k(3, 2)).num_outputs() == 12);
}

TEST_CASE("mu phase bookkeeping") {
  // theta of mu_{0.1} is 1/2; of mu_{0.11} is 3/4
  CHECK(mu_theta(1, 1, 1, 0) == 0.5);
  CHECK(mu_theta(3, 2, 0b110, 2) == 0.75);
  CHECK(mu_theta(3, 2, 0b110, 1) == doctest::Approx(0.25));  // 0.x1x0 = 0.10
  CHECK(mu_theta(4, 2, 0b0100, 3) == doctest::Approx(0.25)); // truncation drops x1
  const std::vector<cplx> mu = MuState{0.75}.amplitudes();
  CHECK(std::abs(mu[1] - cplx{0, -1} / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("stage 2 rotates one ancilla per block into a mu state") {
  // n=1, k=1, x=1: the ancilla becomes mu_{0.1} = (|0> - |1>)/sqrt(2)
  const QftParams p1 = QftParams::from_k(1, 1);
  OperatorCircuit s2 = build_stage2(p1);
  StateVector init = basis_state({0, 1}, "10");
  const StateVector out = dense_apply_initial(s2, init);
  REQUIRE(out.amplitudes.size() == 4);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(out.amplitudes[0b10] - r) < 1e-15);
  CHECK(std::abs(out.amplitudes[0b11] + r) < 1e-15);

  // the gadgets touch disjoint wires
  const QftParams p3 = QftParams::from_k(3, 2);
  const OperatorCircuit s23 = build_stage2(p3);
  CHECK(validate(s23).ok);
  std::set<WireId> consumed;
  for (const GateApp& g : s23.gates)
    for (WireId w : g.in_wires) CHECK(consumed.insert(w).second);
}

TEST_CASE("gadget j=2 with k=2 on x=110 yields mu_{0.11}") {
  const std::size_t n = 3, k = 2;
  QftBuild build = build_approx_qft(QftParams::from_k(n, k));
  const StateVector out = run_on(build, 0b110);
  // output j=2 is the last of three mu wires; its phase is 0.11b = 3/4
  const std::vector<cplx> want = psi_tilde(n, k, 0b110);
  CHECK(max_dev(out.amplitudes, want) < 1e-12);
  CHECK(mu_theta(n, k, 0b110, 2) == 0.75);
}

TEST_CASE("stage 3 erases everything but the mu wires") {
  const QftParams p = QftParams::from_k(2, 2);
  const OperatorCircuit s3 = build_stage3(p);
  CHECK(s3.num_inputs == 8);
  CHECK(s3.num_outputs() == 2);
  CHECK(s3.gates.size() == 6);
  for (const GateApp& g : s3.gates) CHECK(gates_equal(g.gate, erase_gate()));
}

TEST_CASE("stage composition equals the scheduled builder") {
  for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
    const QftParams p = QftParams::from_k(n, k);
    const OperatorCircuit s1 = build_stage1(p);
    const OperatorCircuit s2 = build_stage2(p);
    const OperatorCircuit s3 = build_stage3(p);
    QftBuild build = build_approx_qft(p);
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
      // chain the stages through the dense oracle, identifying each stage's
      // sorted outputs with the next stage's inputs positionally
      OperatorCircuit first = s1;
      first.input_bits = bits_of(x, n);
      StateVector state = dense_apply(first, 24);
      state.wire_order.assign(state.wire_order.size(), 0);
      std::iota(state.wire_order.begin(), state.wire_order.end(), 0);
      state = dense_apply_initial(s2, state, 24);
      state.wire_order.assign(state.wire_order.size(), 0);
      std::iota(state.wire_order.begin(), state.wire_order.end(), 0);
      state = dense_apply_initial(s3, state, 24);

      const StateVector direct = run_on(build, x);
      CHECK(max_dev(state.amplitudes, direct.amplitudes) < 1e-12);
    }
  }
}

TEST_CASE("every stage is norm-preserving on basis inputs") {
  for (std::size_t n = 1; n <= 5; ++n) {
    QftBuild build = build_approx_qft(QftParams::from_k(n, std::min<std::size_t>(n, 3)));
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x)
      CHECK(std::abs(norm(run_on(build, x)) - 1.0) < 1e-9);
  }
}

TEST_CASE("n=1 builder is the Hadamard") {
  QftBuild build = build_approx_qft(QftParams::from_k(1, 1));
  CHECK(build.circuit.gates.size() == 4);  // prep, H, phase, erase
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector on0 = run_on(build, 0);
  CHECK(std::abs(on0.amplitudes[0] - r) < 1e-15);
  CHECK(std::abs(on0.amplitudes[1] - r) < 1e-15);
  const StateVector on1 = run_on(build, 1);
  CHECK(std::abs(on1.amplitudes[0] - r) < 1e-15);
  CHECK(std::abs(on1.amplitudes[1] + r) < 1e-15);
}

TEST_CASE("exact transform matrix") {
  const std::vector<cplx> f1 = exact_qft_matrix(1);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f1[0] - r) < 1e-15);
  CHECK(std::abs(f1[3] + r) < 1e-15);  // equals H

  // unitarity at n=3
  const std::size_t dim = 8;
  const std::vector<cplx> f = exact_qft_matrix(3);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      cplx dot = 0.0;
      for (std::size_t r2 = 0; r2 < dim; ++r2) dot += std::conj(f[r2 * dim + i]) * f[r2 * dim + j];
      CHECK(std::abs(dot - (i == j ? cplx{1.0} : cplx{0.0})) < 1e-12);
    }

  // row 0 is uniform
  for (std::size_t x = 0; x < dim; ++x)
    CHECK(std::abs(f[x] - 1.0 / std::sqrt(8.0)) < 1e-15);

  CHECK_THROWS_AS(exact_qft_matrix(13), std::invalid_argument);
  // columns agree with the matrix
  const std::vector<cplx> col = exact_qft_column(3, 5);
  for (std::size_t y = 0; y < dim; ++y) CHECK(col[y] == f[y * dim + 5]);
}

TEST_CASE("builder equals the exact transform when k = n") {
  for (std::size_t n = 1; n <= 5; ++n) {
    QftBuild build = build_approx_qft(QftParams::from_k(n, n));
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
      const StateVector out = run_on(build, x);
      CHECK(max_dev(out.amplitudes, exact_qft_column(n, x)) < 1e-9);
    }
  }
}

TEST_CASE("truncated builder equals the truncated product state") {
  std::mt19937_64 rng(kDefaultSeed);
  for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{
           {4, 2}, {5, 2}, {6, 3}, {7, 3}}) {
    QftBuild build = build_approx_qft(QftParams::from_k(n, k));
    for (int rep = 0; rep < 6; ++rep) {
      const std::size_t x = rng() % (std::size_t{1} << n);
      const StateVector out = run_on(build, x);
      CHECK(max_dev(out.amplitudes, psi_tilde(n, k, x)) < 1e-9);
    }
  }
}

TEST_CASE("psi_tilde at full precision is the exact column") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t x = 0; x < (std::size_t{1} << n); x += 3)
      CHECK(max_dev(psi_tilde(n, n, x), exact_qft_column(n, x)) < 1e-12);
}

TEST_CASE("fidelity bound from the phase truncation") {
  // |<psi|psi~>| >= 1 - eps for k from the epsilon formula
  for (const double eps : {0.1, 0.01}) {
    const std::size_t n = 8;
    const QftParams p = QftParams::from_epsilon(n, eps);
    for (std::size_t x = 0; x < (std::size_t{1} << n); x += 5) {
      const std::vector<cplx> exact = exact_qft_column(n, x);
      const std::vector<cplx> approx = psi_tilde(n, p.k, x);
      cplx overlap = 0.0;
      for (std::size_t y = 0; y < exact.size(); ++y)
        overlap += std::conj(exact[y]) * approx[y];
      CHECK(std::abs(overlap) >= 1.0 - eps);
    }
  }
}

TEST_CASE("builder metadata") {
  const QftParams p = QftParams::from_k(5, 3);
  const QftBuild build = build_approx_qft(p);
  CHECK(build.mu_wires.size() == 5);
  CHECK(build.circuit.output_wires() == build.mu_wires);
  CHECK(build.circuit.answer_wire == build.mu_wires[0]);
  CHECK(build.copy_count == 5 * 2);   // n (k-1)
  CHECK(build.prep_count == 5 * 3);   // n k
  CHECK(build.circuit.has_layers());

  // per-gadget gate lists: one Hadamard plus min(k, j+1) phases
  for (std::size_t j = 0; j < 5; ++j) {
    const std::size_t phases = std::min<std::size_t>(3, j + 1);
    CHECK(build.gadget_gates[j].size() == 1 + phases);
    std::set<WireId> wires;
    for (std::size_t gi : build.gadget_gates[j])
      for (WireId w : build.circuit.gates[gi].in_wires) CHECK(wires.insert(w).second);
  }

  // gate count is linear in n for fixed k
  const std::size_t gates_n8 = build_approx_qft(QftParams::from_k(8, 3)).circuit.gates.size();
  const std::size_t gates_n16 = build_approx_qft(QftParams::from_k(16, 3)).circuit.gates.size();
  CHECK(gates_n16 <= 2 * gates_n8 + 8);
}

TEST_CASE("dense evaluation of the scheduled builder stays narrow") {
  // the column-major schedule keeps the live wire count near n + k, so the
  // reference oracle can simulate sizes the naive stage order never could
  QftBuild build = build_approx_qft(QftParams::from_k(8, 8));
  CHECK_NOTHROW(run_on(build, 0b10110001));
  CHECK_THROWS(dense_apply(build_stage1(QftParams::from_k(8, 8)), 20));  // 128 live wires
}

TEST_CASE("width report rows") {
  const std::vector<QftWidthRow> rows = qft_width_report({4, 8, 16}, 0.01);
  REQUIRE(rows.size() == 3);
  for (const QftWidthRow& r : rows) {
    CHECK(r.width <= 4 * r.k * r.k);
    CHECK(r.width_over_k2 <= 4.0);
  }
  CHECK(rows[0].width <= rows[1].width);
  CHECK(rows[1].width <= rows[2].width);
}

TEST_CASE("acceptance probability of the first transform output is one half") {
  QftBuild build = build_approx_qft(QftParams::from_k(4, 4));
  build.circuit.input_bits = "1010";
  const QPrime qp = build_q_prime(build.circuit);
  const Bubbling b = layered_bubbling(qp.circuit);
  CHECK(prob_answer_zero(build.circuit, b) == doctest::Approx(0.5).epsilon(1e-8));
}
