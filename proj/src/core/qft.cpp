#include "qft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "width.hpp"

namespace opcirc {

QftParams QftParams::from_epsilon(std::size_t n, double epsilon) {
  if (n == 0) throw std::invalid_argument("qft: n must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("qft: epsilon must be in (0,1)");
  const double raw = std::ceil(2.0 * std::log2(static_cast<double>(n) / epsilon)) + 2.0;
  std::size_t k = raw < 1.0 ? 1 : static_cast<std::size_t>(raw);
  k = std::min(k, n);
  QftParams p{n, epsilon, k};
  p.check();
  return p;
}

QftParams QftParams::from_k(std::size_t n, std::size_t k) {
  QftParams p{n, 0.01, std::min(k, n)};
  if (k == 0) throw std::invalid_argument("qft: k must be positive");
  p.check();
  return p;
}

void QftParams::check() const {
  if (n == 0 || k == 0 || k > n) throw std::invalid_argument("qft: need 1 <= k <= n");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("qft: epsilon must be in (0,1)");
}

std::size_t copy_tree_depth(std::size_t k) {
  std::size_t depth = 0;
  while ((std::size_t{1} << depth) < k) ++depth;
  return depth;
}

namespace {

/// Expands `wire` into `count` copies, invoking leaf() left to right as each
/// copy materializes. Depth-first so only a spine of pending wires is live.
template <typename Leaf>
void expand_copies(OperatorCircuit& q, WireId& next, int layer, WireId wire, std::size_t count,
                   Leaf&& leaf) {
  if (count == 1) {
    leaf(wire);
    return;
  }
  GateApp copy;
  copy.gate = copy_gate();
  copy.in_wires = {wire};
  copy.out_wires = {next, next + 1};
  copy.layer = layer;
  next += 2;
  q.gates.push_back(copy);
  const std::size_t left = (count + 1) / 2;
  expand_copies(q, next, layer, copy.out_wires[0], left, leaf);
  expand_copies(q, next, layer, copy.out_wires[1], count - left, leaf);
}

GateApp simple_gate(LinearGate g, std::vector<WireId> in, std::vector<WireId> out, int layer) {
  GateApp a;
  a.gate = std::move(g);
  a.in_wires = std::move(in);
  a.out_wires = std::move(out);
  a.layer = layer;
  return a;
}

}  // namespace

OperatorCircuit copy_tree(std::size_t k) {
  if (k == 0) throw std::invalid_argument("copy_tree: k must be positive");
  OperatorCircuit q;
  q.num_inputs = 1;
  q.input_bits = "0";
  WireId next = 1;
  expand_copies(q, next, 0, 0, k, [](WireId) {});
  return q;
}

OperatorCircuit build_stage1(const QftParams& p) {
  p.check();
  const std::size_t n = p.n, k = p.k;
  OperatorCircuit q;
  q.num_inputs = n;
  q.input_bits.assign(n, '0');
  WireId next = static_cast<WireId>(n);
  for (std::size_t col = 0; col < n; ++col) {
    expand_copies(q, next, static_cast<int>(col), static_cast<WireId>(col), k, [](WireId) {});
    for (std::size_t i = 0; i < k; ++i)
      q.gates.push_back(simple_gate(prep0_gate(), {}, {next++}, static_cast<int>(col)));
  }
  return q;
}

namespace {

/// Shared wiring of the phase gadgets over the stage-1 block layout.
/// Column p holds the copies of bit x_{n-1-p}; copy slot d of column p is
/// reserved for gadget j = (n-1-p) + d. Gadget j starts on the first
/// ancilla of its home column n-1-j and walks right, one controlled phase
/// per column, ending in the column of bit max(0, j-k+1).
struct GadgetPlan {
  std::size_t home_column;             // n-1-j
  std::vector<std::size_t> controls;   // bit indices l = j, j-1, ..., max(0, j-k+1)
};

GadgetPlan gadget_plan(const QftParams& p, std::size_t j) {
  GadgetPlan plan;
  plan.home_column = p.n - 1 - j;
  const std::size_t lo = j + 1 >= p.k ? j + 1 - p.k : 0;
  for (std::size_t l = j + 1; l-- > lo;) plan.controls.push_back(l);
  return plan;
}

double control_theta(std::size_t l, std::size_t j) {
  // phase weight 2^(l-j-1) of bit x_l in 0.x_j x_{j-1} ...
  return std::ldexp(1.0, static_cast<int>(l) - static_cast<int>(j) - 1);
}

}  // namespace

OperatorCircuit build_stage2(const QftParams& p) {
  p.check();
  const std::size_t n = p.n, k = p.k;
  OperatorCircuit q;
  q.num_inputs = 2 * n * k;
  q.input_bits.assign(2 * n * k, '0');
  WireId next = static_cast<WireId>(2 * n * k);
  const auto copy_wire = [&](std::size_t col, std::size_t slot) {
    return static_cast<WireId>(2 * k * col + slot);
  };
  const auto ancilla_wire = [&](std::size_t col) { return static_cast<WireId>(2 * k * col + k); };

  for (std::size_t j = 0; j < n; ++j) {
    const GadgetPlan plan = gadget_plan(p, j);
    WireId thread = next++;
    q.gates.push_back(simple_gate(hadamard_gate(), {ancilla_wire(plan.home_column)}, {thread},
                                  static_cast<int>(plan.home_column)));
    for (std::size_t t = 0; t < plan.controls.size(); ++t) {
      const std::size_t l = plan.controls[t];
      const std::size_t col = n - 1 - l;
      const WireId control = copy_wire(col, j - l);
      const bool last = t + 1 == plan.controls.size();
      const WireId cont = next++;
      const WireId out_thread = last ? kMuWireBase + static_cast<WireId>(j) : next++;
      q.gates.push_back(simple_gate(cphase_gate(control_theta(l, j)), {control, thread},
                                    {cont, out_thread}, static_cast<int>(col)));
      thread = out_thread;
    }
  }
  if (next >= kMuWireBase) throw std::logic_error("qft: wire ids ran into the mu block");
  return q;
}

OperatorCircuit build_stage3(const QftParams& p) {
  p.check();
  const std::size_t total = 2 * p.n * p.k;
  OperatorCircuit q;
  q.num_inputs = total;
  q.input_bits.assign(total, '0');
  // inputs follow stage 2's sorted output order, whose last n wires are the
  // mu outputs; everything before them carries a classical bit
  for (std::size_t i = 0; i + p.n < total; ++i)
    q.gates.push_back(simple_gate(erase_gate(), {static_cast<WireId>(i)}, {}, 0));
  return q;
}

QftBuild build_approx_qft(const QftParams& p) {
  p.check();
  const std::size_t n = p.n, k = p.k;

  QftBuild build;
  build.params = p;
  build.gadget_gates.resize(n);
  OperatorCircuit& q = build.circuit;
  q.num_inputs = n;
  q.input_bits.assign(n, '0');
  WireId next = static_cast<WireId>(n);

  // thread[j]: current ancilla wire of gadget j; remaining[j]: controls left
  std::vector<WireId> thread(n, 0);
  std::vector<std::size_t> remaining(n, 0);

  for (std::size_t col = 0; col < n; ++col) {
    const int layer = static_cast<int>(col);
    const std::size_t home_gadget = n - 1 - col;

    // fresh ancillas: one feeds this column's gadget, the rest are unused
    const WireId home_anc = next++;
    q.gates.push_back(simple_gate(prep0_gate(), {}, {home_anc}, layer));
    ++build.prep_count;
    thread[home_gadget] = next++;
    remaining[home_gadget] = gadget_plan(p, home_gadget).controls.size();
    build.gadget_gates[home_gadget].push_back(q.gates.size());
    q.gates.push_back(simple_gate(hadamard_gate(), {home_anc}, {thread[home_gadget]}, layer));
    for (std::size_t i = 1; i < k; ++i) {
      const WireId a = next++;
      q.gates.push_back(simple_gate(prep0_gate(), {}, {a}, layer));
      q.gates.push_back(simple_gate(erase_gate(), {a}, {}, layer));
      ++build.prep_count;
      ++build.erase_count;
    }

    // the column's bit, copied k ways; slot d controls gadget home_gadget+d
    const std::size_t l = n - 1 - col;
    std::size_t slot = 0;
    expand_copies(q, next, layer, static_cast<WireId>(col), k, [&](WireId leaf) {
      const std::size_t d = slot++;
      const std::size_t j = home_gadget + d;
      if (j > n - 1) {
        q.gates.push_back(simple_gate(erase_gate(), {leaf}, {}, layer));
        ++build.erase_count;
        return;
      }
      const bool last = --remaining[j] == 0;
      const WireId cont = next++;
      const WireId out_thread = last ? kMuWireBase + static_cast<WireId>(j) : next++;
      build.gadget_gates[j].push_back(q.gates.size());
      q.gates.push_back(simple_gate(cphase_gate(control_theta(l, j)), {leaf, thread[j]},
                                    {cont, out_thread}, layer));
      ++build.phase_count;
      thread[j] = out_thread;
      q.gates.push_back(simple_gate(erase_gate(), {cont}, {}, layer));
      ++build.erase_count;
    });
    build.copy_count += k - 1;
  }

  if (next >= kMuWireBase) throw std::logic_error("qft: wire ids ran into the mu block");
  for (std::size_t j = 0; j < n; ++j)
    build.mu_wires.push_back(kMuWireBase + static_cast<WireId>(j));
  q.answer_wire = build.mu_wires[0];
  require_valid(q);
  return build;
}

std::vector<cplx> exact_qft_matrix(std::size_t n) {
  if (n == 0 || n > 12) throw std::invalid_argument("exact_qft_matrix: need 1 <= n <= 12");
  const std::size_t dim = std::size_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<cplx> f(dim * dim);
  for (std::size_t y = 0; y < dim; ++y)
    for (std::size_t x = 0; x < dim; ++x) {
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>((x * y) % dim) / static_cast<double>(dim);
      f[y * dim + x] = scale * cplx{std::cos(angle), std::sin(angle)};
    }
  return f;
}

std::vector<cplx> exact_qft_column(std::size_t n, std::size_t x) {
  if (n == 0 || n > 30) throw std::invalid_argument("exact_qft_column: n out of range");
  const std::size_t dim = std::size_t{1} << n;
  if (x >= dim) throw std::invalid_argument("exact_qft_column: x out of range");
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<cplx> col(dim);
  for (std::size_t y = 0; y < dim; ++y) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>((x * y) % dim) / static_cast<double>(dim);
    col[y] = scale * cplx{std::cos(angle), std::sin(angle)};
  }
  return col;
}

std::vector<cplx> MuState::amplitudes() const {
  const double s = 1.0 / std::numbers::sqrt2;
  const double angle = 2.0 * std::numbers::pi * theta;
  return {cplx{s, 0.0}, s * cplx{std::cos(angle), std::sin(angle)}};
}

double mu_theta(std::size_t n, std::size_t k, std::size_t x, std::size_t j) {
  if (j >= n) throw std::invalid_argument("mu_theta: j out of range");
  double theta = 0.0;
  for (std::size_t t = 0; t < k && t <= j; ++t) {
    const std::size_t bit = (x >> (j - t)) & 1u;
    theta += static_cast<double>(bit) * std::ldexp(1.0, -static_cast<int>(t) - 1);
  }
  return theta;
}

std::vector<cplx> psi_tilde(std::size_t n, std::size_t k, std::size_t x) {
  if (n == 0 || n > 24) throw std::invalid_argument("psi_tilde: n out of range");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> theta(n);
  for (std::size_t j = 0; j < n; ++j) theta[j] = mu_theta(n, k, x, j);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<cplx> state(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    double angle = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (idx >> (n - 1 - j) & 1u) angle += theta[j];
    angle *= 2.0 * std::numbers::pi;
    state[idx] = scale * cplx{std::cos(angle), std::sin(angle)};
  }
  return state;
}

std::vector<QftWidthRow> qft_width_report(const std::vector<std::size_t>& ns, double epsilon) {
  std::vector<QftWidthRow> rows;
  for (std::size_t n : ns) {
    const QftParams p = QftParams::from_epsilon(n, epsilon);
    const QftBuild build = build_approx_qft(p);
    const Bubbling b = layered_bubbling(build.circuit);
    QftWidthRow row;
    row.n = n;
    row.k = p.k;
    row.gate_count = build.circuit.gates.size();
    row.width = b.width();
    row.width_over_k2 = static_cast<double>(row.width) / static_cast<double>(p.k * p.k);
    if (row.width > 4 * p.k * p.k)
      throw std::runtime_error("qft width report: width exceeds 4k^2 at n=" + std::to_string(n));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace opcirc
