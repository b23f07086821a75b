#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dense_sim.hpp"
#include "io.hpp"

namespace opcirc {

namespace {

double urand(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

double nrand(std::mt19937_64& rng) {
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

LinearGate random_unitary_gate(std::mt19937_64& rng, std::size_t arity) {
  const std::size_t dim = std::size_t{1} << arity;
  std::vector<cplx> m(dim * dim);
  for (cplx& e : m) e = cplx{nrand(rng), nrand(rng)};
  // Gram-Schmidt on columns
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      cplx dot = 0.0;
      for (std::size_t r = 0; r < dim; ++r) dot += std::conj(m[r * dim + p]) * m[r * dim + c];
      for (std::size_t r = 0; r < dim; ++r) m[r * dim + c] -= dot * m[r * dim + p];
    }
    double len = 0.0;
    for (std::size_t r = 0; r < dim; ++r) len += std::norm(m[r * dim + c]);
    len = std::sqrt(len);
    for (std::size_t r = 0; r < dim; ++r) m[r * dim + c] /= len;
  }
  LinearGate g{arity, arity, std::move(m), ""};
  check_gate(g);
  return g;
}

CircuitGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                          std::size_t max_degree) {
  CircuitGraph g;
  g.num_vertices = 2 + pick(rng, max_vertices - 1);
  g.kinds.assign(g.num_vertices, VertexKind::Plain);
  const std::size_t target = 1 + pick(rng, max_edges);
  std::vector<std::size_t> deg(g.num_vertices, 0);
  for (std::size_t attempt = 0; attempt < 8 * target && g.edges.size() < target; ++attempt) {
    const VertexId u = static_cast<VertexId>(pick(rng, g.num_vertices));
    const VertexId v = static_cast<VertexId>(pick(rng, g.num_vertices));
    if (u == v || deg[u] >= max_degree || deg[v] >= max_degree) continue;
    g.edges.push_back({u, v, static_cast<EdgeId>(g.edges.size())});
    ++deg[u];
    ++deg[v];
  }
  return g;
}

TensorCircuit random_tensor_circuit(std::mt19937_64& rng, std::size_t max_vertices,
                                    std::size_t max_edges, std::size_t max_degree) {
  TensorCircuit t;
  t.graph = random_graph(rng, max_vertices, max_edges, max_degree);
  t.tensors.resize(t.graph.num_vertices);
  std::vector<std::vector<EdgeId>> incident(t.graph.num_vertices);
  for (const auto& e : t.graph.edges) {
    incident[e.u].push_back(e.id);
    incident[e.v].push_back(e.id);
  }
  for (std::size_t v = 0; v < t.tensors.size(); ++v) {
    Tensor& ten = t.tensors[v];
    ten.edges = incident[v];
    const double scale = std::pow(2.0, -0.5 * static_cast<double>(ten.edges.size()));
    ten.entries.resize(std::size_t{1} << ten.edges.size());
    for (cplx& e : ten.entries) e = scale * cplx{nrand(rng), nrand(rng)};
  }
  t.check();
  return t;
}

OperatorCircuit random_operator_circuit(std::mt19937_64& rng, std::size_t max_live,
                                        std::size_t max_gates) {
  OperatorCircuit q;
  q.num_inputs = 1 + pick(rng, max_live);
  for (std::size_t i = 0; i < q.num_inputs; ++i) q.input_bits.push_back(pick(rng, 2) ? '1' : '0');

  std::vector<WireId> live;
  for (WireId i = 0; i < q.num_inputs; ++i) live.push_back(i);
  WireId next = static_cast<WireId>(q.num_inputs);
  const std::size_t target = 1 + pick(rng, max_gates);

  enum Action { OneQ, TwoQ, Copy, Erase, Prep };
  while (q.gates.size() < target) {
    std::vector<Action> menu;
    if (live.size() >= 1) menu.insert(menu.end(), {OneQ, OneQ});
    if (live.size() >= 2) menu.insert(menu.end(), {TwoQ, TwoQ});
    if (live.size() >= 1 && live.size() < max_live) menu.push_back(Copy);
    if (live.size() >= 2) menu.push_back(Erase);
    if (live.size() < max_live) menu.push_back(Prep);
    const Action act = menu[pick(rng, menu.size())];

    const auto take = [&](std::size_t count) {
      std::vector<WireId> wires;
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t at = pick(rng, live.size());
        wires.push_back(live[at]);
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(at));
      }
      return wires;
    };

    GateApp app;
    switch (act) {
      case OneQ: {
        const std::size_t which = pick(rng, 3);
        app.gate = which == 0 ? hadamard_gate()
                   : which == 1 ? pauli_x_gate()
                                : random_unitary_gate(rng, 1);
        app.in_wires = take(1);
        app.out_wires = {next++};
        break;
      }
      case TwoQ: {
        const std::size_t which = pick(rng, 3);
        app.gate = which == 0   ? cnot_gate()
                   : which == 1 ? cphase_gate(urand(rng))
                                : random_unitary_gate(rng, 2);
        app.in_wires = take(2);
        app.out_wires = {next, next + 1};
        next += 2;
        break;
      }
      case Copy:
        app.gate = copy_gate();
        app.in_wires = take(1);
        app.out_wires = {next, next + 1};
        next += 2;
        break;
      case Erase:
        app.gate = erase_gate();
        app.in_wires = take(1);
        break;
      case Prep:
        app.gate = prep0_gate();
        app.out_wires = {next++};
        break;
    }
    for (WireId w : app.out_wires) live.push_back(w);
    q.gates.push_back(std::move(app));
  }

  q.answer_wire = live[pick(rng, live.size())];
  require_valid(q);
  return q;
}

Bubbling random_bubbling(std::mt19937_64& rng, const CircuitGraph& g) {
  std::vector<VertexId> order(g.num_vertices);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return make_bubbling(g, std::move(order));
}

TensorCircuit ladder_tensor_circuit(std::size_t width, std::size_t length, std::mt19937_64& rng) {
  TensorCircuit t;
  t.graph.num_vertices = width * length;
  t.graph.kinds.assign(t.graph.num_vertices, VertexKind::Plain);
  const auto id = [&](std::size_t r, std::size_t c) {
    return static_cast<VertexId>(c * width + r);
  };
  EdgeId next_edge = 0;
  for (std::size_t c = 0; c < length; ++c)
    for (std::size_t r = 0; r < width; ++r) {
      if (c + 1 < length) t.graph.edges.push_back({id(r, c), id(r, c + 1), next_edge++});
      if (r + 1 < width) t.graph.edges.push_back({id(r, c), id(r + 1, c), next_edge++});
    }
  std::vector<std::vector<EdgeId>> incident(t.graph.num_vertices);
  for (const auto& e : t.graph.edges) {
    incident[e.u].push_back(e.id);
    incident[e.v].push_back(e.id);
  }
  t.tensors.resize(t.graph.num_vertices);
  for (std::size_t v = 0; v < t.tensors.size(); ++v) {
    t.tensors[v].edges = incident[v];
    const double scale = std::pow(2.0, -0.5 * static_cast<double>(incident[v].size()));
    t.tensors[v].entries.resize(std::size_t{1} << incident[v].size());
    for (cplx& e : t.tensors[v].entries) e = scale * cplx{nrand(rng), nrand(rng)};
  }
  t.check();
  return t;
}

Bubbling ladder_bubbling(const TensorCircuit& t) {
  std::vector<VertexId> order(t.graph.num_vertices);
  std::iota(order.begin(), order.end(), 0);
  return make_bubbling(t.graph, std::move(order));
}

double fit_slope(const std::vector<std::pair<double, double>>& points) {
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BenchResult bench_ladder(std::size_t w_min, std::size_t w_max, std::size_t length,
                         std::uint64_t seed) {
  BenchResult result;
  std::vector<std::pair<double, double>> points;
  // constant vertex budget across the family, so the per-vertex cost 2^w is
  // the only thing that scales
  const std::size_t budget = length * w_max;
  for (std::size_t w = w_min; w <= w_max; ++w) {
    std::mt19937_64 rng(seed + w);
    const TensorCircuit t = ladder_tensor_circuit(w, std::max<std::size_t>(3, budget / w), rng);
    const Bubbling b = ladder_bubbling(t);
    ContractionStats stats;
    ContractionLimits limits;
    limits.max_width = b.width() + 1;
    contract(t, b, limits, &stats);
    BenchRow row{b.width(), t.graph.num_vertices, stats.multiply_ops};
    points.push_back({static_cast<double>(row.width),
                      std::log2(static_cast<double>(row.ops))});
    result.rows.push_back(row);
  }
  result.slope = fit_slope(points);
  return result;
}

// ---- suites ----------------------------------------------------------------

namespace {

void record(SuiteResult& res, double dev, double tol, const std::string& where) {
  res.max_dev = std::max(res.max_dev, dev);
  if (dev > tol && res.pass) {
    res.pass = false;
    res.detail = where + " deviates by " + std::to_string(dev);
  }
}

}  // namespace

SuiteResult verify_tensor_value(const VerifyOptions& opt) {
  SuiteResult res;
  res.name = "tensor-value";
  const std::size_t circuits = opt.full_scale ? 200 : 60;
  const std::size_t orders = opt.full_scale ? 10 : 5;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t i = 0; i < circuits; ++i) {
    const TensorCircuit t = random_tensor_circuit(rng, 8, 12, 4);
    const cplx want = value_brute_force(t);
    for (std::size_t j = 0; j < orders; ++j) {
      const Bubbling b = random_bubbling(rng, t.graph);
      const cplx got = contract(t, b);
      record(res, std::abs(got - want), opt.tolerance,
             "tensor circuit #" + std::to_string(i) + " order #" + std::to_string(j));
    }
  }
  if (res.detail.empty())
    res.detail = std::to_string(circuits) + " circuits x " + std::to_string(orders) + " orders";
  return res;
}

SuiteResult verify_circuit_oracles(const VerifyOptions& opt) {
  SuiteResult res;
  res.name = "circuit-oracles";
  const std::size_t circuits = opt.full_scale ? 100 : 40;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t i = 0; i < circuits; ++i) {
    OperatorCircuit q = random_operator_circuit(rng, 5, 15);
    if (static_cast<int>(i) == opt.corrupt_circuit && !q.gates.empty())
      q.gates[pick(rng, q.gates.size())].gate.matrix[0] += cplx{0.5, 0.25};
    const std::string tag = "circuit #" + std::to_string(i);

    // amplitude against the dense coefficient, on a random output string
    const StateVector dense = dense_apply(q);
    std::string y;
    for (std::size_t o = 0; o < dense.wire_order.size(); ++o)
      y.push_back(pick(rng, 2) ? '1' : '0');
    const cplx amp_want = amplitude_dense(q, y);
    const CircuitGraphMap m = circuit_graph(q);
    const Bubbling b = resolve_bubbling(q, m, BubblingStrategy::Auto);
    const cplx amp_got = amplitude(q, y, b);
    record(res, std::abs(amp_got - amp_want), opt.tolerance, tag + " amplitude");

    // acceptance probability against the dense projector norm
    const double p_want = prob_answer_zero_dense(q);
    const QPrime qp = build_q_prime(q);
    const CircuitGraphMap mp = circuit_graph(qp.circuit);
    const Bubbling bp = resolve_bubbling(qp.circuit, mp, BubblingStrategy::Auto);
    ContractionStats stats;
    const double p_got = prob_answer_zero(q, bp, {}, &stats);
    record(res, std::abs(p_got - p_want), opt.tolerance, tag + " prob");
    record(res, stats.imag_residual, opt.tolerance, tag + " imag residual");
  }
  if (res.detail.empty()) res.detail = std::to_string(circuits) + " circuits";
  return res;
}

SuiteResult verify_qft_exact(const VerifyOptions& opt) {
  SuiteResult res;
  res.name = "qft-exact";
  const std::size_t n_max = opt.full_scale ? 8 : 5;
  for (std::size_t n = 1; n <= n_max; ++n) {
    QftBuild build = build_approx_qft(QftParams::from_k(n, n));
    const double uniform = 1.0 / static_cast<double>(std::size_t{1} << n);
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
      std::string bits;
      for (std::size_t i = 0; i < n; ++i) bits.push_back((x >> (n - 1 - i)) & 1 ? '1' : '0');
      build.circuit.input_bits = bits;
      const StateVector got = dense_apply(build.circuit, 24);
      const std::vector<cplx> want = exact_qft_column(n, x);
      const std::string tag = "n=" + std::to_string(n) + " x=" + std::to_string(x);
      for (std::size_t y = 0; y < want.size(); ++y) {
        record(res, std::abs(got.amplitudes[y] - want[y]), opt.tolerance, tag);
        record(res, std::abs(std::norm(got.amplitudes[y]) - uniform), opt.tolerance,
               tag + " uniformity");
      }
    }
  }
  if (res.detail.empty()) res.detail = "n <= " + std::to_string(n_max) + ", all inputs";
  return res;
}

SuiteResult verify_qft_fidelity(const VerifyOptions& opt) {
  SuiteResult res;
  res.name = "qft-fidelity";
  const std::size_t n = opt.full_scale ? 8 : 6;
  for (const double eps : {0.1, 0.01}) {
    const QftParams p = QftParams::from_epsilon(n, eps);
    QftBuild build = build_approx_qft(p);
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
      std::string bits;
      for (std::size_t i = 0; i < n; ++i) bits.push_back((x >> (n - 1 - i)) & 1 ? '1' : '0');
      build.circuit.input_bits = bits;
      const StateVector got = dense_apply(build.circuit, 24);
      const std::vector<cplx> exact = exact_qft_column(n, x);
      cplx overlap = 0.0;
      for (std::size_t y = 0; y < exact.size(); ++y)
        overlap += std::conj(exact[y]) * got.amplitudes[y];
      const double fidelity = std::abs(overlap);
      if (fidelity < 1.0 - eps) {
        res.pass = false;
        res.detail = "fidelity " + std::to_string(fidelity) + " < 1-eps at x=" +
                     std::to_string(x) + " eps=" + std::to_string(eps);
      }
      res.max_dev = std::max(res.max_dev, 1.0 - fidelity);
      // the builder must match the truncated product state exactly
      const std::vector<cplx> tilde = psi_tilde(n, p.k, x);
      for (std::size_t y = 0; y < tilde.size(); ++y)
        record(res, std::abs(got.amplitudes[y] - tilde[y]), opt.tolerance,
               "psi-tilde mismatch at x=" + std::to_string(x));
    }
  }
  // genuine truncation: k below n, against the product-state formula
  const std::size_t nt = 6;
  for (const std::size_t k : {2ul, 3ul, 4ul}) {
    QftBuild build = build_approx_qft(QftParams::from_k(nt, k));
    std::mt19937_64 rng(opt.seed ^ k);
    for (int rep = 0; rep < 8; ++rep) {
      const std::size_t x = pick(rng, std::size_t{1} << nt);
      std::string bits;
      for (std::size_t i = 0; i < nt; ++i) bits.push_back((x >> (nt - 1 - i)) & 1 ? '1' : '0');
      build.circuit.input_bits = bits;
      const StateVector got = dense_apply(build.circuit, 24);
      const std::vector<cplx> tilde = psi_tilde(nt, k, x);
      for (std::size_t y = 0; y < tilde.size(); ++y)
        record(res, std::abs(got.amplitudes[y] - tilde[y]), opt.tolerance,
               "k=" + std::to_string(k) + " truncation at x=" + std::to_string(x));
    }
  }
  if (res.detail.empty()) res.detail = "n=" + std::to_string(n) + ", eps in {0.1, 0.01}";
  return res;
}

SandwichSweep width_sandwich_sweep(std::size_t max_vertices) {
  SandwichSweep sweep;
  for (std::size_t n = 1; n <= max_vertices && sweep.pass; ++n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const std::size_t slots = pairs.size();
    CircuitGraph g;
    g.num_vertices = n;
    g.kinds.assign(n, VertexKind::Plain);
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots); ++mask) {
      // degree filter
      std::array<std::uint8_t, 8> deg{};
      std::array<std::uint8_t, 8> adj{};
      bool ok = true;
      for (std::size_t s = 0; s < slots && ok; ++s) {
        if (!(mask >> s & 1)) continue;
        const auto [u, v] = pairs[s];
        if (++deg[u] > 4 || ++deg[v] > 4) ok = false;
        adj[u] |= std::uint8_t(1u << v);
        adj[v] |= std::uint8_t(1u << u);
      }
      if (!ok) continue;
      // connectivity
      std::uint8_t seen = 1, frontier = 1;
      while (frontier) {
        std::uint8_t next = 0;
        for (std::size_t v = 0; v < n; ++v)
          if (frontier >> v & 1) next |= adj[v];
        frontier = next & static_cast<std::uint8_t>(~seen);
        seen |= next;
      }
      if (seen != static_cast<std::uint8_t>((1u << n) - 1)) continue;

      g.edges.clear();
      for (std::size_t s = 0; s < slots; ++s)
        if (mask >> s & 1)
          g.edges.push_back({pairs[s].first, pairs[s].second,
                             static_cast<EdgeId>(g.edges.size())});
      const std::size_t bw = exact_bubble_width(g).width;
      const std::size_t pw = exact_path_width(g);
      const std::size_t d = g.max_degree();
      ++sweep.graphs_checked;
      if (pw > 2 * bw || bw > d * pw) {
        sweep.pass = false;
        std::ostringstream ss;
        ss << "violation on n=" << n << " mask=" << mask << " bw=" << bw << " pw=" << pw
           << " d=" << d;
        sweep.failure = ss.str();
        break;
      }
    }
  }
  return sweep;
}

SuiteResult verify_widths(const VerifyOptions& opt) {
  SuiteResult res;
  res.name = "widths";
  const SandwichSweep sweep = width_sandwich_sweep(opt.full_scale ? 7 : 5);
  res.pass = sweep.pass;
  res.detail = sweep.pass ? std::to_string(sweep.graphs_checked) + " connected graphs"
                          : sweep.failure;
  return res;
}

SuiteResult verify_qprime_width(const VerifyOptions& opt) {
  SuiteResult res;
  res.name = "qprime-width";
  const std::size_t circuits = opt.full_scale ? 100 : 30;
  std::mt19937_64 rng(opt.seed);
  std::size_t max_slack = 0;
  for (std::size_t i = 0; i < circuits; ++i) {
    const OperatorCircuit q = random_operator_circuit(rng, 4, 8);
    const CircuitGraphMap m = circuit_graph(q);
    if (m.graph.num_vertices > kDefaultExactVertexCap) continue;
    const ExactWidthResult exact = exact_bubble_width(m.graph);
    const Bubbling best = make_bubbling(m.graph, exact.order);
    const Bubbling lifted = q_prime_bubbling(q, best);
    const std::size_t bound = 2 * exact.width + 1 + m.graph.max_degree();
    if (lifted.width() > bound) {
      res.pass = false;
      res.detail = "circuit #" + std::to_string(i) + ": lifted width " +
                   std::to_string(lifted.width()) + " > bound " + std::to_string(bound);
    }
    max_slack = std::max(max_slack,
                         lifted.width() > 2 * exact.width ? lifted.width() - 2 * exact.width : 0);
  }
  if (res.detail.empty())
    res.detail = std::to_string(circuits) +
                 " circuits; tightest additive constant c with width <= 2 BW + c: " +
                 std::to_string(max_slack);
  return res;
}

SuiteResult verify_scaling(const VerifyOptions& opt) {
  SuiteResult res;
  res.name = "scaling";
  const BenchResult bench = bench_ladder(4, opt.full_scale ? 18 : 12, 30, opt.seed);
  res.max_dev = std::abs(bench.slope - 1.0);
  res.pass = res.max_dev <= 0.2;
  std::ostringstream ss;
  ss << "slope " << bench.slope << " over widths " << bench.rows.front().width << ".."
     << bench.rows.back().width;
  res.detail = ss.str();
  return res;
}

SuiteResult verify_endtoend(const VerifyOptions& opt) {
  SuiteResult res;
  res.name = "endtoend";
  const std::size_t n = opt.full_scale ? 6 : 4;
  const double tol = opt.full_scale ? 1e-8 : opt.tolerance;
  QftBuild build = build_approx_qft(QftParams::from_k(n, n));
  std::mt19937_64 rng(opt.seed);
  std::size_t peak = 0, width = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t x = pick(rng, std::size_t{1} << n);
    std::string xbits, ybits;
    for (std::size_t i = 0; i < n; ++i) {
      xbits.push_back((x >> (n - 1 - i)) & 1 ? '1' : '0');
      ybits.push_back(pick(rng, 2) ? '1' : '0');
    }
    build.circuit.input_bits = xbits;
    const Bubbling b = layered_bubbling(build.circuit);
    ContractionStats stats;
    const cplx got = amplitude(build.circuit, ybits, b, {}, &stats);
    const cplx want = amplitude_dense(build.circuit, ybits, 24);
    record(res, std::abs(got - want), tol, "x=" + xbits + " y=" + ybits);
    peak = std::max(peak, stats.peak_frontier_edges);
    width = b.width();
  }
  if (peak > width) {
    res.pass = false;
    res.detail = "frontier exceeded the layered width";
  }
  if (res.detail.empty()) {
    std::ostringstream ss;
    ss << "n=" << n << ", 20 queries, layered width " << width << ", peak frontier " << peak;
    res.detail = ss.str();
  }
  return res;
}

std::vector<SuiteResult> run_verify_suites(const std::string& filter, const VerifyOptions& opt) {
  using Suite = SuiteResult (*)(const VerifyOptions&);
  const std::pair<const char*, Suite> suites[] = {
      {"tensor-value", verify_tensor_value}, {"circuit-oracles", verify_circuit_oracles},
      {"qft-exact", verify_qft_exact},       {"qft-fidelity", verify_qft_fidelity},
      {"widths", verify_widths},             {"qprime-width", verify_qprime_width},
      {"scaling", verify_scaling},           {"endtoend", verify_endtoend},
  };
  std::vector<SuiteResult> results;
  bool matched = false;
  for (const auto& [name, fn] : suites) {
    if (!filter.empty() && filter != name) continue;
    matched = true;
    results.push_back(fn(opt));
  }
  if (!matched) throw std::invalid_argument("unknown suite: " + filter);
  return results;
}

}  // namespace opcirc
