#include "gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opcirc {

void check_gate(const LinearGate& g) {
  if (g.arity_in == 0 && g.arity_out == 0)
    throw std::invalid_argument("gate must touch at least one wire");
  if (g.arity_in > 16 || g.arity_out > 16)
    throw std::invalid_argument("gate arity too large");
  if (g.matrix.size() != g.rows() * g.cols())
    throw std::invalid_argument("gate matrix has wrong size: expected " +
                                std::to_string(g.rows() * g.cols()) + ", got " +
                                std::to_string(g.matrix.size()));
  for (const cplx& e : g.matrix)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
      throw std::invalid_argument("gate matrix has non-finite entry");
}

LinearGate adjoint_gate(const LinearGate& g) {
  check_gate(g);
  LinearGate adj;
  adj.arity_in = g.arity_out;
  adj.arity_out = g.arity_in;
  adj.matrix.resize(g.matrix.size());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      adj.matrix[c * g.rows() + r] = std::conj(g.at(r, c));
  if (!g.name.empty()) adj.name = g.name + "*";
  return adj;
}

bool is_unitary(const LinearGate& g, double tol) {
  if (g.arity_in != g.arity_out) return false;
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += std::conj(g.at(k, i)) * g.at(k, j);
      const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (std::abs(dot - want) > tol) return false;
    }
  }
  return true;
}

bool gates_equal(const LinearGate& a, const LinearGate& b) {
  return a.arity_in == b.arity_in && a.arity_out == b.arity_out && a.matrix == b.matrix;
}

namespace {

LinearGate make(std::size_t in, std::size_t out, std::vector<cplx> m, std::string name) {
  LinearGate g{in, out, std::move(m), std::move(name)};
  check_gate(g);
  return g;
}

}  // namespace

LinearGate hadamard_gate() {
  const double s = 1.0 / std::numbers::sqrt2;
  return make(1, 1, {s, s, s, -s}, "H");
}

LinearGate identity_gate() { return make(1, 1, {1, 0, 0, 1}, "I"); }

LinearGate pauli_x_gate() { return make(1, 1, {0, 1, 1, 0}, "X"); }

LinearGate cnot_gate() {
  // Control is the first wire.
  return make(2, 2,
              {1, 0, 0, 0,  //
               0, 1, 0, 0,  //
               0, 0, 0, 1,  //
               0, 0, 1, 0},
              "CNOT");
}

LinearGate copy_gate() { return make(1, 2, {1, 0, 0, 0, 0, 0, 0, 1}, "COPY"); }

LinearGate erase_gate() { return make(1, 0, {1, 1}, "ERASE"); }

LinearGate prep0_gate() { return make(0, 1, {1, 0}, "PREP0"); }

LinearGate proj0_gate() { return make(1, 1, {1, 0, 0, 0}, "PROJ0"); }

LinearGate cphase_gate(double theta) {
  const cplx phase = std::exp(cplx{0.0, 2.0 * std::numbers::pi * theta});
  LinearGate g = make(2, 2,
                      {1, 0, 0, 0,  //
                       0, 1, 0, 0,  //
                       0, 0, 1, 0,  //
                       0, 0, 0, phase},
                      "");
  char buf[64];
  std::snprintf(buf, sizeof buf, "CPHASE(%.17g)", theta);
  g.name = buf;
  return g;
}

bool builtin_gate(const std::string& name, LinearGate& out) {
  if (name == "H") { out = hadamard_gate(); return true; }
  if (name == "I") { out = identity_gate(); return true; }
  if (name == "X") { out = pauli_x_gate(); return true; }
  if (name == "CNOT") { out = cnot_gate(); return true; }
  if (name == "COPY") { out = copy_gate(); return true; }
  if (name == "ERASE") { out = erase_gate(); return true; }
  if (name == "PREP0") { out = prep0_gate(); return true; }
  if (name == "PROJ0") { out = proj0_gate(); return true; }
  if (name.rfind("CPHASE(", 0) == 0 && name.back() == ')') {
    const std::string arg = name.substr(7, name.size() - 8);
    std::size_t used = 0;
    double theta = 0.0;
    try {
      theta = std::stod(arg, &used);
    } catch (const std::exception&) {
      return false;
    }
    if (used != arg.size()) return false;
    out = cphase_gate(theta);
    return true;
  }
  return false;
}

}  // namespace opcirc
