#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/gate.hpp"
#include "core/verify.hpp"

using namespace opcirc;

TEST_CASE("gate shape checks") {
  CHECK_NOTHROW(check_gate(hadamard_gate()));
  LinearGate bad{0, 0, {cplx{1.0}}, ""};
  CHECK_THROWS(check_gate(bad));  // must touch at least one wire
  LinearGate wrong{1, 1, {1, 0, 0}, ""};
  CHECK_THROWS(check_gate(wrong));
  LinearGate nan_gate{1, 1, {1, 0, 0, std::nan("")}, ""};
  CHECK_THROWS(check_gate(nan_gate));
}

TEST_CASE("builtins have the expected matrices") {
  const double s = 1.0 / std::sqrt(2.0);
  const LinearGate h = hadamard_gate();
  CHECK(h.at(0, 0) == cplx{s});
  CHECK(h.at(1, 1) == cplx{-s});

  const LinearGate copy = copy_gate();
  CHECK(copy.arity_in == 1);
  CHECK(copy.arity_out == 2);
  CHECK(copy.at(0, 0) == cplx{1.0});  // |0> -> |00>
  CHECK(copy.at(3, 1) == cplx{1.0});  // |1> -> |11>
  CHECK(copy.at(1, 0) == cplx{0.0});

  const LinearGate erase = erase_gate();
  CHECK(erase.arity_out == 0);
  CHECK(erase.matrix == std::vector<cplx>{cplx{1.0}, cplx{1.0}});

  const LinearGate prep = prep0_gate();
  CHECK(prep.arity_in == 0);
  CHECK(prep.matrix == std::vector<cplx>{cplx{1.0}, cplx{0.0}});

  CHECK(proj0_gate().at(0, 0) == cplx{1.0});
  CHECK(proj0_gate().at(1, 1) == cplx{0.0});
}

TEST_CASE("cphase endpoints") {
  CHECK(gates_equal(cphase_gate(0.0), LinearGate{2, 2,
                                                 {1, 0, 0, 0,  //
                                                  0, 1, 0, 0,  //
                                                  0, 0, 1, 0,  //
                                                  0, 0, 0, 1},
                                                 ""}));
  const LinearGate half = cphase_gate(0.5);
  CHECK(std::abs(half.at(3, 3) - cplx{-1.0}) < 1e-15);  // e^{i pi}
  CHECK(is_unitary(half));
  CHECK(is_unitary(cphase_gate(0.37)));
}

TEST_CASE("adjoint examples") {
  // Hadamard is self-adjoint
  CHECK(gates_equal(adjoint_gate(hadamard_gate()), hadamard_gate()));

  // copy adjoint maps |00> -> |0>, |11> -> |1>, |01>,|10> -> 0
  const LinearGate copy_adj = adjoint_gate(copy_gate());
  CHECK(copy_adj.arity_in == 2);
  CHECK(copy_adj.arity_out == 1);
  CHECK(copy_adj.at(0, 0) == cplx{1.0});
  CHECK(copy_adj.at(1, 3) == cplx{1.0});
  CHECK(copy_adj.at(0, 1) == cplx{0.0});
  CHECK(copy_adj.at(1, 2) == cplx{0.0});

  // diag(1, i) -> diag(1, -i)
  LinearGate phase{1, 1, {1, 0, 0, cplx{0, 1}}, ""};
  CHECK(adjoint_gate(phase).at(1, 1) == cplx{0, -1});

  // adjoint of the |0> preparation is the <0| bra
  const LinearGate prep_adj = adjoint_gate(prep0_gate());
  CHECK(prep_adj.arity_in == 1);
  CHECK(prep_adj.arity_out == 0);
  CHECK(prep_adj.matrix == std::vector<cplx>{cplx{1.0}, cplx{0.0}});
}

TEST_CASE("adjoint involution is exact") {
  std::mt19937_64 rng(0xB0BB1E);
  for (int rep = 0; rep < 20; ++rep) {
    const LinearGate g = random_unitary_gate(rng, 1 + rep % 2);
    CHECK(gates_equal(adjoint_gate(adjoint_gate(g)), g));
  }
  CHECK(gates_equal(adjoint_gate(adjoint_gate(copy_gate())), copy_gate()));
  CHECK(gates_equal(adjoint_gate(adjoint_gate(erase_gate())), erase_gate()));
}

TEST_CASE("adjoint is the conjugate transpose") {
  std::mt19937_64 rng(7);
  LinearGate g = random_unitary_gate(rng, 2);
  g.matrix[5] += cplx{0.3, -0.2};  // not unitary; the identity must still hold
  const LinearGate adj = adjoint_gate(g);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) CHECK(adj.at(c, r) == std::conj(g.at(r, c)));
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(hadamard_gate()));
  CHECK(is_unitary(cnot_gate()));
  CHECK_FALSE(is_unitary(copy_gate()));
  CHECK_FALSE(is_unitary(erase_gate()));
  CHECK_FALSE(is_unitary(proj0_gate()));
  std::mt19937_64 rng(3);
  CHECK(is_unitary(random_unitary_gate(rng, 2)));
}

TEST_CASE("builtin gate names parse") {
  LinearGate g;
  CHECK(builtin_gate("H", g));
  CHECK(builtin_gate("CNOT", g));
  CHECK(builtin_gate("COPY", g));
  CHECK(builtin_gate("ERASE", g));
  CHECK(builtin_gate("PREP0", g));
  CHECK(builtin_gate("CPHASE(0.25)", g));
  CHECK(gates_equal(g, cphase_gate(0.25)));
  CHECK_FALSE(builtin_gate("NOPE", g));
  CHECK_FALSE(builtin_gate("CPHASE(x)", g));
  CHECK_FALSE(builtin_gate("", g));
}
