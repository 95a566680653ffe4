#include <doctest.h>

#include <random>

#include "dqc1/engines.hpp"
#include "dqc1/parser.hpp"
#include "helpers.hpp"

using namespace dqc1;
using namespace dqc1::testing;

namespace {

Circuit always(int width, std::vector<Gate> gates) {
  return Circuit{width, 0, {Instruction::always(std::move(gates))}};
}

}  // namespace

TEST_CASE("identity circuit leaves beta at 1") {
  const Circuit c = always(3, {Gate::i(1)});
  CHECK(beta_of(dense_run(c, "")) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_of(pauli_run(c, "")) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_dense(c, "") == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("single-qubit rotations of Z1") {
  // H1 maps Z1 to X1: beta = 0.
  CHECK(beta_of(dense_run(always(2, {Gate::h(1)}), "")) ==
        doctest::Approx(0.0).epsilon(1e-14));
  // X1 flips Z1: beta = -1.
  CHECK(beta_of(pauli_run(always(2, {Gate::x(1)}), "")) ==
        doctest::Approx(-1.0).epsilon(1e-14));
  // T on qubit 1 is diagonal: beta stays 1.
  CHECK(beta_dense(always(1, {Gate::t(1)}), "") ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("dense state invariants") {
  std::mt19937_64 rng(41);
  const Circuit c = random_circuit(4, 2, 30, Alphabet::CliffordT, rng());
  const DenseState st = dense_run(c, "10");
  CHECK_NOTHROW(st.validate(true));
  CHECK(std::abs(st.rho.trace() - Complex(1.0)) < 1e-10);
}

TEST_CASE("dense and heisenberg engines agree on random circuits") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = random_circuit(4, 2, 40, Alphabet::Clifford, rng());
    const std::string x = random_input(2, rng());
    const double bd = beta_of(dense_run(c, x));
    const double bh = beta_of(pauli_run(c, x));
    const double bf = beta_dense(c, x);
    CHECK(bd == doctest::Approx(bh).epsilon(1e-10));
    CHECK(bd == doctest::Approx(bf).epsilon(1e-10));
  }
}

TEST_CASE("heisenberg engine handles sparse non-clifford circuits") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    const Circuit c = random_circuit(3, 1, 20, Alphabet::CliffordT, rng());
    const std::string x = random_input(1, rng());
    CHECK(beta_of(pauli_run(c, x)) ==
          doctest::Approx(beta_of(dense_run(c, x))).epsilon(1e-10));
  }
}

TEST_CASE("term cap aborts runaway expansions") {
  // Alternating T/H walls on every qubit blow up the Pauli support.
  Circuit c{6, 0, {}};
  std::vector<Gate> wall;
  for (int layer = 0; layer < 6; ++layer) {
    for (int q = 1; q <= 6; ++q) {
      wall.push_back(Gate::t(q));
      wall.push_back(Gate::h(q));
    }
    for (int q = 1; q < 6; ++q) wall.push_back(Gate::cx(q, q + 1));
  }
  c.instructions.push_back(Instruction::always(wall));
  CHECK_THROWS_AS(pauli_run(c, "", 64), TermBlowupError);
}

TEST_CASE("decompose splits off the workspace part") {
  // H1 gives beta = 0; R must be unit-norm-ish, traceless and Z1-orthogonal.
  const DenseState st = dense_run(always(2, {Gate::h(1)}), "");
  const StateDecomposition d = decompose(st);
  CHECK(d.beta == doctest::Approx(0.0).epsilon(1e-12));
  REQUIRE(d.defined_r);
  CHECK(std::abs(d.r_part.trace()) < 1e-10);
  const DenseMatrix z1 = PauliString::z(2, 1).to_dense();
  CHECK(std::abs((d.r_part * z1).trace()) < 1e-10);
  // Reassemble: 2^w rho = 1 + beta Z1 + sqrt(1-beta^2) R.
  const DenseMatrix lhs = 4.0 * st.rho;
  const DenseMatrix rhs = DenseMatrix::Identity(4, 4) + d.beta * z1 +
                          std::sqrt(1.0 - d.beta * d.beta) * d.r_part;
  CHECK(max_abs_diff(lhs, rhs) < 1e-10);

  // beta = +-1 leaves R undefined.
  const StateDecomposition trivial =
      decompose(dense_run(always(2, {Gate::i(1)}), ""));
  CHECK_FALSE(trivial.defined_r);
  CHECK(trivial.beta == doctest::Approx(1.0));
}

TEST_CASE("probability_zero") {
  CHECK(probability_zero(1.0) == 1.0);
  CHECK(probability_zero(-1.0) == 0.0);
  CHECK(probability_zero(0.5) == doctest::Approx(0.75));
  CHECK_THROWS_AS(probability_zero(1.5), Error);
}

TEST_CASE("sampling is deterministic under a seed and concentrates") {
  const Circuit c = always(2, {Gate::h(1)});
  const SampleCounts a = sample(c, "", 10000, 77);
  const SampleCounts b = sample(c, "", 10000, 77);
  CHECK(a.zeros == b.zeros);
  CHECK(a.zeros + a.ones == 10000);
  // beta = 0 here, so zeros/shots ~ 1/2 within ~5 sigma.
  CHECK(std::abs(a.zeros - 5000) < 250);
  CHECK_THROWS_AS(sample(c, "", 0, 1), Error);
}

TEST_CASE("beta_cd reduces to beta at c = d = 1") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = random_circuit(3, 1, 25, Alphabet::CliffordT, rng());
    const std::string x = random_input(1, rng());
    const double expected = 2.0 * probability_zero(beta_dense(c, x)) - 1.0;
    CHECK(beta_cd(c, x, 1, 1) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("beta_cd against an explicit density-matrix oracle") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 6; ++trial) {
    const Circuit circ = random_circuit(4, 0, 20, Alphabet::CliffordT, rng());
    const DenseMatrix u = circuit_unitary(circ, "");
    for (int cp = 1; cp <= 3; ++cp) {
      for (int dm = 1; dm <= 3; ++dm) {
        // rho = |0..0><0..0|^{c} (x) 1/2^{w-c}, projector on d leading zeros.
        const Eigen::Index dim = 16;
        DenseMatrix rho = DenseMatrix::Zero(dim, dim);
        DenseMatrix proj = DenseMatrix::Zero(dim, dim);
        for (Eigen::Index j = 0; j < dim; ++j) {
          if ((j >> (4 - cp)) == 0) rho(j, j) = 1.0 / double(1 << (4 - cp));
          if ((j >> (4 - dm)) == 0) proj(j, j) = 1.0;
        }
        const double p0 = (u * rho * u.adjoint() * proj).trace().real();
        CHECK(beta_cd(circ, "", cp, dm) ==
              doctest::Approx(2.0 * p0 - 1.0).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(beta_cd(always(2, {Gate::h(1)}), "", 0, 1), QubitRangeError);
  CHECK_THROWS_AS(beta_cd(always(2, {Gate::h(1)}), "", 1, 3), QubitRangeError);
}

TEST_CASE("decide applies the promise thresholds") {
  DecisionPolicy p{2.0, 3.0};
  CHECK(decide(0.6, p) == Decision::Accept);
  CHECK(decide(0.5, p) == Decision::Accept);
  CHECK(decide(-0.5, p) == Decision::Reject);
  CHECK(decide(0.2, p) == Decision::Undetermined);
  CHECK(to_string(Decision::Undetermined) == "undetermined");
  CHECK_THROWS_AS(decide(0.0, DecisionPolicy{0.5, 1.0}), Error);
}

TEST_CASE("binomial_draw is reproducible") {
  CHECK(binomial_draw(1000, 0.25, 5) == binomial_draw(1000, 0.25, 5));
  CHECK(binomial_draw(1000, 0.0, 5) == 0);
  CHECK(binomial_draw(1000, 1.0, 5) == 1000);
}
