// Acceptance suite: one line per criterion, exit 0 only if all pass.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dqc1/engines.hpp"
#include "dqc1/experiments.hpp"
#include "dqc1/gadgets.hpp"
#include "dqc1/parser.hpp"

using namespace dqc1;

namespace {

std::string bits_for(int value, int len) {
  std::string s;
  for (int b = len - 1; b >= 0; --b) s.push_back((value >> b) & 1 ? '1' : '0');
  return s;
}

bool and_gadget_truth_table() {
  for (int w = 1; w <= 4; ++w) {
    const Circuit g = and_gadget(w);
    for (int v = 0; v < 4; ++v) {
      const std::string x = bits_for(v, 2);
      const double expect = ((v >> 1) & v & 1) ? -1.0 : 1.0;
      if (std::abs(beta_dense(g, x) - expect) > 1e-12) return false;
    }
  }
  return true;
}

bool entanglement_example() {
  const EntangledExample ex = entangled_example(2);
  const DenseState st = dense_run(ex.circuit, "");
  if ((st.rho - ex.expected.to_dense()).cwiseAbs().maxCoeff() > 1e-12) {
    return false;
  }
  const WitnessReport rep = witness_check(st);
  return std::abs(rep.v1) <= 1e-10 && std::abs(rep.v2 - Complex(1.0)) <= 1e-10;
}

bool cross_engine_equivalence() {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> width(2, 6), depth(1, 200);
  for (int i = 0; i < 100; ++i) {
    const int w = width(rng);
    const Circuit c = random_circuit(w, 3, depth(rng), Alphabet::Clifford,
                                     rng());
    const std::string x = random_input(3, rng());
    if (std::abs(beta_dense(c, x) - beta_of(pauli_run(c, x))) > 1e-10) {
      return false;
    }
  }
  return true;
}

bool trace_estimation() {
  std::mt19937_64 rng(1002);
  std::uniform_int_distribution<int> width(1, 5), depth(1, 40);
  std::vector<double> gadget_beta, exact;
  for (int i = 0; i < 50; ++i) {
    const Circuit u =
        random_circuit(width(rng), 0, depth(rng), Alphabet::CliffordT, rng());
    const double beta = beta_dense(trace_estimation_circuit(u), "");
    const DenseMatrix um = circuit_unitary(u, "");
    const double re = um.trace().real() / double(um.rows());
    if (std::abs(beta - re) > 1e-10) return false;
    gadget_beta.push_back(beta);
    exact.push_back(re);
  }
  const std::int64_t shots = shots_required(0.05, 0.01);
  const double half = hoeffding_half_width(shots, 0.99);
  int covered = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = std::size_t(trial) % gadget_beta.size();
    const std::int64_t zeros = binomial_draw(
        shots, probability_zero(gadget_beta[k]), case_seed(1002, trial));
    const double re_hat = 2.0 * double(zeros) / double(shots) - 1.0;
    if (std::abs(re_hat - exact[k]) <= half) ++covered;
  }
  return covered >= 990;
}

bool squaring_reduction() {
  std::mt19937_64 rng(1003);
  std::uniform_int_distribution<int> width(1, 4), depth(1, 30);
  for (int i = 0; i < 50; ++i) {
    const Circuit y =
        random_circuit(width(rng), 2, depth(rng), Alphabet::CliffordT, rng());
    const std::string x = random_input(2, rng());
    const DenseMatrix sq = circuit_unitary(square_for_trace(y), x);
    const double lhs = sq.trace().real() / double(sq.rows());
    if (std::abs(lhs - beta_dense(y, x)) > 1e-10) return false;
  }
  return true;
}

bool parity_l_dualization() {
  std::mt19937_64 rng(1004);
  std::uniform_int_distribution<int> width(2, 6), depth(1, 40);
  for (int i = 0; i < 100; ++i) {
    const Circuit c =
        random_circuit(width(rng), 3, depth(rng), Alphabet::CnotOnly, rng());
    const std::string x = random_input(3, rng());
    const double beta = beta_dense(parity_l_compile(c), x);
    const double oracle = 2.0 * classical_cnot_zero_probability(c, x) - 1.0;
    if (std::abs(std::abs(beta) - 1.0) > 1e-10) return false;
    if (std::abs(beta - oracle) > 1e-10) return false;
  }
  return true;
}

bool reduction_composition() {
  std::mt19937_64 rng(1005);
  std::uniform_int_distribution<int> main_width(2, 3), depth(1, 12);
  for (int i = 0; i < 20; ++i) {
    const int raw_len = 2;
    std::vector<Circuit> rs;
    for (int b = 0; b < 2; ++b) {
      rs.push_back(
          random_circuit(3, raw_len, depth(rng), Alphabet::CnotOnly, rng()));
    }
    const Circuit main = random_circuit(main_width(rng), int(rs.size()),
                                        depth(rng), Alphabet::CliffordT,
                                        rng());
    const Circuit composed = reduction_compose(rs, main);
    for (int v = 0; v < (1 << raw_len); ++v) {
      const std::string x = bits_for(v, raw_len);
      const double lhs = beta_cd(composed, x, 2, 1);
      const double rhs = beta_dense(main, derived_input(rs, x));
      if (std::abs(lhs - rhs) > 1e-10) return false;
    }
  }
  return true;
}

bool mixing_circuit() {
  std::mt19937_64 rng(1006);
  std::uniform_int_distribution<int> depth(1, 40);
  for (int i = 0; i < 20; ++i) {
    const int s = (i % 2 == 0) ? 2 : 3;
    const Circuit u = random_circuit(4, 0, depth(rng), Alphabet::Clifford,
                                     rng());
    const double target = beta_cd(u, "", 2, 1) / 3.0;
    const double beta = beta_dense(markov_mixing_circuit(u, s), "");
    const double bound = 1.0 / (3.0 * std::pow(4.0, s - 1)) + 1e-9;
    if (std::abs(beta - target) > bound) return false;

    // Three-trace expansion of beta_{2,1}.
    const DenseMatrix um = circuit_unitary(u, "");
    const DenseMatrix z1 = PauliString::z(4, 1).to_dense();
    const DenseMatrix z2 = PauliString::z(4, 2).to_dense();
    const double sum = ((um * z1 * um.adjoint() * z1).trace().real() +
                        (um * z2 * um.adjoint() * z1).trace().real() +
                        (um * z1 * z2 * um.adjoint() * z1).trace().real()) /
                       16.0;
    if (std::abs(sum - beta_cd(u, "", 2, 1)) > 1e-10) return false;
  }
  return true;
}

bool corner_pair_bound() {
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<int> width(2, 5), tdist(1, 10), depth(1, 25);
  for (int i = 0; i < 50; ++i) {
    const int w = width(rng);
    const int t = tdist(rng);
    std::vector<DenseMatrix> word;
    for (int j = 0; j < t; ++j) {
      const Circuit a =
          random_circuit(w, 0, depth(rng), Alphabet::CliffordT, rng());
      word.push_back(circuit_unitary(a, ""));
    }
    const CornerReport rep =
        corner_pair_experiment(word, random_corner_unitary(w, rng()));
    if (rep.diff > rep.bound + 1e-9) return false;
  }
  const CornerReport id = corner_pair_experiment(
      {DenseMatrix::Identity(16, 16)}, random_corner_unitary(4, 77));
  return std::abs(id.diff - 2.0) <= 1e-9;
}

bool fourier_identity() {
  std::mt19937_64 rng(1008);
  for (int w = 1; w <= 3; ++w) {
    for (int i = 0; i < 10; ++i) {
      std::vector<std::uint32_t> pi(std::size_t(1) << w);
      std::iota(pi.begin(), pi.end(), 0u);
      std::shuffle(pi.begin(), pi.end(), rng);
      const FourierReport rep = fourier_permutation_experiment(pi, w);
      if (std::abs(rep.lhs - rep.rhs) > 1e-9) return false;
    }
  }
  return true;
}

bool parser_robustness() {
  std::mt19937_64 rng(1009);
  std::uniform_int_distribution<int> width(1, 6), input_len(0, 3),
      depth(0, 30);
  for (int i = 0; i < 1000; ++i) {
    const int ilen = input_len(rng);
    const Alphabet alphabet =
        (i % 3 == 0) ? Alphabet::Clifford : Alphabet::CliffordT;
    const Circuit c =
        random_circuit(std::max(2, width(rng)), ilen, depth(rng), alphabet,
                       rng());
    const Circuit once = parse(print_circuit(c));
    const Circuit twice = parse(print_circuit(once));
    if (!(once == twice)) return false;
    if (print_circuit(once) != print_circuit(twice)) return false;
  }
  std::uniform_int_distribution<int> len(0, 48), byte(0, 255);
  for (int i = 0; i < 100000; ++i) {
    std::string s;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) s.push_back(char(byte(rng)));
    try {
      parse(s);
    } catch (const SourceError&) {
      // expected for malformed input; anything else would terminate
    }
  }
  return true;
}

bool experiment_determinism() {
  for (auto kind : {ExperimentKind::CrossEngine, ExperimentKind::Mixing,
                    ExperimentKind::Fourier}) {
    ExperimentConfig cfg;
    cfg.kind = kind;
    cfg.seed = 2024;
    cfg.count = 5;
    cfg.width = 3;
    cfg.depth = 20;
    cfg.s_values = {1, 2};
    nlohmann::json a = run_experiment(cfg).to_json();
    nlohmann::json b = run_experiment(cfg).to_json();
    a["summary"].erase("wall_ms");
    b["summary"].erase("wall_ms");
    if (a.dump() != b.dump()) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 and-gadget truth table (widths 1-4)", and_gadget_truth_table},
      {"2 entanglement example and witness", entanglement_example},
      {"3 cross-engine equivalence (100 clifford circuits)",
       cross_engine_equivalence},
      {"4 trace estimation exactness and hoeffding coverage",
       trace_estimation},
      {"5 squaring reduction (50 circuits)", squaring_reduction},
      {"6 parity-l dualization (100 cnot circuits)", parity_l_dualization},
      {"7 reduction composition (20 instances)", reduction_composition},
      {"8 mixing circuit bound and three-trace sum", mixing_circuit},
      {"9 corner-pair trace bound (50 words)", corner_pair_bound},
      {"10 fourier permutation identity (30 cases)", fourier_identity},
      {"11 parser round-trip and fuzzing", parser_robustness},
      {"12 experiment report determinism", experiment_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %s threw: %s\n", c.label, e.what());
    }
    std::printf("%s criterion %s\n", ok ? "PASS" : "FAIL", c.label);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
