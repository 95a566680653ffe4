#include "dqc1/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dqc1/parser.hpp"

namespace dqc1 {

using nlohmann::json;

ExperimentKind experiment_kind_from_string(const std::string& s) {
  if (s == "cross_engine") return ExperimentKind::CrossEngine;
  if (s == "trace_est") return ExperimentKind::TraceEst;
  if (s == "parity_l") return ExperimentKind::ParityL;
  if (s == "mixing") return ExperimentKind::Mixing;
  if (s == "corner") return ExperimentKind::Corner;
  if (s == "fourier") return ExperimentKind::Fourier;
  if (s == "witness") return ExperimentKind::Witness;
  throw Error("unknown experiment kind '" + s + "'");
}

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::CrossEngine: return "cross_engine";
    case ExperimentKind::TraceEst: return "trace_est";
    case ExperimentKind::ParityL: return "parity_l";
    case ExperimentKind::Mixing: return "mixing";
    case ExperimentKind::Corner: return "corner";
    case ExperimentKind::Fourier: return "fourier";
    case ExperimentKind::Witness: return "witness";
  }
  return "?";
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig cfg;
  cfg.kind = experiment_kind_from_string(j.at("kind").get<std::string>());
  cfg.seed = j.value("seed", std::uint64_t{1});
  cfg.count = j.value("count", 20);
  cfg.width = j.value("width", 4);
  cfg.depth = j.value("depth", 50);
  cfg.shots = j.value("shots", std::int64_t{4096});
  cfg.s_values = j.value("s", std::vector<int>{2, 3});
  cfg.t_max = j.value("t_max", 10);
  cfg.tolerance = j.value("tolerance", 0.0);
  if (cfg.count < 0 || cfg.width < 1 || cfg.depth < 0 || cfg.shots < 1 ||
      cfg.t_max < 0) {
    throw Error("experiment config sizes out of range");
  }
  for (int s : cfg.s_values) {
    if (s < 1) throw Error("mixing steps must be >= 1");
  }
  return cfg;
}

json ExperimentConfig::to_json() const {
  return json{
      {"kind", to_string(kind)}, {"seed", seed},
      {"count", count},          {"width", width},
      {"depth", depth},          {"shots", shots},
      {"s", s_values},           {"t_max", t_max},
      {"tolerance", tolerance},
  };
}

double ExperimentConfig::effective_tolerance() const {
  if (tolerance > 0.0) return tolerance;
  switch (kind) {
    case ExperimentKind::CrossEngine: return 1e-10;
    case ExperimentKind::TraceEst: return 1e-10;
    case ExperimentKind::ParityL: return 1e-10;
    case ExperimentKind::Mixing: return 1e-9;
    case ExperimentKind::Corner: return 1e-9;
    case ExperimentKind::Fourier: return 1e-9;
    case ExperimentKind::Witness: return 1e-9;
  }
  return 1e-9;
}

std::int64_t shots_required(double epsilon, double delta) {
  if (epsilon <= 0.0 || epsilon >= 1.0 || delta <= 0.0 || delta > 1.0) {
    throw Error("need epsilon in (0, 1) and delta in (0, 1]");
  }
  return std::int64_t(std::ceil(2.0 * std::log(2.0 / delta) /
                                (epsilon * epsilon)));
}

std::uint64_t case_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 on a per-index stream offset.
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

ExperimentCase make_case(int index, std::string input, double measured,
                         double oracle, bool pass) {
  ExperimentCase c;
  c.index = index;
  c.input = std::move(input);
  c.measured = measured;
  c.oracle = oracle;
  c.pass = pass;
  return c;
}

ExperimentCase run_case(const ExperimentConfig& cfg, int i) {
  const std::uint64_t seed = case_seed(cfg.seed, std::uint64_t(i));
  const double tol = cfg.effective_tolerance();
  switch (cfg.kind) {
    case ExperimentKind::CrossEngine: {
      const int input_len = 3;
      const Circuit c = random_circuit(cfg.width, input_len, cfg.depth,
                                       Alphabet::Clifford, seed);
      const std::string x = random_input(input_len, case_seed(seed, 1));
      const double dense = beta_dense(c, x);
      const double pauli = beta_of(pauli_run(c, x));
      return make_case(i, x, pauli, dense, std::abs(pauli - dense) <= tol);
    }
    case ExperimentKind::TraceEst: {
      const Circuit u =
          random_circuit(cfg.width, 0, cfg.depth, Alphabet::CliffordT, seed);
      const double measured = beta_dense(trace_estimation_circuit(u), "");
      const DenseMatrix um = circuit_unitary(u, "");
      const double oracle = um.trace().real() / double(um.rows());
      return make_case(i, "", measured, oracle,
                       std::abs(measured - oracle) <= tol);
    }
    case ExperimentKind::ParityL: {
      const int input_len = 3;
      const Circuit c = random_circuit(cfg.width, input_len, cfg.depth,
                                       Alphabet::CnotOnly, seed);
      const std::string x = random_input(input_len, case_seed(seed, 1));
      const double measured = beta_dense(parity_l_compile(c), x);
      const double oracle = 2.0 * classical_cnot_zero_probability(c, x) - 1.0;
      return make_case(i, x, measured, oracle,
                       std::abs(measured - oracle) <= tol);
    }
    case ExperimentKind::Mixing: {
      const int s = cfg.s_values[std::size_t(i) % cfg.s_values.size()];
      const Circuit u =
          random_circuit(cfg.width, 0, cfg.depth, Alphabet::Clifford, seed);
      const double measured = beta_dense(markov_mixing_circuit(u, s), "");
      const double oracle = beta_cd(u, "", 2, 1) / 3.0;
      const double bound = 1.0 / (3.0 * std::pow(4.0, s - 1)) + tol;
      return make_case(i, "s=" + std::to_string(s), measured, oracle,
                       std::abs(measured - oracle) <= bound);
    }
    case ExperimentKind::Corner: {
      std::mt19937_64 rng(seed);
      const int t =
          cfg.t_max == 0 ? 0 : 1 + int(rng() % std::uint64_t(cfg.t_max));
      std::vector<DenseMatrix> word;
      for (int j = 0; j < t; ++j) {
        const Circuit a = random_circuit(cfg.width, 0, cfg.depth,
                                         Alphabet::CliffordT, rng());
        word.push_back(circuit_unitary(a, ""));
      }
      const DenseMatrix u = random_corner_unitary(cfg.width, rng());
      const CornerReport rep = corner_pair_experiment(word, u);
      return make_case(i, "t=" + std::to_string(t), rep.diff, rep.bound,
                       rep.diff <= rep.bound + tol);
    }
    case ExperimentKind::Fourier: {
      std::mt19937_64 rng(seed);
      std::vector<std::uint32_t> pi(std::size_t(1) << cfg.width);
      std::iota(pi.begin(), pi.end(), 0u);
      std::shuffle(pi.begin(), pi.end(), rng);
      const FourierReport rep = fourier_permutation_experiment(pi, cfg.width);
      return make_case(i, "", rep.lhs, rep.rhs,
                       std::abs(rep.lhs - rep.rhs) <= tol);
    }
    case ExperimentKind::Witness: {
      const int w = std::max(2, cfg.width);
      if (i % 2 == 0) {
        const auto ex = entangled_example(w);
        const WitnessReport rep = witness_check(dense_run(ex.circuit, ""));
        const bool ok = rep.entangled_flag &&
                        std::abs(rep.v1) <= 1e-10 &&
                        std::abs(std::abs(rep.v2) - 1.0) <= tol;
        return make_case(i, "entangled", std::abs(rep.v2), 1.0, ok);
      }
      Circuit empty;
      empty.width = w;
      const WitnessReport rep = witness_check(dense_run(empty, ""));
      const bool ok = !rep.entangled_flag && std::abs(rep.v2) <= tol;
      return make_case(i, "start", std::abs(rep.v2), 0.0, ok);
    }
  }
  throw Error("unreachable experiment kind");
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.config = cfg;
  rep.cases.reserve(std::size_t(cfg.count));
  for (int i = 0; i < cfg.count; ++i) {
    rep.cases.push_back(run_case(cfg, i));
  }
  rep.total = cfg.count;
  for (const auto& c : rep.cases) {
    if (c.pass) ++rep.passed;
    rep.max_dev = std::max(rep.max_dev, std::abs(c.measured - c.oracle));
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

json ExperimentReport::to_json() const {
  json cases_json = json::array();
  for (const auto& c : cases) {
    cases_json.push_back(json{{"index", c.index},
                              {"input", c.input},
                              {"measured", c.measured},
                              {"oracle", c.oracle},
                              {"pass", c.pass}});
  }
  return json{
      {"config", config.to_json()},
      {"cases", std::move(cases_json)},
      {"summary",
       {{"total", total},
        {"passed", passed},
        {"max_dev", max_dev},
        {"wall_ms", wall_ms}}},
  };
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream os;
  os << "index,input,measured,oracle,pass\n";
  char buf[64];
  for (const auto& c : cases) {
    os << c.index << "," << c.input << ",";
    std::snprintf(buf, sizeof buf, "%.17g", c.measured);
    os << buf << ",";
    std::snprintf(buf, sizeof buf, "%.17g", c.oracle);
    os << buf << "," << (c.pass ? "1" : "0") << "\n";
  }
  return os.str();
}

void write_report(const ExperimentReport& r, const std::string& path,
                  ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  if (format == ReportFormat::Json) {
    out << r.to_json().dump(2) << "\n";
  } else {
    out << r.to_csv();
  }
  if (!out.good()) throw Error("write to '" + path + "' failed");
}

}  // namespace dqc1
