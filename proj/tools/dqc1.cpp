// Command-line front end for the DQC1 workbench.
//
// Exit codes: 0 success / accept, 1 reject, 2 undetermined, 3 usage error,
// 4 input-file error, 5 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dqc1/experiments.hpp"
#include "dqc1/parser.hpp"

namespace {

using namespace dqc1;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInput = 4;
constexpr int kExitVerify = 5;

struct InputFileError : Error {
  using Error::Error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFileError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Circuit load_circuit(const std::string& path) {
  try {
    return parse(read_source(path));
  } catch (const SourceError& e) {
    throw InputFileError(path + ":" + e.what());
  }
}

int cmd_validate(const std::string& file) {
  std::cout << print_circuit(load_circuit(file));
  return kExitOk;
}

int cmd_run(const std::string& file, const std::string& input,
            const std::string& engine, bool as_json) {
  const Circuit c = load_circuit(file);
  double beta;
  json diag;
  if (engine == "pauli") {
    const HeisenbergState st = pauli_run(c, input);
    beta = beta_of(st);
    diag["engine"] = "pauli";
    diag["terms"] = st.observable.term_count();
  } else {
    const DenseState st = dense_run(c, input);
    st.validate();
    beta = beta_of(st);
    const StateDecomposition dec = decompose(st);
    diag["engine"] = "dense";
    diag["defined_r"] = dec.defined_r;
    if (dec.defined_r) {
      diag["trace_r"] = std::abs(dec.r_part.trace());
      const Eigen::Index dim = dec.r_part.rows();
      Complex z1r = 0.0;
      for (Eigen::Index j = 0; j < dim; ++j) {
        z1r += (j < dim / 2 ? 1.0 : -1.0) * dec.r_part(j, j);
      }
      diag["trace_z1_r"] = std::abs(z1r);
    }
  }
  if (as_json) {
    diag["beta"] = beta;
    diag["p_zero"] = probability_zero(beta);
    std::cout << diag.dump(2) << "\n";
  } else {
    std::cout << "beta = " << beta << "\n";
    std::cout << "P(0) = " << probability_zero(beta) << "\n";
    for (const auto& [k, v] : diag.items()) {
      std::cout << k << " = " << v << "\n";
    }
  }
  return kExitOk;
}

int cmd_sample(const std::string& file, const std::string& input,
               std::int64_t shots, std::uint64_t seed, bool as_json) {
  const Circuit c = load_circuit(file);
  const SampleCounts counts = sample(c, input, shots, seed);
  const double beta_hat = 2.0 * double(counts.zeros) / double(shots) - 1.0;
  if (as_json) {
    std::cout << json{{"zeros", counts.zeros},
                      {"ones", counts.ones},
                      {"beta_hat", beta_hat},
                      {"seed", seed}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "zeros = " << counts.zeros << "\nones = " << counts.ones
              << "\nbeta_hat = " << beta_hat << "\nseed = " << seed << "\n";
  }
  return kExitOk;
}

int cmd_trace_est(const std::string& file, const std::string& input,
                  std::int64_t shots, std::uint64_t seed, double confidence,
                  bool imag, double q, bool as_json) {
  const Circuit u = load_circuit(file);
  const TraceEstimate est = estimate_trace(u, input, shots, seed, confidence);
  json out{{"re_hat", est.re_hat},
           {"half_width", est.half_width},
           {"shots", est.shots},
           {"seed", seed}};
  if (est.exact) out["exact"] = *est.exact;
  if (imag) {
    const DenseState st = dense_run(imag_trace_circuit(u), input);
    const double y1 = y1_expectation(st);
    out["y1_expectation"] = y1;
    out["imag_scaled"] = kImagTraceSign * y1;
  }
  int code = kExitOk;
  if (q > 0.0) {
    const Decision d = decide(est.re_hat, DecisionPolicy{q, q});
    out["decision"] = to_string(d);
    if (d == Decision::Reject) code = kExitReject;
    if (d == Decision::Undetermined) code = kExitUndetermined;
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "re_hat = " << est.re_hat << " +- " << est.half_width << "\n";
    if (est.exact) std::cout << "exact = " << *est.exact << "\n";
    if (out.contains("y1_expectation")) {
      std::cout << "y1_expectation = " << out["y1_expectation"] << "\n";
    }
    if (out.contains("decision")) {
      std::cout << "decision = " << out["decision"].get<std::string>() << "\n";
    }
  }
  return code;
}

bool verify_boolean_gadget(const Circuit& g, const std::string& name) {
  bool ok = true;
  for (int v = 0; v < (1 << g.input_len); ++v) {
    std::string x;
    for (int b = g.input_len - 1; b >= 0; --b) {
      x.push_back((v >> b) & 1 ? '1' : '0');
    }
    const double beta = beta_dense(g, x);
    bool expected_minus = false;
    if (name == "and") expected_minus = x[0] == '1' && x[1] == '1';
    if (name == "xor") expected_minus = x[0] != x[1];
    if (name == "not") expected_minus = x[0] == '0';
    const double expected = expected_minus ? -1.0 : 1.0;
    const bool pass = std::abs(beta - expected) <= 1e-12;
    std::cerr << name << " x=" << x << " beta=" << beta
              << (pass ? " ok" : " FAIL") << "\n";
    ok = ok && pass;
  }
  return ok;
}

int cmd_gadget(const std::string& which, const std::string& file, int s) {
  if (which == "and" || which == "xor" || which == "not") {
    const Circuit g = which == "and"   ? and_gadget()
                      : which == "xor" ? xor_gadget()
                                       : not_gadget();
    std::cout << print_circuit(g);
    return verify_boolean_gadget(g, which) ? kExitOk : kExitVerify;
  }
  if (which == "entangle") {
    const EntangledExample ex = entangled_example(2);
    std::cout << print_circuit(ex.circuit);
    const DenseState st = dense_run(ex.circuit, "");
    const double dev =
        (st.rho - ex.expected.to_dense()).cwiseAbs().maxCoeff();
    const WitnessReport rep = witness_check(st);
    std::cerr << "state deviation = " << dev << "\n";
    std::cerr << "witness v1 = " << std::abs(rep.v1)
              << ", v2 = " << std::abs(rep.v2)
              << ", entangled = " << (rep.entangled_flag ? "yes" : "no")
              << "\n";
    return dev <= 1e-12 && rep.entangled_flag ? kExitOk : kExitVerify;
  }
  if (which == "parity-l") {
    const Circuit c = load_circuit(file);
    const Circuit compiled = parity_l_compile(c);
    std::cout << print_circuit(compiled);
    bool ok = true;
    const int cases = c.input_len <= 8 ? (1 << c.input_len) : 256;
    for (int v = 0; v < cases; ++v) {
      std::string x;
      for (int b = c.input_len - 1; b >= 0; --b) {
        x.push_back((v >> b) & 1 ? '1' : '0');
      }
      const double beta = beta_dense(compiled, x);
      const double oracle = 2.0 * classical_cnot_zero_probability(c, x) - 1.0;
      const bool pass = std::abs(beta - oracle) <= 1e-10;
      std::cerr << "x=" << (x.empty() ? "-" : x) << " beta=" << beta
                << " oracle=" << oracle << (pass ? " ok" : " FAIL") << "\n";
      ok = ok && pass;
      if (c.input_len == 0) break;
    }
    return ok ? kExitOk : kExitVerify;
  }
  if (which == "mixing") {
    const Circuit u = load_circuit(file);
    const Circuit mix = markov_mixing_circuit(u, s);
    std::cout << print_circuit(mix);
    if (mix.width > dense_cap()) {
      std::cerr << "width " << mix.width
                << " exceeds dense cap; verification skipped\n";
      return kExitOk;
    }
    const std::string x(std::size_t(u.input_len), '0');
    const double measured = beta_dense(mix, x);
    const double target = beta_cd(u, x, 2, 1) / 3.0;
    const double bound = 1.0 / (3.0 * std::pow(4.0, s - 1)) + 1e-9;
    const bool pass = std::abs(measured - target) <= bound;
    std::cerr << "beta_mix=" << measured << " beta21/3=" << target
              << " bound=" << bound << (pass ? " ok" : " FAIL") << "\n";
    return pass ? kExitOk : kExitVerify;
  }
  std::cerr << "unknown gadget '" << which << "'\n";
  return kExitUsage;
}

int cmd_experiment(const std::string& kind, const std::string& config_path,
                   const std::string& out_path, const std::string& format) {
  json j = json::object();
  if (!config_path.empty()) {
    j = json::parse(read_source(config_path));
  }
  j["kind"] = kind;
  const ExperimentConfig cfg = ExperimentConfig::from_json(j);
  const ExperimentReport rep = run_experiment(cfg);
  if (out_path.empty()) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    write_report(rep, out_path,
                 format == "csv" ? ReportFormat::Csv : ReportFormat::Json);
  }
  std::cerr << "passed " << rep.passed << "/" << rep.total
            << ", max deviation " << rep.max_dev << "\n";
  return rep.passed == rep.total ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DQC1 one-clean-qubit circuit workbench"};
  app.require_subcommand(1);

  std::string file, input, engine = "dense", format = "json";
  std::string gadget_name, gadget_file, config_path, out_path, kind;
  std::int64_t shots = 4096;
  std::uint64_t seed = 1;
  double confidence = 0.99, q = 0.0;
  bool as_json = false, imag = false;
  int s = 2;

  auto* validate = app.add_subcommand("validate", "parse and print a circuit");
  validate->add_option("file", file)->required();

  auto* run = app.add_subcommand("run", "evaluate beta and P(0)");
  run->add_option("file", file)->required();
  run->add_option("--input", input);
  run->add_option("--engine", engine)
      ->check(CLI::IsMember({"dense", "pauli"}));
  run->add_flag("--json", as_json);

  auto* smp = app.add_subcommand("sample", "measure qubit 1 repeatedly");
  smp->add_option("file", file)->required();
  smp->add_option("--input", input);
  smp->add_option("--shots", shots)->required();
  smp->add_option("--seed", seed)->required();
  smp->add_flag("--json", as_json);

  auto* te = app.add_subcommand("trace-est", "Hadamard-test trace estimation");
  te->add_option("file", file)->required();
  te->add_option("--input", input);
  te->add_option("--shots", shots)->required();
  te->add_option("--seed", seed)->required();
  te->add_option("--confidence", confidence);
  te->add_option("--q", q, "decision bound; sets exit code");
  te->add_flag("--imag", imag);
  te->add_flag("--json", as_json);

  auto* gad = app.add_subcommand("gadget", "emit and verify a named gadget");
  gad->add_option("name", gadget_name)->required();
  gad->add_option("file", gadget_file);
  gad->add_option("--s", s);

  auto* exp = app.add_subcommand("experiment", "run a seeded experiment");
  exp->add_option("kind", kind)->required();
  exp->add_option("--config", config_path);
  exp->add_option("--out", out_path);
  exp->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (run->parsed()) return cmd_run(file, input, engine, as_json);
    if (smp->parsed()) return cmd_sample(file, input, shots, seed, as_json);
    if (te->parsed()) {
      return cmd_trace_est(file, input, shots, seed, confidence, imag, q,
                           as_json);
    }
    if (gad->parsed()) return cmd_gadget(gadget_name, gadget_file, s);
    if (exp->parsed()) return cmd_experiment(kind, config_path, out_path,
                                             format);
  } catch (const InputFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
