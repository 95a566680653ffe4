#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dqc1/gadgets.hpp"

namespace dqc1 {

enum class ExperimentKind {
  CrossEngine,
  TraceEst,
  ParityL,
  Mixing,
  Corner,
  Fourier,
  Witness,
};

ExperimentKind experiment_kind_from_string(const std::string& s);
std::string to_string(ExperimentKind k);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::CrossEngine;
  std::uint64_t seed = 1;
  int count = 20;
  int width = 4;
  int depth = 50;
  std::int64_t shots = 4096;
  std::vector<int> s_values = {2, 3};  // mixing
  int t_max = 10;                      // corner word length
  double tolerance = 0.0;              // 0 picks the per-kind default

  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  double effective_tolerance() const;
};

struct ExperimentCase {
  int index = 0;
  std::string input;
  double measured = 0.0;
  double oracle = 0.0;
  bool pass = false;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ExperimentCase> cases;
  int total = 0;
  int passed = 0;
  double max_dev = 0.0;
  double wall_ms = 0.0;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Smallest N with 2 exp(-N eps^2 / 2) <= delta.
std::int64_t shots_required(double epsilon, double delta);

/// Per-case seed stream derived from (master, index) by splitmix64, so the
/// corpus can grow without reshuffling earlier cases.
std::uint64_t case_seed(std::uint64_t master, std::uint64_t index);

ExperimentReport run_experiment(const ExperimentConfig& cfg);

enum class ReportFormat { Json, Csv };

void write_report(const ExperimentReport& r, const std::string& path,
                  ReportFormat format);

}  // namespace dqc1
