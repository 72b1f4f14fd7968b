#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcap/bounds.hpp"

namespace qcap {

enum class BoundKind { Nonconvexity, NoisyErasure, Depolarizing };

BoundKind parse_bound_kind(std::string_view name);  // "nonconvexity" | "noisy-erasure" | "depolarizing"
std::string to_string(BoundKind kind);
HSign parse_h_sign(std::string_view name);          // "paper" | "conservative"
std::string to_string(HSign sign);

/// Parameter names the bound takes, in canonical order: nonconvexity
/// (kappa, p); noisy-erasure and depolarizing (p, epsilon).
std::vector<std::string> bound_parameters(BoundKind kind);

/// Evaluates the bound at named parameters. Throws std::invalid_argument on a
/// missing parameter.
double evaluate_bound(BoundKind kind, const std::map<std::string, double>& params, std::size_t d,
                      HSign sign = HSign::Conservative);

struct Range {
  double min = 0.0;
  double max = 1.0;
  double step = 0.01;

  /// floor((max - min) / step) + 1, with a 1e-9 allowance for rounding.
  std::size_t count() const;
  /// min + i * step, snapped to a 1e-12 grid so printed values stay short.
  double at(std::size_t i) const;
};

/// In Tied mode epsilon is not swept: each point uses
/// epsilon_fraction * eps*(p), where eps*(p) is the edge of the positive
/// region found by first_nonpositive.
enum class EpsilonMode { Swept, Tied };

struct SweepSpec {
  BoundKind bound = BoundKind::Nonconvexity;
  std::vector<std::pair<std::string, Range>> ranges;  // first entry is the outer loop
  std::map<std::string, double> fixed;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  HSign h_sign = HSign::Conservative;
  EpsilonMode epsilon_mode = EpsilonMode::Swept;
  double epsilon_fraction = 0.5;

  /// Every bound parameter swept over [0, 1] with step 0.01.
  static SweepSpec defaults(BoundKind bound);

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;

  const Range* range(std::string_view name) const;
  Range* range(std::string_view name);
  /// Sweep `name` over `r`, replacing an existing range or fixed value.
  void set_range(const std::string& name, Range r);
  /// Pin `name`, removing it from the swept set.
  void set_fixed(const std::string& name, double value);
};

struct SweepSummary {
  double max_value = 0.0;
  std::vector<std::pair<std::string, double>> argmax;
  std::size_t positive_count = 0;
  double positive_fraction = 0.0;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<std::string> columns;  // parameter columns, then "value", "positive"
  std::vector<BoundPoint> points;    // row-major over spec.ranges
  SweepSummary summary;
};

SweepResult run_sweep(const SweepSpec& spec);
SweepSummary summarize(const std::vector<BoundPoint>& points);

/// Shortest round-trip decimal, '.' separator, no locale; -0 prints as 0.
std::string format_number(double v);

std::string to_csv(const SweepResult& result);
/// Throws std::runtime_error when the file cannot be written.
void write_csv(const SweepResult& result, const std::filesystem::path& path);

/// JSON mirror of SweepSpec:
/// {"bound", "ranges": {name: {"min","max","step"}}, "range_order": [...],
///  "fixed": {name: value}, "d", "seed", "h_sign", "epsilon_mode", "epsilon_fraction"}.
/// Fields absent from the document keep their value from `base`.
SweepSpec spec_from_json(std::string_view text, const SweepSpec& base);
SweepSpec spec_from_json(std::string_view text);
std::string spec_to_json(const SweepSpec& spec);

}  // namespace qcap
