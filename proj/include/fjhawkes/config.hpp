#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fjhawkes/simulate.hpp"
#include "fjhawkes/topology.hpp"

namespace fjhawkes {

// Seed used when a config does not pin one. All documented reference outputs
// are produced with this value.
inline constexpr std::uint64_t default_seed = 1;

// A per-agent quantity given either as one shared value or as a full vector.
struct ScalarOrVector {
  double value = 0.0;
  std::vector<double> values;  // empty means "use value for every agent"

  std::vector<double> materialize(std::size_t n) const;

  bool operator==(const ScalarOrVector&) const = default;
};

struct RangeSpec {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const RangeSpec&) const = default;
};

struct ScanSpec {
  std::string parameter = "beta";
  double lo = 0.0;
  double hi = 1.0;
  int count = 21;

  bool operator==(const ScanSpec&) const = default;
};

struct OutputSpec {
  std::string directory = ".";
  bool csv = true;
  bool svg = false;

  bool operator==(const OutputSpec&) const = default;
};

// Complete experiment description. Defaults reproduce the reference setup:
// five agents on a random topology, weak trust-event coupling, stable regime.
struct ExperimentConfig {
  std::size_t n = 5;
  double alpha = 0.005;
  double beta = 0.4;
  double gamma = 0.5;
  ScalarOrVector mu{0.1, {}};
  ScalarOrVector s0{0.1, {}};
  std::uint64_t seed = default_seed;
  TopologySpec topology;  // n and seed are mirrored from the fields above
  RangeSpec a_range{0.4, 0.9};
  RangeSpec b_range{-0.05, 0.05};
  std::optional<RangeSpec> t0_range = RangeSpec{0.0, 2.0};  // absent: T0 copies T1
  RangeSpec t1_range{0.0, 2.0};
  RunSettings run;
  std::optional<ScanSpec> scan;
  OutputSpec output;

  bool operator==(const ExperimentConfig&) const = default;
};

// Parse and validate a config. Unknown keys anywhere are rejected with the
// offending path; malformed JSON raises ParseError with line and column;
// out-of-range values raise ValidationError naming the field.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Canonical serialized form: every field explicit, keys sorted, so
// save(load(x)) is a fixed point.
std::string config_to_json(const ExperimentConfig& cfg);
void save_config(const ExperimentConfig& cfg, const std::string& path);

}  // namespace fjhawkes
