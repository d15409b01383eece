#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fjhawkes/matrix.hpp"
#include "fjhawkes/rng.hpp"

namespace fjhawkes {

enum class TopologyKind { random, echo_chamber, star };

const char* to_string(TopologyKind k);
TopologyKind topology_from_string(const std::string& name);

struct EchoOptions {
  std::size_t clusters = 2;
  std::pair<double, double> intra{0.5, 1.0};    // within-cluster weight range
  std::pair<double, double> inter{0.01, 0.05};  // cross-cluster weight range

  bool operator==(const EchoOptions&) const = default;
};

struct StarOptions {
  std::size_t hub = 0;
  double hub_weight = 0.8;  // attention each peripheral agent pays the hub

  bool operator==(const StarOptions&) const = default;
};

struct TopologySpec {
  TopologyKind kind = TopologyKind::random;
  std::size_t n = 5;
  std::uint64_t seed = 0;
  EchoOptions echo;
  StarOptions star;

  bool operator==(const TopologySpec&) const = default;
};

// Row-stochastic influence matrix for the requested topology. Random and
// echo-chamber draw from the stream; the star layout is deterministic and
// leaves the stream untouched. Throws InvalidSpec for impossible shapes
// (n = 0, star with n < 2, cluster count not dividing n, bad weight ranges).
Matrix generate_w(const TopologySpec& spec, RngStream& rng);

// Convenience overload seeding the influence substream from spec.seed.
Matrix generate_w(const TopologySpec& spec);

// Per-agent draws used alongside the topology. All use half-open uniform
// ranges and consume exactly n values from the stream.
std::vector<double> sample_uniform(std::size_t n, std::pair<double, double> range,
                                   RngStream& rng);
std::vector<double> sample_a(std::size_t n, std::pair<double, double> range, RngStream& rng);
std::vector<double> sample_b(std::size_t n, std::pair<double, double> range, RngStream& rng);

// Cluster id per agent: echo chambers number their blocks, a star maps the
// hub to 0 and the periphery to 1, everything else is one group.
std::vector<std::size_t> cluster_of(const TopologySpec& spec);

}  // namespace fjhawkes
