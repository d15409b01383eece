#include "fjhawkes/topology.hpp"

#include <string>

#include "fjhawkes/errors.hpp"
#include "fjhawkes/linalg.hpp"

namespace fjhawkes {

const char* to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::random: return "random";
    case TopologyKind::echo_chamber: return "echo_chamber";
    case TopologyKind::star: return "star";
  }
  return "unknown";
}

TopologyKind topology_from_string(const std::string& name) {
  if (name == "random") return TopologyKind::random;
  if (name == "echo_chamber") return TopologyKind::echo_chamber;
  if (name == "star") return TopologyKind::star;
  throw InvalidSpec("topology: unknown kind '" + name + "'");
}

namespace {

void check_range(std::pair<double, double> r, const char* what) {
  if (!(r.first <= r.second)) {
    throw InvalidRange(std::string(what) + ": range [" + std::to_string(r.first) + ", " +
                       std::to_string(r.second) + "] is reversed");
  }
}

void check_spec(const TopologySpec& spec) {
  if (spec.n == 0) throw InvalidSpec("topology: n must be at least 1");
  switch (spec.kind) {
    case TopologyKind::random:
      break;
    case TopologyKind::echo_chamber: {
      if (spec.echo.clusters == 0) throw InvalidSpec("echo_chamber: need at least one cluster");
      if (spec.n % spec.echo.clusters != 0) {
        throw InvalidSpec("echo_chamber: " + std::to_string(spec.echo.clusters) +
                          " clusters do not divide n = " + std::to_string(spec.n));
      }
      check_range(spec.echo.intra, "echo_chamber intra");
      check_range(spec.echo.inter, "echo_chamber inter");
      if (spec.echo.intra.first < 0.0 || spec.echo.inter.first < 0.0) {
        throw InvalidSpec("echo_chamber: weight ranges must be nonnegative");
      }
      break;
    }
    case TopologyKind::star: {
      if (spec.n < 2) throw InvalidSpec("star: need at least a hub and one peripheral agent");
      if (spec.star.hub >= spec.n) {
        throw InvalidSpec("star: hub index " + std::to_string(spec.star.hub) + " out of range");
      }
      if (!(spec.star.hub_weight > 0.0) || !(spec.star.hub_weight < 1.0)) {
        throw InvalidSpec("star: hub_weight must lie strictly inside (0, 1)");
      }
      break;
    }
  }
}

}  // namespace

Matrix generate_w(const TopologySpec& spec, RngStream& rng) {
  check_spec(spec);
  const std::size_t n = spec.n;
  Matrix w(n, n);

  switch (spec.kind) {
    case TopologyKind::random: {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = rng.next_unit();
      return row_normalize(w);
    }
    case TopologyKind::echo_chamber: {
      const std::size_t block = n / spec.echo.clusters;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const bool same = (i / block) == (j / block);
          const auto& range = same ? spec.echo.intra : spec.echo.inter;
          w(i, j) = rng.next_in(range.first, range.second);
        }
      }
      return row_normalize(w);
    }
    case TopologyKind::star: {
      // Deterministic layout, already row-stochastic by construction.
      const std::size_t hub = spec.star.hub;
      const double rest = (1.0 - spec.star.hub_weight) / static_cast<double>(n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == hub) {
          for (std::size_t j = 0; j < n; ++j) w(i, j) = 1.0 / static_cast<double>(n);
        } else {
          for (std::size_t j = 0; j < n; ++j) w(i, j) = (j == hub) ? spec.star.hub_weight : rest;
        }
      }
      return w;
    }
  }
  throw InvalidSpec("topology: unknown kind");
}

Matrix generate_w(const TopologySpec& spec) {
  RngStream rng(spec.seed, StreamId::influence);
  return generate_w(spec, rng);
}

std::vector<double> sample_uniform(std::size_t n, std::pair<double, double> range,
                                   RngStream& rng) {
  check_range(range, "sample_uniform");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rng.next_in(range.first, range.second);
  return out;
}

std::vector<double> sample_a(std::size_t n, std::pair<double, double> range, RngStream& rng) {
  if (range.first < 0.0 || range.second > 1.0) {
    throw InvalidRange("sample_a: susceptibility range must stay inside [0, 1]");
  }
  return sample_uniform(n, range, rng);
}

std::vector<double> sample_b(std::size_t n, std::pair<double, double> range, RngStream& rng) {
  return sample_uniform(n, range, rng);
}

std::vector<std::size_t> cluster_of(const TopologySpec& spec) {
  check_spec(spec);
  std::vector<std::size_t> ids(spec.n, 0);
  switch (spec.kind) {
    case TopologyKind::random:
      break;
    case TopologyKind::echo_chamber: {
      const std::size_t block = spec.n / spec.echo.clusters;
      for (std::size_t i = 0; i < spec.n; ++i) ids[i] = i / block;
      break;
    }
    case TopologyKind::star: {
      for (std::size_t i = 0; i < spec.n; ++i) ids[i] = (i == spec.star.hub) ? 0 : 1;
      break;
    }
  }
  return ids;
}

}  // namespace fjhawkes
