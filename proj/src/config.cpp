#include "fjhawkes/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "fjhawkes/errors.hpp"

namespace fjhawkes {

using Json = nlohmann::ordered_json;

std::vector<double> ScalarOrVector::materialize(std::size_t n) const {
  if (values.empty()) return std::vector<double>(n, value);
  if (values.size() != n) {
    throw ValidationError("per-agent vector has length " + std::to_string(values.size()) +
                          ", expected " + std::to_string(n));
  }
  return values;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ValidationError("config: " + path + ": " + msg);
}

void reject_unknown(const Json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) fail(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
  }
}

double need_number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

long need_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::uint64_t need_seed(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return j.get<std::uint64_t>();
  fail(path, "expected a nonnegative integer");
}

std::string need_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

RangeSpec need_range(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(path, "expected [lo, hi]");
  }
  RangeSpec r{j[0].get<double>(), j[1].get<double>()};
  if (!(r.lo <= r.hi)) fail(path, "lo exceeds hi");
  return r;
}

ScalarOrVector need_scalar_or_vector(const Json& j, const std::string& path) {
  ScalarOrVector out;
  if (j.is_number()) {
    out.value = j.get<double>();
    return out;
  }
  if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number()) fail(path, "expected numbers");
      out.values.push_back(v.get<double>());
    }
    if (out.values.empty()) fail(path, "empty vector");
    return out;
  }
  fail(path, "expected a number or an array of numbers");
}

void parse_topology(const Json& j, TopologySpec& topo) {
  reject_unknown(j, "topology",
                 {"kind", "clusters", "intra_range", "inter_range", "hub", "hub_weight"});
  if (j.contains("kind")) {
    const std::string kind = need_string(j["kind"], "topology.kind");
    try {
      topo.kind = topology_from_string(kind);
    } catch (const InvalidSpec&) {
      fail("topology.kind", "unknown kind '" + kind + "'");
    }
  }
  if (j.contains("clusters")) {
    const long c = need_integer(j["clusters"], "topology.clusters");
    if (c < 1) fail("topology.clusters", "must be at least 1");
    topo.echo.clusters = static_cast<std::size_t>(c);
  }
  if (j.contains("intra_range")) {
    const RangeSpec r = need_range(j["intra_range"], "topology.intra_range");
    topo.echo.intra = {r.lo, r.hi};
  }
  if (j.contains("inter_range")) {
    const RangeSpec r = need_range(j["inter_range"], "topology.inter_range");
    topo.echo.inter = {r.lo, r.hi};
  }
  if (j.contains("hub")) {
    const long h = need_integer(j["hub"], "topology.hub");
    if (h < 0) fail("topology.hub", "must be nonnegative");
    topo.star.hub = static_cast<std::size_t>(h);
  }
  if (j.contains("hub_weight")) {
    topo.star.hub_weight = need_number(j["hub_weight"], "topology.hub_weight");
  }
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.n < 1) fail("n", "must be at least 1");
  if (!(cfg.gamma > 0.0) || !(cfg.gamma < 1.0)) fail("gamma", "must lie strictly inside (0, 1)");
  if (!(cfg.alpha >= 0.0) || !(cfg.alpha <= 1.0)) fail("alpha", "must lie in [0, 1]");
  if (!(cfg.beta >= 0.0) || !(cfg.beta <= 1.0)) fail("beta", "must lie in [0, 1]");

  const std::vector<double> mu = [&] {
    try {
      return cfg.mu.materialize(cfg.n);
    } catch (const ValidationError& e) {
      fail("mu", e.what());
    }
  }();
  for (double m : mu) {
    if (m < 0.0) fail("mu", "baseline intensity must be nonnegative");
  }
  try {
    (void)cfg.s0.materialize(cfg.n);
  } catch (const ValidationError& e) {
    fail("s0", e.what());
  }

  if (cfg.a_range.lo < 0.0 || cfg.a_range.hi > 1.0) fail("a_range", "must stay inside [0, 1]");
  if (cfg.run.max_steps < 1) fail("run.max_steps", "must be at least 1");
  if (!(cfg.run.conv_tol > 0.0)) fail("run.conv_tol", "must be positive");
  if (!(cfg.run.div_threshold > 0.0)) fail("run.div_threshold", "must be positive");

  if (cfg.scan) {
    const ScanSpec& s = *cfg.scan;
    if (s.parameter != "alpha" && s.parameter != "beta" && s.parameter != "gamma") {
      fail("scan.parameter", "unknown parameter '" + s.parameter + "'");
    }
    if (s.count < 2) fail("scan.count", "need at least two grid points");
    if (!(s.lo < s.hi)) fail("scan", "lo must be below hi");
  }

  TopologySpec topo = cfg.topology;
  topo.n = cfg.n;
  try {
    (void)cluster_of(topo);
  } catch (const InvalidSpec& e) {
    fail("topology", e.what());
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config: top level must be an object");

  reject_unknown(j, "",
                 {"n", "alpha", "beta", "gamma", "mu", "s0", "seed", "topology", "a_range",
                  "b_range", "t0_range", "t1_range", "run", "scan", "output"});

  ExperimentConfig cfg;
  if (j.contains("n")) {
    const long n = need_integer(j["n"], "n");
    if (n < 1) fail("n", "must be at least 1");
    cfg.n = static_cast<std::size_t>(n);
  }
  if (j.contains("alpha")) cfg.alpha = need_number(j["alpha"], "alpha");
  if (j.contains("beta")) cfg.beta = need_number(j["beta"], "beta");
  if (j.contains("gamma")) cfg.gamma = need_number(j["gamma"], "gamma");
  if (j.contains("mu")) cfg.mu = need_scalar_or_vector(j["mu"], "mu");
  if (j.contains("s0")) cfg.s0 = need_scalar_or_vector(j["s0"], "s0");
  if (j.contains("seed")) cfg.seed = need_seed(j["seed"], "seed");
  if (j.contains("topology")) {
    if (!j["topology"].is_object()) fail("topology", "expected an object");
    parse_topology(j["topology"], cfg.topology);
  }
  if (j.contains("a_range")) cfg.a_range = need_range(j["a_range"], "a_range");
  if (j.contains("b_range")) cfg.b_range = need_range(j["b_range"], "b_range");
  if (j.contains("t0_range")) {
    if (j["t0_range"].is_null()) {
      cfg.t0_range.reset();  // start from the anchor trust
    } else {
      cfg.t0_range = need_range(j["t0_range"], "t0_range");
    }
  }
  if (j.contains("t1_range")) cfg.t1_range = need_range(j["t1_range"], "t1_range");
  if (j.contains("run")) {
    const Json& r = j["run"];
    if (!r.is_object()) fail("run", "expected an object");
    reject_unknown(r, "run", {"max_steps", "conv_tol", "div_threshold"});
    if (r.contains("max_steps")) {
      cfg.run.max_steps = static_cast<int>(need_integer(r["max_steps"], "run.max_steps"));
    }
    if (r.contains("conv_tol")) cfg.run.conv_tol = need_number(r["conv_tol"], "run.conv_tol");
    if (r.contains("div_threshold")) {
      cfg.run.div_threshold = need_number(r["div_threshold"], "run.div_threshold");
    }
  }
  if (j.contains("scan")) {
    const Json& s = j["scan"];
    if (!s.is_object()) fail("scan", "expected an object");
    reject_unknown(s, "scan", {"parameter", "lo", "hi", "count"});
    ScanSpec spec;
    if (s.contains("parameter")) spec.parameter = need_string(s["parameter"], "scan.parameter");
    if (s.contains("lo")) spec.lo = need_number(s["lo"], "scan.lo");
    if (s.contains("hi")) spec.hi = need_number(s["hi"], "scan.hi");
    if (s.contains("count")) spec.count = static_cast<int>(need_integer(s["count"], "scan.count"));
    cfg.scan = spec;
  }
  if (j.contains("output")) {
    const Json& o = j["output"];
    if (!o.is_object()) fail("output", "expected an object");
    reject_unknown(o, "output", {"directory", "formats"});
    if (o.contains("directory")) cfg.output.directory = need_string(o["directory"], "output.directory");
    if (o.contains("formats")) {
      if (!o["formats"].is_array()) fail("output.formats", "expected an array");
      cfg.output.csv = false;
      cfg.output.svg = false;
      for (const auto& f : o["formats"]) {
        const std::string name = need_string(f, "output.formats");
        if (name == "csv") cfg.output.csv = true;
        else if (name == "svg") cfg.output.svg = true;
        else fail("output.formats", "unknown format '" + name + "'");
      }
    }
  }

  cfg.topology.n = cfg.n;
  cfg.topology.seed = cfg.seed;
  validate_config(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const ExperimentConfig& cfg) {
  Json j;
  j["n"] = cfg.n;
  j["alpha"] = cfg.alpha;
  j["beta"] = cfg.beta;
  j["gamma"] = cfg.gamma;
  j["mu"] = cfg.mu.values.empty() ? Json(cfg.mu.value) : Json(cfg.mu.values);
  j["s0"] = cfg.s0.values.empty() ? Json(cfg.s0.value) : Json(cfg.s0.values);
  j["seed"] = cfg.seed;
  j["topology"] = Json{{"kind", to_string(cfg.topology.kind)},
                       {"clusters", cfg.topology.echo.clusters},
                       {"intra_range", {cfg.topology.echo.intra.first, cfg.topology.echo.intra.second}},
                       {"inter_range", {cfg.topology.echo.inter.first, cfg.topology.echo.inter.second}},
                       {"hub", cfg.topology.star.hub},
                       {"hub_weight", cfg.topology.star.hub_weight}};
  j["a_range"] = {cfg.a_range.lo, cfg.a_range.hi};
  j["b_range"] = {cfg.b_range.lo, cfg.b_range.hi};
  if (cfg.t0_range) {
    j["t0_range"] = {cfg.t0_range->lo, cfg.t0_range->hi};
  } else {
    j["t0_range"] = nullptr;
  }
  j["t1_range"] = {cfg.t1_range.lo, cfg.t1_range.hi};
  j["run"] = Json{{"max_steps", cfg.run.max_steps},
                  {"conv_tol", cfg.run.conv_tol},
                  {"div_threshold", cfg.run.div_threshold}};
  if (cfg.scan) {
    j["scan"] = Json{{"parameter", cfg.scan->parameter},
                     {"lo", cfg.scan->lo},
                     {"hi", cfg.scan->hi},
                     {"count", cfg.scan->count}};
  }
  Json formats = Json::array();
  if (cfg.output.csv) formats.push_back("csv");
  if (cfg.output.svg) formats.push_back("svg");
  j["output"] = Json{{"directory", cfg.output.directory}, {"formats", formats}};
  return j.dump(2) + "\n";
}

void save_config(const ExperimentConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("config: cannot open " + path + " for writing");
  out << config_to_json(cfg);
  out.close();
  if (out.fail()) throw IoError("config: write failed for " + path);
}

}  // namespace fjhawkes
