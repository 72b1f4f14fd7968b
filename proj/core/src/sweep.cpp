#include "qcap/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace qcap {

namespace {

using nlohmann::json;

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

double root_edge(BoundKind kind, double p, std::size_t d, HSign sign) {
  const RootBracket br = kind == BoundKind::NoisyErasure ? noisy_erasure_epsilon_root(p, d)
                                                         : depolarizing_epsilon_root(p, sign);
  return br.lo;
}

}  // namespace

BoundKind parse_bound_kind(std::string_view name) {
  if (name == "nonconvexity") return BoundKind::Nonconvexity;
  if (name == "noisy-erasure") return BoundKind::NoisyErasure;
  if (name == "depolarizing") return BoundKind::Depolarizing;
  throw std::invalid_argument("unknown bound '" + std::string(name) +
                              "' (expected nonconvexity, noisy-erasure, depolarizing)");
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Nonconvexity: return "nonconvexity";
    case BoundKind::NoisyErasure: return "noisy-erasure";
    case BoundKind::Depolarizing: return "depolarizing";
  }
  return "?";
}

HSign parse_h_sign(std::string_view name) {
  if (name == "paper") return HSign::Printed;
  if (name == "conservative") return HSign::Conservative;
  throw std::invalid_argument("unknown h-sign '" + std::string(name) +
                              "' (expected paper, conservative)");
}

std::string to_string(HSign sign) { return sign == HSign::Printed ? "paper" : "conservative"; }

std::vector<std::string> bound_parameters(BoundKind kind) {
  if (kind == BoundKind::Nonconvexity) return {"kappa", "p"};
  return {"p", "epsilon"};
}

double evaluate_bound(BoundKind kind, const std::map<std::string, double>& params, std::size_t d,
                      HSign sign) {
  auto get = [&](const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end())
      throw std::invalid_argument("bound '" + to_string(kind) + "' needs parameter '" + name + "'");
    return it->second;
  };
  switch (kind) {
    case BoundKind::Nonconvexity: return nonconvexity_bound(get("kappa"), get("p"), d);
    case BoundKind::NoisyErasure: return noisy_erasure_bound(get("p"), get("epsilon"), d);
    case BoundKind::Depolarizing: return depolarizing_bound(get("p"), get("epsilon"), d, sign);
  }
  throw std::logic_error("unhandled bound kind");
}

std::size_t Range::count() const {
  return static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
}

double Range::at(std::size_t i) const {
  const double raw = min + static_cast<double>(i) * step;
  return std::round(raw * 1e12) / 1e12;
}

SweepSpec SweepSpec::defaults(BoundKind bound) {
  SweepSpec spec;
  spec.bound = bound;
  for (const auto& name : bound_parameters(bound)) spec.ranges.emplace_back(name, Range{});
  return spec;
}

const Range* SweepSpec::range(std::string_view name) const {
  for (const auto& [n, r] : ranges)
    if (n == name) return &r;
  return nullptr;
}

Range* SweepSpec::range(std::string_view name) {
  for (auto& [n, r] : ranges)
    if (n == name) return &r;
  return nullptr;
}

void SweepSpec::set_range(const std::string& name, Range r) {
  fixed.erase(name);
  if (Range* existing = range(name)) {
    *existing = r;
  } else {
    ranges.emplace_back(name, r);
  }
}

void SweepSpec::set_fixed(const std::string& name, double value) {
  std::erase_if(ranges, [&](const auto& e) { return e.first == name; });
  fixed[name] = value;
}

void SweepSpec::validate() const {
  const auto params = bound_parameters(bound);
  auto known = [&](const std::string& n) {
    return std::find(params.begin(), params.end(), n) != params.end();
  };
  for (const auto& [name, r] : ranges) {
    if (!known(name))
      throw std::invalid_argument("bound '" + to_string(bound) + "' has no parameter '" + name + "'");
    if (!(r.step > 0.0)) throw std::invalid_argument("range '" + name + "': step must be > 0");
    if (!(r.min <= r.max)) throw std::invalid_argument("range '" + name + "': min > max");
    if (!in_unit(r.min) || !in_unit(r.max))
      throw std::invalid_argument("range '" + name + "' must lie within [0,1]");
  }
  for (const auto& [name, v] : fixed) {
    if (!known(name))
      throw std::invalid_argument("bound '" + to_string(bound) + "' has no parameter '" + name + "'");
    if (!in_unit(v)) throw std::invalid_argument("fixed '" + name + "' must lie within [0,1]");
  }
  for (const auto& name : params) {
    const bool swept = range(name) != nullptr;
    const bool pinned = fixed.count(name) > 0;
    const bool tied = epsilon_mode == EpsilonMode::Tied && name == "epsilon";
    if (tied && (swept || pinned))
      throw std::invalid_argument("epsilon is tied to p; do not sweep or fix it");
    if (!tied && !swept && !pinned)
      throw std::invalid_argument("parameter '" + name + "' is neither swept nor fixed");
    if (swept && pinned) throw std::invalid_argument("parameter '" + name + "' is swept and fixed");
  }
  if (epsilon_mode == EpsilonMode::Tied) {
    if (bound == BoundKind::Nonconvexity)
      throw std::invalid_argument("tied epsilon mode needs a bound with an epsilon parameter");
    if (!(epsilon_fraction >= 0.0 && epsilon_fraction <= 1.0))
      throw std::invalid_argument("epsilon_fraction must lie within [0,1]");
  }
  if (d < 2) throw std::invalid_argument("key dimension d must be >= 2");
  if (bound == BoundKind::Depolarizing && d != 2)
    throw std::invalid_argument("the depolarizing bound is defined for d = 2 only");
}

SweepSummary summarize(const std::vector<BoundPoint>& points) {
  SweepSummary s;
  if (points.empty()) return s;
  const auto best = std::max_element(points.begin(), points.end(),
                                     [](const auto& a, const auto& b) { return a.value < b.value; });
  s.max_value = best->value;
  s.argmax = best->params;
  s.positive_count = static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const auto& p) { return p.positive; }));
  s.positive_fraction = static_cast<double>(s.positive_count) / static_cast<double>(points.size());
  return s;
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepResult result;
  result.spec = spec;
  for (const auto& [name, r] : spec.ranges) result.columns.push_back(name);
  const bool tied = spec.epsilon_mode == EpsilonMode::Tied;
  if (tied) result.columns.push_back("epsilon");

  std::vector<std::size_t> counts;
  std::size_t total = 1;
  for (const auto& [name, r] : spec.ranges) {
    counts.push_back(r.count());
    total *= counts.back();
  }
  result.points.reserve(total);
  std::map<std::string, double> params = spec.fixed;
  std::vector<std::size_t> idx(counts.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<std::pair<std::string, double>> row;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const auto& [name, r] = spec.ranges[k];
      const double v = r.at(idx[k]);
      params[name] = v;
      row.emplace_back(name, v);
    }
    if (tied) {
      const double eps = spec.epsilon_fraction * root_edge(spec.bound, params.at("p"), spec.d, spec.h_sign);
      params["epsilon"] = eps;
      row.emplace_back("epsilon", eps);
    }
    result.points.push_back(
        BoundPoint::make(std::move(row), evaluate_bound(spec.bound, params, spec.d, spec.h_sign)));
    // odometer, last range fastest
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < counts[k]) break;
      idx[k] = 0;
    }
  }
  result.summary = summarize(result.points);
  return result;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_csv(const SweepResult& result) {
  std::string out;
  for (const auto& c : result.columns) out += c + ",";
  out += "value,positive\n";
  for (const auto& pt : result.points) {
    for (const auto& [name, v] : pt.params) out += format_number(v) + ",";
    out += format_number(pt.value);
    out += pt.positive ? ",1\n" : ",0\n";
  }
  return out;
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  const std::string csv = to_csv(result);
  f.write(csv.data(), static_cast<std::streamsize>(csv.size()));
  if (!f) throw std::runtime_error("failed writing '" + path.string() + "'");
}

SweepSpec spec_from_json(std::string_view text, const SweepSpec& base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed sweep spec: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("sweep spec must be a JSON object");
  try {
    SweepSpec spec = base;
    if (j.contains("bound")) {
      const auto kind = parse_bound_kind(j["bound"].get<std::string>());
      if (kind != spec.bound) spec = SweepSpec::defaults(kind);
    }
    if (j.contains("ranges")) {
      const auto& rs = j["ranges"];
      std::vector<std::string> order;
      if (j.contains("range_order")) {
        order = j["range_order"].get<std::vector<std::string>>();
      } else {
        for (const auto& name : bound_parameters(spec.bound))
          if (rs.contains(name)) order.push_back(name);
        for (const auto& [name, _] : rs.items())
          if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
      }
      for (const auto& name : order) {
        if (!rs.contains(name)) throw std::invalid_argument("range_order names unknown range '" + name + "'");
        const auto& r = rs[name];
        Range range = spec.range(name) ? *spec.range(name) : Range{};
        range.min = r.value("min", range.min);
        range.max = r.value("max", range.max);
        range.step = r.value("step", range.step);
        spec.set_range(name, range);
      }
      if (j.contains("range_order")) {
        std::stable_sort(spec.ranges.begin(), spec.ranges.end(), [&](const auto& a, const auto& b) {
          const auto ia = std::find(order.begin(), order.end(), a.first) - order.begin();
          const auto ib = std::find(order.begin(), order.end(), b.first) - order.begin();
          return ia < ib;
        });
      }
    }
    if (j.contains("fixed"))
      for (const auto& [name, v] : j["fixed"].items()) spec.set_fixed(name, v.get<double>());
    if (j.contains("d")) spec.d = j["d"].get<std::size_t>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("h_sign")) spec.h_sign = parse_h_sign(j["h_sign"].get<std::string>());
    if (j.contains("epsilon_mode")) {
      const auto mode = j["epsilon_mode"].get<std::string>();
      if (mode == "tied") {
        spec.epsilon_mode = EpsilonMode::Tied;
        std::erase_if(spec.ranges, [](const auto& e) { return e.first == "epsilon"; });
        spec.fixed.erase("epsilon");
      } else if (mode == "swept") {
        spec.epsilon_mode = EpsilonMode::Swept;
      } else {
        throw std::invalid_argument("unknown epsilon_mode '" + mode + "'");
      }
    }
    if (j.contains("epsilon_fraction")) spec.epsilon_fraction = j["epsilon_fraction"].get<double>();
    return spec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("sweep spec field has the wrong type: ") + e.what());
  }
}

SweepSpec spec_from_json(std::string_view text) {
  return spec_from_json(text, SweepSpec::defaults(BoundKind::Nonconvexity));
}

std::string spec_to_json(const SweepSpec& spec) {
  json j;
  j["bound"] = to_string(spec.bound);
  j["ranges"] = json::object();
  j["range_order"] = json::array();
  for (const auto& [name, r] : spec.ranges) {
    j["ranges"][name] = {{"min", r.min}, {"max", r.max}, {"step", r.step}};
    j["range_order"].push_back(name);
  }
  j["fixed"] = json::object();
  for (const auto& [name, v] : spec.fixed) j["fixed"][name] = v;
  j["d"] = spec.d;
  j["seed"] = spec.seed;
  j["h_sign"] = to_string(spec.h_sign);
  j["epsilon_mode"] = spec.epsilon_mode == EpsilonMode::Tied ? "tied" : "swept";
  j["epsilon_fraction"] = spec.epsilon_fraction;
  return j.dump(2);
}

}  // namespace qcap
