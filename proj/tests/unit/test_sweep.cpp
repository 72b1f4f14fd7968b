#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcap/sweep.hpp"

using namespace qcap;

namespace {

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

double param(const BoundPoint& pt, const std::string& name) {
  for (const auto& [n, v] : pt.params)
    if (n == name) return v;
  throw std::logic_error("missing " + name);
}

}  // namespace

TEST_SUITE("range") {
  TEST_CASE("point counts tolerate rounding") {
    CHECK(Range{0.0, 1.0, 0.01}.count() == 101);
    CHECK(Range{0.5, 0.99, 0.01}.count() == 50);
    CHECK(Range{0.0, 0.2, 0.005}.count() == 41);
    CHECK(Range{0.3, 0.3, 0.1}.count() == 1);
    CHECK(Range{0.0, 1.0, 0.3}.count() == 4);
  }

  TEST_CASE("grid values are snapped") {
    CHECK(Range{0.0, 1.0, 0.1}.at(3) == 0.3);
    CHECK(Range{0.5, 0.99, 0.01}.at(7) == 0.57);
    CHECK(format_number(Range{0.0, 1.0, 0.01}.at(29)) == "0.29");
  }
}

TEST_SUITE("format_number") {
  TEST_CASE("shortest round trip") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(-0.25) == "-0.25");
    CHECK(format_number(1e-20) == "1e-20");
    const double x = 0.06593194462450902;
    CHECK(std::stod(format_number(x)) == x);
  }
}

TEST_SUITE("run_sweep") {
  TEST_CASE("default nonconvexity grid") {
    const auto r = run_sweep(SweepSpec::defaults(BoundKind::Nonconvexity));
    CHECK(r.points.size() == 10201);
    CHECK(r.columns == std::vector<std::string>{"kappa", "p"});
    // oracle: the grid maximum 1/2 sits at kappa = 0, p = 0
    CHECK(r.summary.max_value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.summary.argmax == std::vector<std::pair<std::string, double>>{{"kappa", 0.0}, {"p", 0.0}});
    const auto csv = to_csv(r);
    CHECK(line_count(csv) == 10202);
    CHECK(csv.rfind("kappa,p,value,positive\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);
  }

  TEST_CASE("row-major order, last range fastest") {
    auto spec = SweepSpec::defaults(BoundKind::Nonconvexity);
    spec.set_range("kappa", {0.0, 0.2, 0.1});
    spec.set_range("p", {0.0, 0.5, 0.25});
    const auto r = run_sweep(spec);
    REQUIRE(r.points.size() == 9);
    CHECK(param(r.points[0], "kappa") == 0.0);
    CHECK(param(r.points[1], "p") == 0.25);
    CHECK(param(r.points[3], "kappa") == 0.1);
    CHECK(param(r.points[3], "p") == 0.0);
  }

  TEST_CASE("positive column is value > 0") {
    for (auto kind : {BoundKind::Nonconvexity, BoundKind::NoisyErasure, BoundKind::Depolarizing}) {
      auto spec = SweepSpec::defaults(kind);
      for (auto& [name, r] : spec.ranges) r.step = 0.05;
      const auto r = run_sweep(spec);
      std::size_t positives = 0;
      for (const auto& pt : r.points) {
        CHECK(pt.positive == (pt.value > 0.0));
        positives += pt.positive;
      }
      CHECK(r.summary.positive_count == positives);
      CHECK(r.summary.positive_fraction ==
            doctest::Approx(static_cast<double>(positives) / r.points.size()).epsilon(1e-15));
    }
  }

  TEST_CASE("noisy-erasure region is nonempty") {
    auto spec = SweepSpec::defaults(BoundKind::NoisyErasure);
    spec.set_range("p", {0.5, 0.99, 0.01});
    spec.set_range("epsilon", {0.0, 0.2, 0.005});
    const auto r = run_sweep(spec);
    CHECK(r.points.size() == 50 * 41);
    CHECK(r.summary.positive_fraction > 0.0);
  }

  TEST_CASE("tied epsilon mode") {
    auto spec = SweepSpec::defaults(BoundKind::Depolarizing);
    spec.set_range("p", {0.0, 0.5, 0.01});
    spec.ranges.erase(spec.ranges.begin() + 1);
    spec.epsilon_mode = EpsilonMode::Tied;
    const auto r = run_sweep(spec);
    CHECK(r.columns == std::vector<std::string>{"p", "epsilon"});
    CHECK(r.points.size() == 51);
    CHECK_FALSE(r.points.front().positive);  // p = 0 carries no key
    for (std::size_t i = 1; i < r.points.size(); ++i) {
      CHECK(r.points[i].positive);
      CHECK(param(r.points[i], "epsilon") > 0.0);
    }
  }

  TEST_CASE("fixed parameters drop out of the columns") {
    auto spec = SweepSpec::defaults(BoundKind::NoisyErasure);
    spec.set_fixed("epsilon", 0.0);
    const auto r = run_sweep(spec);
    CHECK(r.columns == std::vector<std::string>{"p"});
    CHECK(r.points.size() == 101);
    CHECK(r.points[50].value == 0.5);
  }

  TEST_CASE("deterministic bytes") {
    auto spec = SweepSpec::defaults(BoundKind::Depolarizing);
    spec.seed = 9;
    CHECK(to_csv(run_sweep(spec)) == to_csv(run_sweep(spec)));
  }

  TEST_CASE("write_csv reports unwritable paths") {
    const auto r = run_sweep(SweepSpec::defaults(BoundKind::Nonconvexity));
    CHECK_THROWS_AS(write_csv(r, "/nonexistent-dir/x.csv"), std::runtime_error);
    const auto path = std::filesystem::temp_directory_path() / "qcap_test_sweep.csv";
    write_csv(r, path);
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == to_csv(r));
    std::filesystem::remove(path);
  }
}

TEST_SUITE("spec validation") {
  TEST_CASE("rejections") {
    auto bad_step = SweepSpec::defaults(BoundKind::Nonconvexity);
    bad_step.range("p")->step = 0.0;
    CHECK_THROWS_AS(bad_step.validate(), std::invalid_argument);

    auto inverted = SweepSpec::defaults(BoundKind::Nonconvexity);
    *inverted.range("p") = {0.6, 0.4, 0.1};
    CHECK_THROWS_AS(inverted.validate(), std::invalid_argument);

    auto outside = SweepSpec::defaults(BoundKind::Nonconvexity);
    outside.range("kappa")->max = 1.5;
    CHECK_THROWS_AS(outside.validate(), std::invalid_argument);

    auto unknown = SweepSpec::defaults(BoundKind::Nonconvexity);
    unknown.set_fixed("epsilon", 0.1);
    CHECK_THROWS_AS(unknown.validate(), std::invalid_argument);

    auto missing = SweepSpec::defaults(BoundKind::Nonconvexity);
    missing.ranges.pop_back();
    CHECK_THROWS_AS(missing.validate(), std::invalid_argument);

    auto dep3 = SweepSpec::defaults(BoundKind::Depolarizing);
    dep3.d = 3;
    CHECK_THROWS_AS(dep3.validate(), std::invalid_argument);

    auto tied = SweepSpec::defaults(BoundKind::NoisyErasure);
    tied.epsilon_mode = EpsilonMode::Tied;
    CHECK_THROWS_AS(tied.validate(), std::invalid_argument);

    CHECK_THROWS_AS(parse_bound_kind("capacity"), std::invalid_argument);
    CHECK_THROWS_AS(parse_h_sign("plus"), std::invalid_argument);
  }
}

TEST_SUITE("spec json") {
  TEST_CASE("round trip") {
    auto spec = SweepSpec::defaults(BoundKind::Depolarizing);
    spec.set_range("p", {0.1, 0.5, 0.05});
    spec.set_fixed("epsilon", 0.01);
    spec.seed = 17;
    spec.h_sign = HSign::Printed;
    const auto back = spec_from_json(spec_to_json(spec));
    CHECK(back.bound == BoundKind::Depolarizing);
    REQUIRE(back.ranges.size() == 1);
    CHECK(back.range("p")->min == 0.1);
    CHECK(back.fixed.at("epsilon") == 0.01);
    CHECK(back.seed == 17);
    CHECK(back.h_sign == HSign::Printed);
    CHECK(to_csv(run_sweep(back)) == to_csv(run_sweep(spec)));
  }

  TEST_CASE("overlay keeps unspecified fields") {
    const auto base = SweepSpec::defaults(BoundKind::NoisyErasure);
    const auto s = spec_from_json(R"({"ranges": {"epsilon": {"max": 0.2}}, "d": 3})", base);
    CHECK(s.bound == BoundKind::NoisyErasure);
    CHECK(s.d == 3);
    CHECK(s.range("epsilon")->max == 0.2);
    CHECK(s.range("epsilon")->step == 0.01);
    CHECK(s.range("p")->max == 1.0);
  }

  TEST_CASE("range_order sets the loop nesting") {
    const auto s = spec_from_json(R"({"bound": "nonconvexity", "range_order": ["p", "kappa"],
                                      "ranges": {"kappa": {"step": 0.5}, "p": {"step": 0.5}}})");
    REQUIRE(s.ranges.size() == 2);
    CHECK(s.ranges[0].first == "p");
    CHECK(s.ranges[1].first == "kappa");
  }

  TEST_CASE("tied mode from json") {
    const auto s = spec_from_json(R"({"bound": "depolarizing", "epsilon_mode": "tied",
                                      "epsilon_fraction": 0.25, "ranges": {"p": {"max": 0.5}}})");
    CHECK(s.epsilon_mode == EpsilonMode::Tied);
    CHECK(s.range("epsilon") == nullptr);
    CHECK_NOTHROW(s.validate());
    CHECK(s.epsilon_fraction == 0.25);
  }

  TEST_CASE("malformed specs are rejected") {
    CHECK_THROWS_AS(spec_from_json("[1, 2]"), std::invalid_argument);
    CHECK_THROWS_AS(spec_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(spec_from_json(R"({"d": "two"})"), std::invalid_argument);
    CHECK_THROWS_AS(spec_from_json(R"({"epsilon_mode": "loose"})"), std::invalid_argument);
  }
}
