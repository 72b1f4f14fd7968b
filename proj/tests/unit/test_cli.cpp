#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "qcap/json_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qcap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qcap::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli eval") {
  TEST_CASE("single points") {
    const auto nc = invoke({"eval", "--bound", "nonconvexity", "--kappa", "0.0041", "--p", "0.5", "--d", "2"});
    CHECK(nc.code == 0);
    CHECK(std::stod(nc.out) > 0.0);
    CHECK(invoke({"eval", "--bound", "noisy-erasure", "--p", "0.5", "--epsilon", "0"}).out == "0.5\n");
    CHECK(invoke({"eval", "--bound", "depolarizing", "--p", "0", "--epsilon", "0"}).out == "0\n");
    CHECK(invoke({"eval", "--bound", "depolarizing", "--p", "0.6", "--epsilon", "0"}).out == "0.278071905113\n");
  }

  TEST_CASE("usage errors exit 1") {
    CHECK(invoke({"eval", "--bound", "capacity", "--p", "0.5"}).code == 1);
    CHECK(invoke({"eval", "--bound", "nonconvexity", "--p", "0.5"}).code == 1);
    CHECK(invoke({"eval"}).code == 1);
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"--help"}).code == 0);
  }
}

TEST_SUITE("cli verify-table") {
  TEST_CASE("identity holds") {
    const auto r = invoke({"verify-table", "--kappa", "0.5", "--p", "0.5", "--d", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sum/2: 0.0625\n") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(invoke({"verify-table", "--kappa", "1", "--p", "0.3", "--d", "3"}).out.find("sum/2: 0\n") !=
          std::string::npos);
    CHECK(invoke({"verify-table", "--kappa", "0.3", "--p", "0.4", "--d", "3"}).code == 0);
  }
}

TEST_SUITE("cli certify") {
  TEST_CASE("symext passes") {
    for (const char* r : {"2", "3"}) CHECK(invoke({"certify", "symext", "--r", r}).code == 0);
    CHECK(invoke({"certify", "symext", "--p", "0.3"}).code == 1);
  }

  TEST_CASE("ppt") {
    const auto phi = invoke({"certify", "ppt", "--state", "phi+", "--d", "2"});
    CHECK(phi.code == 2);
    CHECK(phi.out.find("-0.5") != std::string::npos);
    CHECK(invoke({"certify", "ppt", "--state", "classical"}).code == 0);
    CHECK(invoke({"certify", "ppt", "--state", "depolarizing-choi", "--p", "0.3"}).code == 0);
    CHECK(invoke({"certify", "ppt", "--state", "ghz"}).code == 1);
  }

  TEST_CASE("alicki-fannes") {
    const auto r = invoke({"certify", "alicki-fannes", "--dim", "4", "--epsilon", "0.1", "--seeds", "200"});
    CHECK(r.code == 0);
    CHECK(r.out.find("violations: 0\n") != std::string::npos);
  }

  TEST_CASE("pdit") {
    for (const char* t : {"identity", "controlled-swap", "random", "haar"})
      CHECK(invoke({"certify", "pdit", "--twisting", t, "--seed", "2"}).code == 0);
    CHECK(invoke({"certify", "pdit", "--twisting", "random", "--epsilon", "0.1", "--seed", "4"}).code == 0);
    CHECK(invoke({"certify", "pdit", "--twisting", "twirl"}).code == 1);
  }
}

TEST_SUITE("cli sweep") {
  const auto dir = std::filesystem::temp_directory_path();

  TEST_CASE("byte-identical files") {
    const auto a = dir / "qcap_cli_a.csv", b = dir / "qcap_cli_b.csv";
    const std::vector<std::string> base = {"sweep", "--bound", "nonconvexity", "--step", "0.01", "--out"};
    auto args_a = base, args_b = base;
    args_a.push_back(a.string());
    args_b.push_back(b.string());
    REQUIRE(invoke(args_a).code == 0);
    REQUIRE(invoke(args_b).code == 0);
    const auto csv = slurp(a);
    CHECK(csv == slurp(b));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10202);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }

  TEST_CASE("stdout and per-parameter ranges") {
    const auto r = invoke({"sweep", "--bound", "noisy-erasure", "--p-min", "0.5", "--p-max", "0.6", "--p-step", "0.1",
                         "--epsilon", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "p,value,positive\n0.5,0.5,1\n0.6,0.4,1\n");
  }

  TEST_CASE("spec file with flag override") {
    const auto spec = dir / "qcap_cli_spec.json";
    {
      std::ofstream f(spec);
      f << R"({"bound": "noisy-erasure", "ranges": {"p": {"min": 0.5, "max": 0.9, "step": 0.1}}, "fixed": {"epsilon": 0.01}})";
    }
    const auto from_file = invoke({"sweep", "--spec", spec.string()});
    CHECK(from_file.code == 0);
    CHECK(std::count(from_file.out.begin(), from_file.out.end(), '\n') == 6);
    const auto overridden = invoke({"sweep", "--spec", spec.string(), "--p-max", "0.6"});
    CHECK(std::count(overridden.out.begin(), overridden.out.end(), '\n') == 3);
    std::filesystem::remove(spec);
    CHECK(invoke({"sweep", "--spec", spec.string()}).code == 1);
  }

  TEST_CASE("tied epsilon") {
    const auto r = invoke({"sweep", "--bound", "depolarizing", "--p-max", "0.5", "--epsilon-mode", "tied"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("p,epsilon,value,positive\n0,0,0,0\n", 0) == 0);
  }

  TEST_CASE("invalid specs exit 1") {
    CHECK(invoke({"sweep", "--p-step", "0"}).code == 1);
    CHECK(invoke({"sweep", "--kappa-min", "0.6", "--kappa-max", "0.4"}).code == 1);
    CHECK(invoke({"sweep", "--bound", "depolarizing", "--d", "3"}).code == 1);
    CHECK(invoke({"sweep", "--out", "/nonexistent-dir/x.csv"}).code == 1);
  }
}

TEST_SUITE("cli channels") {
  TEST_CASE("eval-channel at the maximally mixed input") {
    const auto r = invoke({"eval-channel", "--channel", "erasure", "--p", "0.25"});
    CHECK(r.code == 0);
    CHECK(r.out.find("coherent information at I/d: 0.5\n") != std::string::npos);
    CHECK(invoke({"eval-channel", "--channel", "erasure", "--p", "1.5"}).code == 1);
  }

  TEST_CASE("export round trips through the library reader") {
    const auto ch = invoke({"export-channel", "--channel", "depolarizing", "--p", "0.5"});
    CHECK(ch.code == 0);
    CHECK(qcap::channel_from_json(ch.out).env_dim() == 4);
    const auto pd = invoke({"export-pdit", "--twisting", "random", "--seed", "1"});
    CHECK(pd.code == 0);
    CHECK(qcap::pdit_from_json(pd.out).d() == 2);
  }
}
