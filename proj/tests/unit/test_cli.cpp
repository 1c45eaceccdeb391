#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <pulsefront/io.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& body) {
  fs::path p = fs::temp_directory_path() / ("pulsefront_cli_" + name);
  std::ofstream out(p);
  out << body;
  return p;
}

int run(std::initializer_list<std::string> args) {
  return pulsefront::cli::dispatch(std::vector<std::string>(args));
}

const char* kPairJson =
    R"({"a":{"kind":"reciprocal-sinusoid","eps":0.3},
        "mu":{"kind":"sinusoid","mean":1,"amplitude":0.5,"harmonic":1}})";

}  // namespace

TEST_CASE("dispatch exit codes") {
  const fs::path pair = write_temp("pair.json", kPairJson);

  SUBCASE("happy paths exit 0") {
    CHECK(run({"gamma", "--config", pair.string(), "--quiet"}) == 0);
    CHECK(run({"speed", "--config", pair.string(), "--L", "0.5", "--n", "128",
               "--quiet"}) == 0);
  }
  SUBCASE("validation errors exit 2") {
    CHECK(run({"frag", "--L0", "1", "--l", "1.2", "--m", "1"}) == 2);
    CHECK(run({"speed", "--config", pair.string(), "--L", "0"}) == 2);
    CHECK(run({"beta0", "--config", pair.string()}) == 2);  // mean not zero
    CHECK(run({"nonsense-subcommand"}) == 2);
    CHECK(run({"speed", "--config", pair.string()}) == 2);  // missing --L
    CHECK(run({"gamma", "--config", "/no/such/file.json"}) == 2);
    CHECK(run({"gamma", "--config", pair.string(), "--quiet", "--json"}) == 2);
  }
  SUBCASE("numerical failures exit 3") {
    // lambda L far beyond what n = 16 can carry: Perron structure lost
    CHECK(run({"eigen", "--config", pair.string(), "--lambda", "200", "--L",
               "1", "--n", "16"}) == 3);
  }
  SUBCASE("help exits 0") {
    CHECK(run({"--help"}) == 0);
  }
  fs::remove(pair);
}

TEST_CASE("deterministic csv output") {
  const fs::path pair = write_temp("pair2.json", kPairJson);
  const fs::path out1 = fs::temp_directory_path() / "pulsefront_cli_sweep1.csv";
  const fs::path out2 = fs::temp_directory_path() / "pulsefront_cli_sweep2.csv";
  for (const fs::path& out : {out1, out2}) {
    REQUIRE(run({"sweep-l", "--config", pair.string(), "--l-min", "0.05",
                 "--l-max", "0.2", "--points", "3", "--geometric", "--n", "128",
                 "--out", out.string(), "--quiet"}) == 0);
  }
  std::ifstream f1(out1), f2(out2);
  std::string s1((std::istreambuf_iterator<char>(f1)), {});
  std::string s2((std::istreambuf_iterator<char>(f2)), {});
  CHECK(!s1.empty());
  CHECK(s1 == s2);

  // the written CSV feeds straight back into plot
  const fs::path svg = fs::temp_directory_path() / "pulsefront_cli_sweep.svg";
  CHECK(run({"plot", "--in", out1.string(), "--out", svg.string(), "--x", "L",
             "--y", "c_star", "--quiet"}) == 0);
  CHECK(fs::exists(svg));
  CHECK(run({"plot", "--in", out1.string(), "--out", svg.string(), "--x", "L",
             "--y", "missing"}) == 2);
  fs::remove(pair);
  fs::remove(out1);
  fs::remove(out2);
  fs::remove(svg);
}

TEST_CASE("grid size environment override") {
  const fs::path pair = write_temp("pair3.json", kPairJson);
  setenv("PULSEFRONT_GRID_N", "128", 1);
  CHECK(run({"speed", "--config", pair.string(), "--L", "0.5", "--quiet"}) == 0);
  setenv("PULSEFRONT_GRID_N", "banana", 1);
  CHECK(run({"speed", "--config", pair.string(), "--L", "0.5", "--quiet"}) == 2);
  unsetenv("PULSEFRONT_GRID_N");
  fs::remove(pair);
}
