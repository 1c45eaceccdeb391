#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <pulsefront/errors.hpp>
#include <pulsefront/io.hpp>

using namespace pulsefront;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("pulsefront_test_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("profile JSON parsing") {
  auto prof = io::parse_profile_json(R"({"kind":"sinusoid","mean":1,"amplitude":0.5})");
  CHECK(prof(0.25) == doctest::Approx(1.5));

  auto pair = io::parse_pair_json(
      R"({"a":{"kind":"reciprocal-sinusoid","eps":0.3},
          "mu":{"kind":"piecewise-constant","breakpoints":[0,0.5],"values":[1,4]}})");
  CHECK(pair.mu.arithmetic_mean() == doctest::Approx(2.5));

  auto grid = io::parse_profile_json(R"({"kind":"grid","samples":[1,2,3,2]})");
  CHECK(grid(0.25) == doctest::Approx(2.0));

  auto patch = io::parse_patch_json(R"({"L0":1,"l":0.8,"z":0.1,"m":1})");
  CHECK(patch.l == 0.8);

  CHECK_THROWS_AS(io::parse_profile_json(R"({"kind":"spline"})"), BadConfig);
  CHECK_THROWS_AS(io::parse_profile_json(R"({"kind":"constant"})"), BadConfig);
  CHECK_THROWS_AS(io::parse_profile_json("not json"), BadConfig);
  CHECK_THROWS_AS(io::parse_pair_json(R"({"a":{"kind":"constant","value":1}})"),
                  BadConfig);
  CHECK_THROWS_AS(io::parse_patch_json(R"({"L0":1,"l":1.2,"z":0,"m":1})"),
                  InvalidPatchGeometry);
  CHECK_THROWS_AS(io::load_pair("/nonexistent/path.json"), BadConfig);
}

TEST_CASE("csv round trip is lossless") {
  const fs::path path = temp_file("roundtrip.csv");
  std::vector<double> a{0.1, 1.0 / 3.0, 2.00000808207e-17, -4.5};
  std::vector<double> b{1.5, 2.5, 3.5, 1e300};
  io::write_csv(path.string(), {"x", "y"}, {a, b});
  io::Csv csv = io::read_csv(path.string());
  REQUIRE(csv.rows() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(csv.column("x")[i] == a[i]);  // bitwise, thanks to shortest round-trip
    CHECK(csv.column("y")[i] == b[i]);
  }
  CHECK_THROWS_AS(csv.column("z"), MissingColumn);
  fs::remove(path);
}

TEST_CASE("csv parse errors") {
  const fs::path path = temp_file("bad.csv");
  {
    std::ofstream out(path);
    out << "a,b\n1,2\n3\n";
  }
  CHECK_THROWS_AS(io::read_csv(path.string()), BadConfig);
  {
    std::ofstream out(path);
    out << "";
  }
  CHECK_THROWS_AS(io::read_csv(path.string()), BadConfig);
  fs::remove(path);
}

TEST_CASE("svg plot") {
  const fs::path csv = temp_file("plot.csv");
  const fs::path svg1 = temp_file("plot1.svg");
  const fs::path svg2 = temp_file("plot2.svg");
  {
    std::vector<double> x, y;
    for (int i = 0; i <= 20; ++i) {
      x.push_back(0.05 * i);
      y.push_back(2.0 + 0.1 * (0.05 * i - 0.5) * (0.05 * i - 0.5));
    }
    io::write_csv(csv.string(), {"z", "c_star"}, {x, y});
  }

  SUBCASE("deterministic bytes") {
    io::plot_csv(csv.string(), svg1.string(), "z", "c_star");
    io::plot_csv(csv.string(), svg2.string(), "z", "c_star");
    const std::string s1 = slurp(svg1), s2 = slurp(svg2);
    CHECK(!s1.empty());
    CHECK(s1 == s2);
    CHECK(s1.find("<polyline") != std::string::npos);
    CHECK(s1.find("c_star") != std::string::npos);
  }
  SUBCASE("missing column") {
    CHECK_THROWS_AS(io::plot_csv(csv.string(), svg1.string(), "z", "nope"),
                    MissingColumn);
  }
  SUBCASE("empty csv") {
    const fs::path empty = temp_file("empty.csv");
    {
      std::ofstream out(empty);
      out << "a,b\n";
    }
    CHECK_THROWS_AS(io::plot_csv(empty.string(), svg1.string(), "a", "b"), BadConfig);
    fs::remove(empty);
  }
  fs::remove(csv);
  fs::remove(svg1);
  fs::remove(svg2);
}
