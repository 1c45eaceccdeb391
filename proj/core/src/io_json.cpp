#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pulsefront/errors.hpp"
#include "pulsefront/io.hpp"

namespace pulsefront::io {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw BadConfig(std::string("invalid JSON: ") + e.what());
  }
}

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw BadConfig(std::string("missing numeric field '") + key + "'");
  return j[key].get<double>();
}

std::vector<double> number_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw BadConfig(std::string("missing array field '") + key + "'");
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number())
      throw BadConfig(std::string("non-numeric entry in '") + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

PeriodicProfile profile_from(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw BadConfig("profile descriptor needs a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "constant")
      return PeriodicProfile::constant(number(j, "value"));
    if (kind == "sinusoid")
      return PeriodicProfile::sinusoid(number(j, "mean"), number(j, "amplitude"),
                                       j.contains("harmonic")
                                           ? j["harmonic"].get<int>()
                                           : 1);
    if (kind == "reciprocal-sinusoid")
      return PeriodicProfile::reciprocal_sinusoid(number(j, "eps"));
    if (kind == "piecewise-constant")
      return PeriodicProfile::piecewise_constant(number_list(j, "breakpoints"),
                                                 number_list(j, "values"));
    if (kind == "grid") return PeriodicProfile::grid(number_list(j, "samples"));
  } catch (const InvalidProfile& e) {
    throw BadConfig(e.what());
  }
  throw BadConfig("unknown profile kind '" + kind + "'");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadConfig("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

PeriodicProfile parse_profile_json(const std::string& text) {
  return profile_from(parse(text));
}

ProfilePair parse_pair_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("a") || !j.contains("mu"))
    throw BadConfig("pair descriptor needs 'a' and 'mu' profiles");
  return ProfilePair(profile_from(j["a"]), profile_from(j["mu"]));
}

PatchConfig parse_patch_json(const std::string& text) {
  json j = parse(text);
  PatchConfig cfg;
  cfg.L0 = number(j, "L0");
  cfg.l = number(j, "l");
  cfg.z = number(j, "z");
  cfg.m = number(j, "m");
  cfg.validate();
  return cfg;
}

ProfilePair load_pair(const std::string& path) {
  return parse_pair_json(slurp(path));
}

PatchConfig load_patch(const std::string& path) {
  return parse_patch_json(slurp(path));
}

}  // namespace pulsefront::io
