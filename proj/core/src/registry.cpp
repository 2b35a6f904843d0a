#include "gradstar/registry.hpp"

#include <filesystem>
#include <fstream>

namespace gradstar {

namespace {

const char* const kBuiltin[] = {
    R"({"name": "laurent_z", "base": "Z", "dim": 1, "monoid_generators": [[1], [-1]],
        "flags": ["pvmd", "integrally_closed"], "names": ["t"]})",
    R"({"name": "poly_q2", "base": "Q", "dim": 2, "monoid_generators": [[1, 0], [0, 1]],
        "flags": ["pvmd", "integrally_closed", "graded_krull"], "names": ["x", "y"],
        "grading": [[1, 1]]})",
    R"({"name": "poly_q2_fine", "base": "Q", "dim": 2, "monoid_generators": [[1, 0], [0, 1]],
        "flags": ["pvmd", "integrally_closed", "graded_krull"], "names": ["x", "y"]})",
    R"({"name": "veronese_q", "base": "Q", "dim": 2, "monoid_generators": [[2, 0], [1, 1], [0, 2]],
        "flags": ["integrally_closed"], "names": ["x", "y"]})",
};

}  // namespace

RingSpec spec_from_json(const nlohmann::json& j, const std::string& fallback_name) {
  RingSpec s;
  try {
    s.name = j.value("name", fallback_name);
    std::string base = j.at("base").get<std::string>();
    if (base == "Q") {
      s.base = BaseDomain::Rationals;
    } else if (base == "Z") {
      s.base = BaseDomain::Integers;
    } else {
      throw InvalidArgument("base must be \"Q\" or \"Z\"");
    }
    s.dim = j.at("dim").get<int>();
    s.monoid_generators = j.at("monoid_generators").get<std::vector<std::vector<long>>>();
    s.flags = j.value("flags", std::vector<std::string>{});
    s.names = j.value("names", std::vector<std::string>{});
    s.grading = j.value("grading", std::vector<std::vector<long>>{});
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed ring specification: ") + e.what());
  }
  if (s.name.empty()) throw InvalidArgument("ring specification needs a name");
  return s;
}

nlohmann::json spec_to_json(const RingSpec& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["base"] = std::string(base_name(s.base));
  j["dim"] = s.dim;
  j["monoid_generators"] = s.monoid_generators;
  j["flags"] = s.flags;
  j["names"] = s.names;
  if (!s.grading.empty()) j["grading"] = s.grading;
  return j;
}

RingRegistry::RingRegistry() {
  for (const char* text : kBuiltin) {
    RingSpec s = spec_from_json(nlohmann::json::parse(text));
    specs_.emplace(s.name, s);
  }
}

RingRegistry& RingRegistry::global() {
  static RingRegistry reg;
  return reg;
}

std::vector<std::string> RingRegistry::names() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::string> out;
  for (const auto& [n, s] : specs_) out.push_back(n);
  return out;
}

const RingSpec& RingRegistry::spec(const std::string& name) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = specs_.find(name);
  if (it == specs_.end()) throw InvalidArgument("unknown ring '" + name + "'");
  return it->second;
}

RingPtr RingRegistry::add(RingSpec spec) {
  RingPtr ring = GradedRing::create(spec);
  std::lock_guard<std::mutex> lock(mu_);
  specs_[ring->name()] = ring->spec();
  rings_[ring->name()] = ring;
  return ring;
}

RingPtr RingRegistry::get(const std::string& name_or_path) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = rings_.find(name_or_path); it != rings_.end()) return it->second;
    if (auto it = specs_.find(name_or_path); it != specs_.end()) {
      RingPtr ring = GradedRing::create(it->second);
      rings_[name_or_path] = ring;
      return ring;
    }
  }
  namespace fs = std::filesystem;
  fs::path p(name_or_path);
  if (!fs::exists(p)) throw InvalidArgument("unknown ring '" + name_or_path + "'");
  std::ifstream in(p);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("cannot parse ring file " + name_or_path + ": " + e.what());
  }
  RingSpec spec = spec_from_json(j, p.stem().string());
  bool known;
  {
    std::lock_guard<std::mutex> lock(mu_);
    known = specs_.count(spec.name) > 0;
  }
  RingPtr ring;
  if (known) {
    ring = get(spec.name);
    if (spec_to_json(ring->spec()) != spec_to_json(GradedRing::create(spec)->spec()))
      throw InvalidArgument("ring file redefines '" + spec.name + "'");
  } else {
    ring = add(spec);
  }
  std::lock_guard<std::mutex> lock(mu_);
  rings_[name_or_path] = ring;
  return ring;
}

RingPtr ring_named(const std::string& name_or_path) {
  return RingRegistry::global().get(name_or_path);
}

}  // namespace gradstar
