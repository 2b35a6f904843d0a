#pragma once

// Named rings: built-in entries plus JSON ring files.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gradstar/ring.hpp"

namespace gradstar {

RingSpec spec_from_json(const nlohmann::json& j, const std::string& fallback_name = "");
nlohmann::json spec_to_json(const RingSpec& spec);

class RingRegistry {
 public:
  /// Process-wide registry preloaded with the built-in rings.
  static RingRegistry& global();

  RingRegistry();

  std::vector<std::string> names() const;
  /// Built-in or previously registered name, else a path to a ring file.
  /// The same name always yields the same ring object.
  RingPtr get(const std::string& name_or_path);
  RingPtr add(RingSpec spec);
  const RingSpec& spec(const std::string& name) const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, RingSpec> specs_;
  std::map<std::string, RingPtr> rings_;
};

/// Shorthand for RingRegistry::global().get(name).
RingPtr ring_named(const std::string& name_or_path);

}  // namespace gradstar
