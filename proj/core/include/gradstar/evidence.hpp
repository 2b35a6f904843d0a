#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gradstar {

/// One checked sample. A bounded search that ran out before deciding is
/// `exhausted`: neither a pass nor a violation.
struct EvidenceItem {
  std::string check;
  int sample = 0;
  bool pass = true;
  nlohmann::json certificate;
  bool exhausted = false;

  std::string verdict() const { return exhausted ? "exhausted" : pass ? "pass" : "fail"; }
};

struct EvidenceReport {
  std::vector<EvidenceItem> items;

  std::size_t violations() const {
    std::size_t n = 0;
    for (const auto& i : items) n += (!i.pass && !i.exhausted) ? 1 : 0;
    return n;
  }
  std::size_t exhausted() const {
    std::size_t n = 0;
    for (const auto& i : items) n += i.exhausted ? 1 : 0;
    return n;
  }
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& i : items)
      arr.push_back({{"axiom", i.check}, {"sample", i.sample}, {"pass", i.pass}, {"verdict", i.verdict()},
                     {"certificate", i.certificate}});
    return arr;
  }
};

}  // namespace gradstar
