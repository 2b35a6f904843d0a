#pragma once

// Theorem suites, bounded falsifiers and the report_v1 format.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gradstar/evidence.hpp"
#include "gradstar/star.hpp"

namespace gradstar {

inline constexpr const char* kReportSchema = "report_v1";
inline constexpr const char* kCertificateSchema = "certificate_v1";

std::vector<std::string> suite_names();

struct SuiteReport {
  std::string suite;
  std::string ring;
  std::string star;  // "none" when the suite takes no closure
  std::uint64_t seed = 0;
  int budget = 0;
  int samples = 0;
  EvidenceReport evidence;
  nlohmann::json summary = nlohmann::json::object();

  std::size_t fails() const { return evidence.violations(); }
  nlohmann::json to_json() const;
};

/// `star` empty selects the suite's default. Throws InvalidArgument for an
/// unknown suite and Unsupported for a star or ring the suite cannot use.
/// Samples are drawn up front, so `workers` does not change the report.
SuiteReport run_suite(const std::string& name, const RingPtr& ring, const std::optional<StarOp>& star,
                      std::uint64_t seed, int budget, unsigned workers = 1);

std::vector<std::string> identity_names();

struct Bounds {
  int max_degree = 1;  // in X
  int max_terms = 2;   // per coefficient
  int max_coef = 4;    // |integer coefficient|
  /// Skip pairs with a member whose content is invertible (graded) or
  /// generated by one coefficient (classical); both identities hold there.
  bool prune = true;

  nlohmann::json to_json() const;
};

/// Coefficient values of the search box, in search order. Exponents are 0
/// and the monoid generators with no negative coordinate.
std::vector<GradedElement> box_values(const RingPtr& ring, const Bounds& b);

struct FalsifyResult {
  std::string identity;
  std::string ring;
  std::string star;
  Bounds bounds;
  bool found = false;
  nlohmann::json certificate;  // null when exhausted
  std::uint64_t candidates = 0;
  std::uint64_t pruned = 0;
  std::uint64_t evaluated = 0;

  std::string status() const { return found ? "counterexample" : "exhausted"; }
  nlohmann::json to_json() const;
};

/// Smallest counterexample in the box or "exhausted". Pairs f < g are
/// tried before the pairs (f, f).
FalsifyResult falsify(const std::string& identity, const RingPtr& ring, const std::optional<StarOp>& star,
                      const Bounds& bounds = {});

/// Recomputes a certificate from its printed inputs. Returns the reason on
/// failure.
std::optional<std::string> certificate_problem(const nlohmann::json& cert);

}  // namespace gradstar
