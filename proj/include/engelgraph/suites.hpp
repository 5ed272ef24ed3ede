#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "engelgraph/catalog.hpp"

namespace engelgraph {

enum class ClaimStatus { Pass, Fail, Skipped };

struct Claim {
  std::string id;
  std::string anchor;  // the quoted statement this claim checks
  ClaimStatus status = ClaimStatus::Pass;
  std::string reason;  // why it was skipped
  nlohmann::json measured;
  nlohmann::json bound;
};

struct SuiteResult {
  std::string suite;
  std::vector<Claim> claims;  // sorted by id
  bool failed() const;
};

struct VerifyOptions {
  Tier tier = Tier::Fast;
  unsigned jobs = 1;
  /// Arc-test budget; when unset, 2e7 for the fast tier and 1e8 otherwise.
  std::optional<std::uint64_t> budget;
};

const std::vector<std::string>& suite_names();

/// The catalog groups of one tier together with lazily computed, cached
/// structure and graphs, shared by every suite run against it.
class Workbench {
public:
  explicit Workbench(const VerifyOptions& options);
  ~Workbench();
  Workbench(const Workbench&) = delete;
  Workbench& operator=(const Workbench&) = delete;

  struct Impl;
  Impl& impl() { return *impl_; }

private:
  std::unique_ptr<Impl> impl_;
};

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, Workbench& bench);

/// One suite by name, or every suite for "all".
std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& options);

nlohmann::json to_json(const std::vector<SuiteResult>& results, Tier tier);
std::string to_text(const std::vector<SuiteResult>& results, Tier tier);

/// "pass", "fail" or "skipped(<reason>)".
std::string status_text(const Claim& c);

/// 0 when nothing failed, 1 otherwise.
int exit_code(const std::vector<SuiteResult>& results);

}  // namespace engelgraph
