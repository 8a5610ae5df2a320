#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsg/autsearch.hpp"
#include "tsg/paperlib.hpp"

namespace tsg::cli {

enum class ClaimStatus { Pass, Fail, Skipped };
std::string to_string(ClaimStatus s);

/// One re-derived claim. `expected` and `computed` are canonical JSON texts;
/// the claim passes iff they are equal.
struct ClaimResult {
  std::string claim_id;
  std::string scope;
  std::string location;
  std::string quote;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::Skipped;
};

struct VerifyOptions {
  /// Claim scope ("p83"), location ("Section 6"), or section number ("6", "§6").
  std::optional<std::string> scope;
  SearchOptions search;
};

/// Runs every registry claim in registry order. Failures, including
/// exceptions thrown while computing a claim, are reported as data.
std::vector<ClaimResult> verify_paper(const PaperRegistry& registry, const VerifyOptions& options = {});

}  // namespace tsg::cli
