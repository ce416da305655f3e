#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopforge/isotopy.hpp"
#include "loopforge/loop_table.hpp"
#include "loopforge/perm_group.hpp"
#include "loopforge/structure.hpp"

namespace loopforge {

struct GroupSummary {
  std::string name;
  std::uint64_t order = 1;
  std::optional<int> derived_length;        // absent when not solvable
  std::optional<int> nilpotency_class;      // absent when not nilpotent
  std::optional<int> elementary_abelian_p;  // the prime, for nontrivial elementary abelian groups
};

struct PhaseError {
  std::string phase;
  std::string code;  // errc_name of the thrown LoopError
  std::string message;
};

struct AnalysisReport {
  int order = 0;
  int identity_label = 1;  // 1-based
  PropertyFlags properties;
  std::vector<GroupSummary> groups;  // mlt, lmlt, rmlt, inn, linn, rinn
  std::vector<int> nucleus_left_m, nucleus_middle_m, nucleus_right_m, nucleus_m;
  std::vector<int> commutant_m, center_m, derived_m, associator_m;  // 1-based members
  std::vector<std::vector<int>> normal_subloops;                    // 1-based, sorted
  bool solvable = false;
  bool centrally_nilpotent = false;
  std::vector<std::vector<int>> upper_central;  // 1-based members per term
  std::optional<IsotopyPartition> isotopy;
  std::vector<PhaseError> errors;         // empty on full success
  std::map<std::string, double> timings_ms;
};

struct AnalyzeOptions {
  bool with_isotopes = false;
  int isotopy_cap = 64;
  int normal_cap = 256;
  std::uint64_t enum_cap = PermGroup::kDefaultEnumCap;
};

/// Runs the full pipeline phase by phase.  A phase that throws LoopError is
/// recorded in report.errors and the remaining phases still run, so one cap
/// blowout cannot hide cheap verified results.
AnalysisReport analyze(const LoopTable& L, const AnalyzeOptions& options = {});

/// Canonical serializations.  JSON has fixed key order and sorted arrays;
/// byte-deterministic except for the measured timing values, and re-parsing
/// then re-serializing is byte-identical.
std::string emit_json(const AnalysisReport& report);
std::string emit_text(const AnalysisReport& report);

}  // namespace loopforge
