#pragma once

#include <optional>

#include "patchjudge/parser.hpp"
#include "patchjudge/verdict.hpp"

namespace patchjudge {

struct RewardBreakdown {
  double format_reward = 0.0;    // in {0, 0.25, 0.5, 0.75, 1.0}
  double accuracy_reward = 0.0;  // in {0, 1, 2}
  double total = 0.0;            // format + accuracy
};

// Structural reward: 0.5 for a complete think block, +0.25 for a complete
// answer block, +0.25 if that answer block contains a verdict keyword.
// The keyword component requires the answer block to exist.
double format_reward(const ParsedResponse& p);

// Match reward, asymmetric toward the harder positive class:
// mismatch or no prediction 0.0; Correct match 1.0; Overfitting match 2.0.
double accuracy_reward(std::optional<Verdict> predicted, Verdict gold);

RewardBreakdown total_reward(const ParsedResponse& p, Verdict gold);

}  // namespace patchjudge
