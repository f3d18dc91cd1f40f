#include "patchjudge/rewards.hpp"

namespace patchjudge {

double format_reward(const ParsedResponse& p) {
  double r = 0.0;
  if (p.has_think) r += 0.5;
  if (p.has_answer) r += 0.25;
  if (p.has_answer && p.has_keyword) r += 0.25;
  return r;
}

double accuracy_reward(std::optional<Verdict> predicted, Verdict gold) {
  if (!predicted || *predicted != gold) return 0.0;
  return gold == Verdict::Overfitting ? 2.0 : 1.0;
}

RewardBreakdown total_reward(const ParsedResponse& p, Verdict gold) {
  RewardBreakdown b;
  b.format_reward = format_reward(p);
  b.accuracy_reward = accuracy_reward(p.verdict, gold);
  b.total = b.format_reward + b.accuracy_reward;
  return b;
}

}  // namespace patchjudge
