#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "patchjudge/verdict.hpp"

namespace patchjudge {

// One labeled buggy/fixed code pair.
struct PatchSample {
  std::string id;
  std::string buggy_code;
  std::string fixed_code;
  Verdict label = Verdict::Correct;
  std::string origin;       // tool/benchmark name, may be empty
  std::string dataset_tag;  // "small" | "large" | custom
};

struct DatasetStats {
  int64_t correct_count = 0;
  int64_t overfitting_count = 0;
  int64_t total = 0;
};

// Deterministic k-fold partition of a set of sample ids.
struct FoldAssignment {
  int k = 0;
  int64_t seed = 0;
  std::map<std::string, int> folds;  // sample id -> fold index in [0, k)

  std::string to_json_string() const;
  static FoldAssignment from_json_string(const std::string& text);
};

// Loads a JSON Lines dataset. One object per line with keys:
//   id, buggy, fixed, label ("correct"|"overfitting"), origin?, dataset_tag?
// Malformed records and duplicate ids raise with the offending line number.
std::vector<PatchSample> load_dataset(const std::string& path);
std::vector<PatchSample> parse_dataset_jsonl(const std::string& text,
                                             const std::string& source_name);
std::string dataset_to_jsonl(const std::vector<PatchSample>& samples);

// Comparison form used by deduplicate: line endings normalized to LF and
// trailing whitespace stripped from every line.
std::string normalize_code(std::string_view code);

// Drops samples whose normalized (buggy, fixed) pair was already seen.
// First occurrence wins; relative order is preserved.
std::vector<PatchSample> deduplicate(const std::vector<PatchSample>& samples);

// Shuffles ids with a seeded Rng, then deals round-robin into k folds.
// Requires k >= 2, distinct ids, and at least k ids.
FoldAssignment kfold_split(const std::vector<std::string>& ids, int k, int64_t seed);

// Label-stratified variant: each label group is shuffled and dealt separately
// so per-label counts also differ by at most one across folds.
FoldAssignment kfold_split_stratified(const std::vector<PatchSample>& samples, int k,
                                      int64_t seed);

DatasetStats dataset_stats(const std::vector<PatchSample>& samples);

}  // namespace patchjudge
