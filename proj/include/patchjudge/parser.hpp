#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "patchjudge/verdict.hpp"

namespace patchjudge {

// Structured decomposition of one raw model output. Malformation is data
// here, never an error: every flag combination is representable.
struct ParsedResponse {
  std::optional<std::string> think_text;
  std::optional<std::string> answer_text;
  std::optional<Verdict> verdict;
  bool has_think = false;    // a complete <think>...</think> span was found
  bool has_answer = false;   // a complete <answer>...</answer> span was found
  bool has_keyword = false;  // a recognized keyword appears whole-word in answer_text
  bool ambiguous = false;    // keywords of both classes appear in answer_text
};

struct AnswerClassification {
  std::optional<Verdict> verdict;
  bool has_keyword = false;
  bool ambiguous = false;
};

// Scans the answer text for verdict keywords as whole words, where a word is
// a maximal run of ASCII letters (case-insensitive).
//   Correct:     correct, fix, fixed
//   Overfitting: overfitting, buggy, incorrect, wrong
// Both classes present -> ambiguous, no verdict. Neither -> no verdict.
AnswerClassification classify_answer(std::string_view answer_text);

// Total and deterministic. Extracts the first complete occurrence of each
// tag pair; everything outside the tags is ignored.
ParsedResponse parse_response(const std::string& raw);

// true iff has_think, has_answer, and an unambiguous verdict were all found.
bool is_wellformed(const ParsedResponse& p);

// JSON form used in logs and assessment records.
std::string parsed_response_to_json_string(const ParsedResponse& p);

}  // namespace patchjudge
