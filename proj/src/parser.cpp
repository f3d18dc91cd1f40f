#include "patchjudge/parser.hpp"

#include <json.hpp>

#include <array>
#include <cctype>

namespace patchjudge {

namespace {

constexpr std::array<std::string_view, 3> kCorrectKeywords{"correct", "fix", "fixed"};
constexpr std::array<std::string_view, 4> kOverfittingKeywords{"overfitting", "buggy",
                                                               "incorrect", "wrong"};

bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

struct TagSpan {
  bool found = false;
  size_t begin = 0;
  size_t end = 0;
};

TagSpan first_complete_span(const std::string& raw, std::string_view open,
                            std::string_view close) {
  size_t o = raw.find(open);
  if (o == std::string::npos) return {};
  size_t c = raw.find(close, o + open.size());
  if (c == std::string::npos) return {};
  return {true, o + open.size(), c};
}

template <size_t N>
bool in_set(const std::array<std::string_view, N>& set, std::string_view word) {
  for (auto k : set)
    if (k == word) return true;
  return false;
}

}  // namespace

AnswerClassification classify_answer(std::string_view answer_text) {
  bool matched_correct = false;
  bool matched_overfitting = false;
  size_t i = 0;
  const size_t n = answer_text.size();
  while (i < n) {
    if (!is_ascii_letter(answer_text[i])) {
      ++i;
      continue;
    }
    std::string word;
    while (i < n && is_ascii_letter(answer_text[i])) {
      word += static_cast<char>(std::tolower(static_cast<unsigned char>(answer_text[i])));
      ++i;
    }
    if (in_set(kCorrectKeywords, word)) matched_correct = true;
    if (in_set(kOverfittingKeywords, word)) matched_overfitting = true;
  }

  AnswerClassification r;
  r.has_keyword = matched_correct || matched_overfitting;
  if (matched_correct && matched_overfitting) {
    r.ambiguous = true;
  } else if (matched_correct) {
    r.verdict = Verdict::Correct;
  } else if (matched_overfitting) {
    r.verdict = Verdict::Overfitting;
  }
  return r;
}

ParsedResponse parse_response(const std::string& raw) {
  ParsedResponse p;

  TagSpan think = first_complete_span(raw, "<think>", "</think>");
  if (think.found) {
    p.has_think = true;
    p.think_text = raw.substr(think.begin, think.end - think.begin);
  }

  TagSpan answer = first_complete_span(raw, "<answer>", "</answer>");
  if (answer.found) {
    p.has_answer = true;
    p.answer_text = raw.substr(answer.begin, answer.end - answer.begin);
    AnswerClassification cls = classify_answer(*p.answer_text);
    p.has_keyword = cls.has_keyword;
    p.ambiguous = cls.ambiguous;
    p.verdict = cls.verdict;
  }
  return p;
}

bool is_wellformed(const ParsedResponse& p) {
  return p.has_think && p.has_answer && p.verdict.has_value();
}

std::string parsed_response_to_json_string(const ParsedResponse& p) {
  nlohmann::json j{{"has_think", p.has_think},
                   {"has_answer", p.has_answer},
                   {"has_keyword", p.has_keyword},
                   {"ambiguous", p.ambiguous},
                   {"wellformed", is_wellformed(p)}};
  j["think_text"] = p.think_text ? nlohmann::json(*p.think_text) : nlohmann::json(nullptr);
  j["answer_text"] = p.answer_text ? nlohmann::json(*p.answer_text) : nlohmann::json(nullptr);
  j["verdict"] = p.verdict ? nlohmann::json(std::string(to_string(*p.verdict)))
                           : nlohmann::json(nullptr);
  return j.dump();
}

}  // namespace patchjudge
