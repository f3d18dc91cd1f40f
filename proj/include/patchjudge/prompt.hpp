#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "patchjudge/corpus.hpp"

namespace patchjudge {

// One solved example shown to the model in the required output format.
struct ExemplarShot {
  std::string buggy_code;
  std::string fixed_code;
  std::string ideal_response;  // must parse as well-formed with a verdict
};

struct PromptTemplate {
  std::string template_id;
  std::string task_framing;
  std::vector<std::string> analysis_requirements;
  std::string output_format_spec;  // must mention both tag pairs literally
  ExemplarShot exemplar;
  std::string reasoning_trigger;

  void validate() const;  // throws std::runtime_error on invariant violation
};

struct RenderedPrompt {
  std::string text;
  std::string sample_id;
};

// Fixed section markers used by build_prompt. The sample-id marker is what
// lets the scripted mock server key a request back to its sample.
namespace prompt_markers {
inline constexpr std::string_view kRequirementsHeader = "Analysis requirements:";
inline constexpr std::string_view kFormatHeader = "Output format:";
inline constexpr std::string_view kExemplarHeader = "Worked example:";
inline constexpr std::string_view kSampleHeader = "Now assess the following patch";
inline constexpr std::string_view kBuggyHeader = "Buggy code:";
inline constexpr std::string_view kFixedHeader = "Fixed code:";
inline std::string sample_id_marker(const std::string& sample_id) {
  return "(id: " + sample_id + ")";
}
}  // namespace prompt_markers

// The repo's canonical template, versioned "template_v1". Also shipped as
// templates/template_v1.json.
PromptTemplate default_template();

PromptTemplate load_template(const std::string& path);
PromptTemplate template_from_json_string(const std::string& text);
std::string template_to_json_string(const PromptTemplate& tpl);

// Deterministic rendering: task framing, analysis requirements, output format
// spec, worked example, the sample's buggy then fixed code, reasoning trigger.
// Code is placed inside triple-backtick fences.
RenderedPrompt build_prompt(const PatchSample& sample, const PromptTemplate& tpl);

}  // namespace patchjudge
