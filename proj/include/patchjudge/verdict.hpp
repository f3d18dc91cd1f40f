#pragma once

#include <optional>
#include <string_view>

namespace patchjudge {

// Binary patch classification. Overfitting is the positive class throughout.
enum class Verdict { Correct, Overfitting };

std::string_view to_string(Verdict v);

// Strict: accepts exactly the lowercase words "correct" / "overfitting".
std::optional<Verdict> verdict_from_string(std::string_view s);

}  // namespace patchjudge
