#include "patchjudge/corpus.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "patchjudge/util.hpp"

namespace patchjudge {

using nlohmann::json;

std::string_view to_string(Verdict v) {
  return v == Verdict::Correct ? "correct" : "overfitting";
}

std::optional<Verdict> verdict_from_string(std::string_view s) {
  if (s == "correct") return Verdict::Correct;
  if (s == "overfitting") return Verdict::Overfitting;
  return std::nullopt;
}

namespace {

[[noreturn]] void record_error(const std::string& src, size_t line, const std::string& msg) {
  throw std::runtime_error(src + ":" + std::to_string(line) + ": " + msg);
}

std::string require_string_field(const json& obj, const char* key, const std::string& src,
                                 size_t line) {
  if (!obj.contains(key)) record_error(src, line, std::string("missing field '") + key + "'");
  const json& v = obj.at(key);
  if (!v.is_string()) record_error(src, line, std::string("invalid field '") + key + "': expected string");
  return v.get<std::string>();
}

}  // namespace

std::vector<PatchSample> parse_dataset_jsonl(const std::string& text,
                                             const std::string& source_name) {
  std::vector<PatchSample> out;
  std::unordered_map<std::string, size_t> seen_ids;  // id -> line first seen

  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line(text.data() + pos, (nl == std::string::npos ? text.size() : nl) - pos);
    pos = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      record_error(source_name, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) record_error(source_name, line_no, "record is not a JSON object");

    PatchSample s;
    s.id = require_string_field(obj, "id", source_name, line_no);
    s.buggy_code = require_string_field(obj, "buggy", source_name, line_no);
    s.fixed_code = require_string_field(obj, "fixed", source_name, line_no);
    std::string label = require_string_field(obj, "label", source_name, line_no);

    if (s.id.empty()) record_error(source_name, line_no, "invalid field 'id': must be non-empty");
    if (s.buggy_code.empty())
      record_error(source_name, line_no, "invalid field 'buggy': must be non-empty");
    if (s.fixed_code.empty())
      record_error(source_name, line_no, "invalid field 'fixed': must be non-empty");
    auto verdict = verdict_from_string(label);
    if (!verdict)
      record_error(source_name, line_no,
                   "invalid field 'label': expected \"correct\" or \"overfitting\", got \"" +
                       label + "\"");
    s.label = *verdict;

    if (obj.contains("origin")) {
      if (!obj.at("origin").is_string())
        record_error(source_name, line_no, "invalid field 'origin': expected string");
      s.origin = obj.at("origin").get<std::string>();
    }
    if (obj.contains("dataset_tag")) {
      if (!obj.at("dataset_tag").is_string())
        record_error(source_name, line_no, "invalid field 'dataset_tag': expected string");
      s.dataset_tag = obj.at("dataset_tag").get<std::string>();
    }

    auto [it, inserted] = seen_ids.emplace(s.id, line_no);
    if (!inserted)
      record_error(source_name, line_no,
                   "duplicate id '" + s.id + "' (first seen at line " +
                       std::to_string(it->second) + ")");
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PatchSample> load_dataset(const std::string& path) {
  return parse_dataset_jsonl(read_text_file(path), path);
}

std::string dataset_to_jsonl(const std::vector<PatchSample>& samples) {
  std::string out;
  for (const auto& s : samples) {
    json obj{{"id", s.id},
             {"buggy", s.buggy_code},
             {"fixed", s.fixed_code},
             {"label", std::string(to_string(s.label))}};
    if (!s.origin.empty()) obj["origin"] = s.origin;
    if (!s.dataset_tag.empty()) obj["dataset_tag"] = s.dataset_tag;
    out += obj.dump();
    out += '\n';
  }
  return out;
}

std::string normalize_code(std::string_view code) {
  std::string lf;
  lf.reserve(code.size());
  for (size_t i = 0; i < code.size(); ++i) {
    if (code[i] == '\r') {
      lf += '\n';
      if (i + 1 < code.size() && code[i + 1] == '\n') ++i;
    } else {
      lf += code[i];
    }
  }
  std::string out;
  out.reserve(lf.size());
  size_t pos = 0;
  while (pos <= lf.size()) {
    size_t nl = lf.find('\n', pos);
    std::string_view ln(lf.data() + pos, (nl == std::string::npos ? lf.size() : nl) - pos);
    size_t end = ln.find_last_not_of(" \t");
    out.append(ln.substr(0, end == std::string_view::npos ? 0 : end + 1));
    if (nl == std::string::npos) break;
    out += '\n';
    pos = nl + 1;
  }
  return out;
}

std::vector<PatchSample> deduplicate(const std::vector<PatchSample>& samples) {
  std::vector<PatchSample> out;
  std::unordered_set<std::string> seen;
  for (const auto& s : samples) {
    std::string key = normalize_code(s.buggy_code);
    key += '\x1f';
    key += normalize_code(s.fixed_code);
    if (seen.insert(std::move(key)).second) out.push_back(s);
  }
  return out;
}

FoldAssignment kfold_split(const std::vector<std::string>& ids, int k, int64_t seed) {
  if (k < 2) throw std::invalid_argument("kfold_split: k must be >= 2");
  if (ids.size() < static_cast<size_t>(k))
    throw std::invalid_argument("kfold_split: need at least k ids, got " +
                                std::to_string(ids.size()));
  {
    std::unordered_set<std::string> uniq(ids.begin(), ids.end());
    if (uniq.size() != ids.size())
      throw std::invalid_argument("kfold_split: ids must be distinct");
  }
  std::vector<std::string> shuffled = ids;
  Rng rng(static_cast<uint64_t>(seed));
  rng.shuffle(shuffled);

  FoldAssignment fa;
  fa.k = k;
  fa.seed = seed;
  for (size_t i = 0; i < shuffled.size(); ++i)
    fa.folds.emplace(std::move(shuffled[i]), static_cast<int>(i % static_cast<size_t>(k)));
  return fa;
}

FoldAssignment kfold_split_stratified(const std::vector<PatchSample>& samples, int k,
                                      int64_t seed) {
  if (k < 2) throw std::invalid_argument("kfold_split: k must be >= 2");
  if (samples.size() < static_cast<size_t>(k))
    throw std::invalid_argument("kfold_split: need at least k samples, got " +
                                std::to_string(samples.size()));
  std::vector<std::string> correct_ids, overfitting_ids;
  for (const auto& s : samples)
    (s.label == Verdict::Correct ? correct_ids : overfitting_ids).push_back(s.id);
  {
    std::unordered_set<std::string> uniq;
    for (const auto& s : samples)
      if (!uniq.insert(s.id).second)
        throw std::invalid_argument("kfold_split: ids must be distinct");
  }

  FoldAssignment fa;
  fa.k = k;
  fa.seed = seed;
  Rng rng(static_cast<uint64_t>(seed));
  size_t offset = 0;  // continue dealing across groups so totals stay balanced
  for (auto* group : {&correct_ids, &overfitting_ids}) {
    rng.shuffle(*group);
    for (size_t i = 0; i < group->size(); ++i)
      fa.folds.emplace(std::move((*group)[i]),
                       static_cast<int>((offset + i) % static_cast<size_t>(k)));
    offset = (offset + group->size()) % static_cast<size_t>(k);
  }
  return fa;
}

std::string FoldAssignment::to_json_string() const {
  json folds_obj = json::object();
  for (const auto& [id, fold] : folds) folds_obj[id] = fold;
  json doc{{"k", k}, {"seed", seed}, {"folds", folds_obj}};
  return doc.dump(2) + "\n";
}

FoldAssignment FoldAssignment::from_json_string(const std::string& text) {
  json doc = json::parse(text);
  FoldAssignment fa;
  fa.k = doc.at("k").get<int>();
  fa.seed = doc.at("seed").get<int64_t>();
  for (const auto& [id, fold] : doc.at("folds").items()) {
    int f = fold.get<int>();
    if (f < 0 || f >= fa.k)
      throw std::runtime_error("fold assignment: fold index out of range for id '" + id + "'");
    fa.folds.emplace(id, f);
  }
  return fa;
}

DatasetStats dataset_stats(const std::vector<PatchSample>& samples) {
  DatasetStats st;
  for (const auto& s : samples)
    (s.label == Verdict::Correct ? st.correct_count : st.overfitting_count)++;
  st.total = static_cast<int64_t>(samples.size());
  return st;
}

}  // namespace patchjudge
