#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace twoseg {

enum class Verdict { pass, fail, partial };

enum class FailureKind { not_injective, not_surjective, structural, precondition };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::partial: return "partial";
  }
  return "?";
}

inline const char* to_string(FailureKind k) {
  switch (k) {
    case FailureKind::not_injective: return "not-injective";
    case FailureKind::not_surjective: return "not-surjective";
    case FailureKind::structural: return "structural";
    case FailureKind::precondition: return "precondition";
  }
  return "?";
}

struct Instance {
  std::string condition;
  std::vector<int> index;
  std::string role;
  FailureKind kind = FailureKind::structural;
  std::vector<std::string> witness;
};

/// Outcome of a decision procedure. `instances` only ever holds failures;
/// `checked` counts every instance that was examined.
struct CheckReport {
  Verdict verdict = Verdict::pass;
  std::string scope;
  std::size_t checked = 0;
  std::vector<Instance> instances;
  std::map<std::string, CheckReport> subreports;
  std::vector<std::string> notes;

  bool passed() const noexcept { return verdict == Verdict::pass; }
  bool failed() const noexcept { return verdict == Verdict::fail; }

  void fail(Instance inst) {
    instances.push_back(std::move(inst));
    verdict = Verdict::fail;
  }

  /// Marks the report partial unless it already failed.
  void mark_partial(std::string note) {
    notes.push_back(std::move(note));
    if (verdict != Verdict::fail) verdict = Verdict::partial;
  }

  void add_subreport(const std::string& name, CheckReport sub) {
    checked += sub.checked;
    for (const auto& inst : sub.instances) instances.push_back(inst);
    if (sub.verdict == Verdict::fail) verdict = Verdict::fail;
    else if (sub.verdict == Verdict::partial && verdict == Verdict::pass) verdict = Verdict::partial;
    subreports.emplace(name, std::move(sub));
  }
};

inline nlohmann::json to_json(const Instance& inst) {
  return {{"condition", inst.condition},
          {"index", inst.index},
          {"role", inst.role},
          {"kind", to_string(inst.kind)},
          {"witness", inst.witness}};
}

inline nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["verdict"] = to_string(r.verdict);
  j["scope"] = r.scope;
  j["checked"] = r.checked;
  j["instances"] = nlohmann::json::array();
  for (const auto& inst : r.instances) j["instances"].push_back(to_json(inst));
  j["subreports"] = nlohmann::json::object();
  for (const auto& [name, sub] : r.subreports) j["subreports"][name] = to_json(sub);
  j["notes"] = r.notes;
  return j;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

inline std::string index_string(const std::vector<int>& idx) {
  std::string out = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(idx[k]);
  }
  return out + ")";
}

inline void render_text(std::ostream& os, const CheckReport& r, const std::string& name,
                        int depth = 0) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  os << pad << name << ": " << to_string(r.verdict) << " (" << r.checked << " checked";
  if (!r.scope.empty()) os << ", " << r.scope;
  os << ")\n";
  for (const auto& note : r.notes) os << pad << "  note: " << note << "\n";
  if (r.subreports.empty()) {
    for (const auto& inst : r.instances) {
      os << pad << "  FAIL " << inst.condition << " " << index_string(inst.index) << " "
         << to_string(inst.kind);
      if (!inst.role.empty()) os << " [" << inst.role << "]";
      if (!inst.witness.empty()) os << " witness: " << join(inst.witness, ", ");
      os << "\n";
    }
  }
  for (const auto& [sub_name, sub] : r.subreports) render_text(os, sub, sub_name, depth + 1);
}

inline std::string to_text(const CheckReport& r, const std::string& name = "report") {
  std::ostringstream os;
  render_text(os, r, name);
  return os.str();
}

} // namespace twoseg
