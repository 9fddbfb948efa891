#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace jordan {

namespace detail {

inline std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace detail

enum class Grade { certified_invariant, finite_field_evidence, map_verified };

inline const char* to_string(Grade g) {
  switch (g) {
    case Grade::certified_invariant:
      return "certified-invariant";
    case Grade::finite_field_evidence:
      return "finite-field-evidence";
    case Grade::map_verified:
      return "paper-map-verified";
  }
  return "?";
}

/// One checked claim.
struct ReportRow {
  std::string subject;
  std::string claim;
  std::string expected;
  std::string observed;
  Grade grade = Grade::certified_invariant;
  bool pass = false;
};

struct ReportSection {
  std::string title;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;

  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.pass ? 0 : 1;
    return n;
  }
};

struct ReportDocument {
  std::vector<ReportSection> sections;

  bool all_pass() const {
    for (const auto& s : sections)
      if (!s.all_pass()) return false;
    return true;
  }

  std::string text() const {
    std::string out;
    for (const auto& s : sections) {
      out += "== " + s.title + " ==\n";
      for (const auto& r : s.rows) {
        out += std::string(r.pass ? "PASS" : "FAIL") + "  " + r.subject + "  " + r.claim;
        out += "  [" + std::string(to_string(r.grade)) + "]";
        if (!r.expected.empty() || !r.observed.empty()) out += "  expected: " + r.expected + "  observed: " + r.observed;
        out += "\n";
      }
      for (const auto& n : s.notes) out += "  note: " + n + "\n";
      out += "-- " + std::to_string(s.rows.size() - s.failures()) + "/" + std::to_string(s.rows.size()) + " rows pass\n\n";
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& s : sections) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : s.rows)
        rows.push_back({{"subject", r.subject},
                        {"claim", r.claim},
                        {"expected", r.expected},
                        {"observed", r.observed},
                        {"grade", to_string(r.grade)},
                        {"pass", r.pass}});
      doc.push_back({{"title", s.title}, {"rows", rows}, {"notes", s.notes}, {"pass", s.all_pass()}});
    }
    return nlohmann::json{{"sections", doc}, {"pass", all_pass()}};
  }
};

}  // namespace jordan
