// One line per acceptance criterion.  Exit status is the number of failing
// criteria (0 when everything holds).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "jordan/report.hpp"

using namespace jordan;

namespace {

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<std::vector<ReportSection>()> run;
};

constexpr std::size_t kShownFailures = 6;

bool report(const Criterion& c, bool verbose) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<ReportSection> sections;
  std::string error;
  try {
    sections = c.run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::size_t rows = 0, failed = 0;
  std::vector<std::string> shown;
  for (const auto& s : sections)
    for (const auto& r : s.rows) {
      ++rows;
      if (r.pass) continue;
      ++failed;
      if (shown.size() < kShownFailures) shown.push_back(r.subject + ": " + r.claim + " -> " + r.observed);
    }
  bool in_time = secs <= c.budget_seconds;
  bool pass = error.empty() && rows > 0 && failed == 0 && in_time;
  std::printf("%s  criterion %2d  %-44s %zu/%zu rows  %.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.title,
              rows - failed, rows, secs, c.budget_seconds);
  if (!error.empty()) std::printf("      error: %s\n", error.c_str());
  if (!in_time) std::printf("      over the time budget\n");
  for (const auto& s : shown) std::printf("      %s\n", s.c_str());
  if (failed > shown.size()) std::printf("      ... %zu more\n", failed - shown.size());
  if (verbose) {
    ReportDocument doc;
    doc.sections = sections;
    std::fputs(doc.text().c_str(), stdout);
  }
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  bool verbose = false;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "-v") == 0)
      verbose = true;
    else
      only.push_back(std::atoi(argv[i]));
  }
  SeparationOptions sep;
  std::vector<Criterion> all{
      {1, "centers of the small table", 1, [] { return std::vector{table_centers()}; }},
      {2, "associativity flags of the small table", 1, [] { return std::vector{table_associativity()}; }},
      {3, "second cohomology of the small table", 5, [] { return std::vector{table_h2()}; }},
      {4, "dimension-5 list is valid", 10, [] { return std::vector{catalog_validity_section()}; }},
      {5, "lineage round trip", 10, [] { return std::vector{lineage_section()}; }},
      {6, "printed isomorphisms verify", 1, [] { return std::vector{listed_maps_section()}; }},
      {7, "pairwise non-isomorphism evidence", 600,
       [&] { return std::vector{separation_section(sep), parametric_equivalence_section(sep)}; }},
      {8, "one-dimensional extension claims", 1, [] { return std::vector{extension_claims_section()}; }},
      {9, "orbit census over F5", 120, [] { return std::vector{orbit_section()}; }},
      {10, "normal-form lemma", 1, [] { return std::vector{lemma_section()}; }},
      {11, "random cocycles preserve the Jordan identity", 30, [] { return std::vector{random_cocycle_section()}; }},
  };
  int failures = 0;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    if (!report(c, verbose)) ++failures;
  }
  std::printf("%d criteria failed\n", failures);
  return failures;
}
