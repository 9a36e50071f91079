#ifndef ZFPD_REPORT_HPP
#define ZFPD_REPORT_HPP

#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"
#include "zfpd/theorems.hpp"

namespace zfpd {

inline nlohmann::ordered_json to_json(const Failure& f) {
  return {{"graph6", f.graph6}, {"claim", f.claim}, {"expected", f.expected}, {"observed", f.observed}};
}

inline nlohmann::ordered_json to_json(const SearchOutcome& s) {
  nlohmann::ordered_json j{{"name", s.name}, {"cap", s.cap}, {"found", s.found}};
  if (s.found) {
    j["graph6"] = s.graph6;
    j["rechecked"] = s.rechecked;
  }
  j["detail"] = s.detail;
  return j;
}

/// Field order is fixed; `elapsed_ms` is the only field that varies between
/// identical runs.
inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["theorem_id"] = r.theorem_id;
  j["claim"] = r.claim;
  j["universe"] = r.universe;
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["graphs_checked"] = r.graphs_checked;
  j["skipped"] = r.skipped;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) j["failures"].push_back(to_json(f));
  j["notes"] = r.notes;
  j["searches"] = nlohmann::ordered_json::array();
  for (const auto& s : r.searches) j["searches"].push_back(to_json(s));
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

/// Human-readable block; at most `max_failures` failures are listed.
inline std::string to_table(const VerifyReport& r, std::size_t max_failures = 10) {
  std::ostringstream out;
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.1f ms", r.elapsed_ms);
  out << r.theorem_id << "  " << (r.passed() ? "PASS" : "FAIL") << "  checked=" << r.graphs_checked
      << " skipped=" << r.skipped << " failures=" << r.failures.size() << "  " << elapsed << "\n";
  out << "  claim:    " << r.claim << "\n";
  out << "  universe: " << r.universe << "\n";
  for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) {
    const auto& f = r.failures[i];
    out << "  x " << f.graph6 << "  " << f.claim << "  expected " << f.expected << ", observed " << f.observed << "\n";
  }
  if (r.failures.size() > max_failures) out << "  ... " << r.failures.size() - max_failures << " more failures\n";
  for (const auto& s : r.searches) {
    out << "  search: " << s.name << " (" << s.cap << "): ";
    if (s.found) {
      out << "witness " << s.graph6 << (s.rechecked ? " (rechecked)" : " (RECHECK FAILED)") << ", " << s.detail;
    } else {
      out << "no witness up to cap";
    }
    out << "\n";
  }
  for (const auto& note : r.notes) out << "  note: " << note << "\n";
  return out.str();
}

}  // namespace zfpd

#endif  // ZFPD_REPORT_HPP
