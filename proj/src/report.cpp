#include "witt/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace witt {

void VerificationReport::record(const CaseResult& c) {
  ++run;
  if (c.ok)
    ++passed;
  else if (!first_failure)
    first_failure = c;
}

void VerificationReport::absorb(const VerificationReport& other) {
  run += other.run;
  passed += other.passed;
  if (!first_failure && other.first_failure) first_failure = other.first_failure;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  char time[32];
  std::snprintf(time, sizeof time, "%.3f", seconds);
  os << suite << ": " << (ok() ? "PASS" : "FAIL") << " (" << passed << "/" << run
     << " cases, " << time << " s";
  if (seed) os << ", seed " << *seed;
  os << ")\n";
  if (first_failure) {
    os << "  first failure: " << first_failure->label << "\n";
    os << "    lhs: " << first_failure->lhs << "\n";
    os << "    rhs: " << first_failure->rhs << "\n";
  }
  for (const auto& note : notes) os << "  " << note << "\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json j = {{"suite", suite},   {"run", run},
                      {"passed", passed}, {"ok", ok()},
                      {"seconds", seconds}, {"notes", notes}};
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  if (first_failure)
    j["first_failure"] = {{"case", first_failure->label},
                          {"lhs", first_failure->lhs},
                          {"rhs", first_failure->rhs}};
  else
    j["first_failure"] = nullptr;
  return j.dump();
}

}  // namespace witt
