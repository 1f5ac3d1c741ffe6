#pragma once

#include <string>

namespace redwords {

enum class Verdict { Holds, Counterexample, ResourceLimited };

std::string to_string(Verdict v);

// Exit code convention: holds = 0, counterexample = 2, resource-limited = 3.
int exit_code(Verdict v);

// One verification result.  Everything except elapsed_ms is deterministic
// for a given configuration, independent of worker count; record(false)
// yields the byte-stable form.
struct VerificationReport {
  std::string check;
  std::string range;
  Verdict verdict = Verdict::Holds;
  std::string detail;   // stable key=value pairs joined by ';'
  std::string witness;  // "-" when absent
  long long elapsed_ms = 0;

  std::string record(bool with_timing = true) const;
};

}  // namespace redwords
