#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace derange {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
};

struct VerifyOptions {
  int max_n_a = 6;   // type A degrees 3..max_n_a
  int max_n_b = 4;   // type B degrees 3..max_n_b
  int max_n_parity = 6;
  unsigned jobs = 0;  // 0 picks the hardware concurrency
};

/// Injectivity, range laws and left inverse of psi over all of H_n x H_n.
SuiteReport verify_type_a(const VerifyOptions& opts);

/// Injectivity, parity preservation, D and B-D closure and left inverse of
/// phi over all of H_n^B x H_n^B, plus sub-class coverage.
SuiteReport verify_type_bd(const VerifyOptions& opts);

/// Existence of a degree-3 pair whose naive image leaves the D class.
SuiteReport verify_naive_control();

/// f_parity and g_parity bijections and the w_0 bookkeeping.
SuiteReport verify_parity(const VerifyOptions& opts);

/// Recurrence, closed-form and log-convexity identities.
SuiteReport verify_sequences(const VerifyOptions& opts);

std::string format_report(const SuiteReport& report);

}  // namespace derange
