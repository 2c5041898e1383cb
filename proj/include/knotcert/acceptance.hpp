#pragma once

#include <string>
#include <vector>

#include "knotcert/catalog.hpp"
#include "knotcert/hfk.hpp"

namespace knotcert {

struct AcceptanceConfig {
  long long n_window = 6;  // unknot-case window; the pretzel sweep uses min(4, n_window)
  long long q_bound = 50;
  int crossing_budget = 16;
  const Catalog* catalog = nullptr;           // builtin when null
  const std::vector<HfkRow>* hfk = nullptr;  // builtin when null
  unsigned seed = 20240611;
};

struct CheckResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> details;
  std::string line() const;  // "[PASS] 3 ..."
};

// One entry per acceptance criterion, in order. Exceptions inside a check
// turn into a failing result carrying the message.
std::vector<CheckResult> run_acceptance(const AcceptanceConfig& cfg);

}  // namespace knotcert
