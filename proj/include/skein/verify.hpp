#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skein/serialize.hpp"

namespace skein::verify {

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Check {
  std::string id;
  Json params;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string certifies;  // the identity this check establishes
  double seconds = 0;
};

struct CheckReport {
  std::string suite;
  int max_n = 0;
  std::uint64_t seed = kDefaultSeed;
  bool skipped = false;
  std::string skip_reason;
  std::vector<Check> checks;
  std::vector<CheckReport> parts;  // filled for "all"

  /// True unless some check (in any part) failed.  Skipped suites pass.
  bool passed() const;
  int failures() const;
};

struct Options {
  std::uint64_t seed = kDefaultSeed;
  bool timings = false;  // record wall time per check
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();
/// Default max_n of a suite (the size used when none is given).
int default_max_n(const std::string& suite);
/// Largest max_n a suite accepts; beyond it the suite is skipped.
int max_n_bound(const std::string& suite);

/// Throws std::invalid_argument for an unknown suite name.  "all" runs every
/// suite in order, each at min(max_n, its default size).
CheckReport run_suite(const std::string& name, int max_n, const Options& options = {});

Json to_json(const CheckReport& report);
std::string to_text(const CheckReport& report);

}  // namespace skein::verify
