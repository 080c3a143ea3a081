#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sslat/io.hpp"

namespace sslat {

struct CheckResult {
  std::string name;
  std::size_t runs = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when every run passed

  bool passed() const noexcept { return failures == 0; }
};

struct RunReport {
  std::string command;
  Json inputs;
  Json outputs;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool passed() const;
  /// Wall time is left out unless asked for, so reports stay reproducible.
  Json to_json(bool with_timing = false) const;
};

inline constexpr int kMaxVerifyDegree = 8;

struct VerifyOptions {
  int max_n = 4;
  int jobs = 1;
  std::uint64_t seed = 0;
  int samples = 0;     // random permutations checked on top of the exhaustive sweep
  int sample_n = 7;    // their degree
  bool inject_fault = false;  // corrupt the round-trip expectation, for testing the harness
};

/// Runs the invariant suite on every permutation of degree 1..max_n (the
/// quadratic and exponential checks stop at degree 5) and on the random
/// samples. Throws OutOfRange or TooLarge for bad options.
RunReport run_verification(const VerifyOptions& options);

}  // namespace sslat
