#pragma once

// Seeded randomized invariant suites, one per module. Deterministic in
// (seed, count): samples come from a fixed 64-bit Mersenne twister and a
// bias-tolerant modulo reduction, never from std distributions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nilint/geometry.hpp"
#include "nilint/gprime.hpp"
#include "nilint/group.hpp"
#include "nilint/qfield.hpp"

namespace nilint {

// Bounded-height samples: numerators in [-100, 100], denominators in
// [1, 100].
class Sampler {
 public:
  static constexpr long kMaxNum = 100;
  static constexpr long kMaxDen = 100;

  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi);  // inclusive
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational();
  Rational nonzero_rational();
  // A mix of integers, rationals and genuinely quadratic values.
  QuadRat scalar();
  QuadRat nonzero();
  QuadRat positive();
  QuadRat irrational();  // q != 0

  HElem h_elem();
  GElem g_elem();
  GElem noncentral();
  GPrimeElem gp_elem();
  EPoint point();
  AffPoint off_axis();

 private:
  std::mt19937_64 rng_;
};

struct SuiteReport {
  std::string suite;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return !counterexample; }
};

// qfield, group-core, gprime, geometry, interp.
const std::vector<std::string>& suite_names();

// Runs one suite; each case draws fresh samples and checks every invariant
// of the module on them. Stops at the first failing case. Throws UsageError
// for an unknown suite.
SuiteReport run_suite(std::string_view suite, std::uint64_t seed,
                      std::size_t count);

// As run_suite, with "all" expanding to every suite in order.
std::vector<SuiteReport> run_check(std::string_view suite, std::uint64_t seed,
                                   std::size_t count);

}  // namespace nilint
