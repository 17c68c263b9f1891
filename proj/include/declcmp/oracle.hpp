#pragma once

#include <cstdint>

#include "declcmp/decision.hpp"
#include "declcmp/reduction.hpp"

namespace declcmp {

/// Brute-force deciders used as ground truth. They quantify
/// check_fd_under_reality over every (strong) reality and share no code with
/// the decision procedures beyond that check.

constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Throws EnumerationCapExceeded when the (strong) reality count passes cap.
bool brute_decide(Problem kind, const GeneratorSet& G, const ClassicalFD& fd,
                  std::uint64_t cap = kDefaultEnumerationCap);

constexpr int kMaxBruteSatVars = 20;

/// Exhaustive assignment search. Throws TooManyVariables above 20 variables.
bool brute_sat(const Cnf& cnf);

} // namespace declcmp
