#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "declcmp/realities.hpp"

namespace declcmp {

/// X -> A over the attributes of a schema.
struct ClassicalFD {
  AttributeSet lhs;
  std::size_t rhs = 0;
};

enum class Problem { Certain, StronglyCertain, Possible, StronglyPossible };

std::string_view to_string(Problem p) noexcept;

struct DecisionStats {
  std::uint64_t generators = 0;
  std::uint64_t closures_computed = 0;
  std::uint64_t nodes_explored = 0;
};

struct Verdict {
  Problem problem = Problem::Certain;
  bool answer = false;
  /// Present when a positive existential answer was found (and verified).
  std::optional<std::variant<Reality, StrongReality>> witness;
  /// A generator violating the condition of a negative universal answer, or
  /// the closure of the characteristic vector for a negative possible_fd.
  std::optional<AbstractTuple> counterexample;
  DecisionStats stats;
};

/// Throws ArityMismatch / UnknownAttribute when fd does not fit the schema.
void require_valid(const SchemaContext& ctx, const ClassicalFD& fd);

/// X -> A holds under every reality: each generator has m[A] = top or some
/// B in X with m[B] = bottom.
Verdict certain_fd(const GeneratorSet& G, const ClassicalFD& fd);

/// X -> A holds under every strong reality. True when there is none.
Verdict strongly_certain_fd(const GeneratorSet& G, const ClassicalFD& fd);

/// X -> A holds under some reality: closure of the characteristic vector of X
/// is not bottom on A.
Verdict possible_fd(const GeneratorSet& G, const ClassicalFD& fd);

struct SpfdOptions {
  /// Restrict the search to maximal co-primes and cut branches whose upper
  /// bound cannot succeed. Off gives the plain exhaustive search.
  bool prune = true;
  /// Worker threads splitting the first branching attribute. 1 = sequential.
  unsigned threads = 1;
  /// Forces the sequential search order regardless of `threads`.
  bool deterministic = false;
};

/// X -> A holds under some strong reality. False when there is none.
Verdict strongly_possible_fd(const GeneratorSet& G, const ClassicalFD& fd,
                             const SpfdOptions& opts = {});

Verdict decide(Problem p, const GeneratorSet& G, const ClassicalFD& fd,
               const SpfdOptions& opts = {});

} // namespace declcmp
