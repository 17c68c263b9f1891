#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace declcmp {

/// Dense index of an element inside one FiniteLattice (0..size()-1, in
/// declaration order).
using ElementId = std::uint16_t;

struct CoprimePrimePair {
  ElementId coprime;
  ElementId prime;

  friend bool operator==(const CoprimePrimePair&, const CoprimePrimePair&) = default;
};

struct Irreducibles {
  std::vector<ElementId> atoms;
  std::vector<ElementId> meet_irreducible;
  std::vector<ElementId> join_irreducible;
};

/// An explicit finite lattice. The order, meet and join tables are
/// materialized at construction, so every query afterwards is a table lookup.
/// Instances are immutable.
class FiniteLattice {
public:
  /// Builds a lattice from its Hasse diagram. `covers` holds (lower, upper)
  /// name pairs; redundant (transitive) pairs are accepted and dropped.
  ///
  /// Throws Error with NotAPartialOrder on a cycle, NotALattice naming a pair
  /// with several maximal lower (or minimal upper) bounds, and
  /// NoUniqueBottom/NoUniqueTop when bounds are missing altogether.
  static FiniteLattice build_from_covers(
      std::span<const std::string> names,
      std::span<const std::pair<std::string, std::string>> covers);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ElementId x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ElementId> find(std::string_view name) const;
  /// Like find, but throws UnknownElement.
  ElementId id(std::string_view name) const;

  ElementId bottom() const noexcept { return bottom_; }
  ElementId top() const noexcept { return top_; }

  bool leq(ElementId x, ElementId y) const noexcept { return leq_[index(x, y)]; }
  bool lt(ElementId x, ElementId y) const noexcept { return x != y && leq(x, y); }
  ElementId meet(ElementId x, ElementId y) const noexcept { return meet_[index(x, y)]; }
  ElementId join(ElementId x, ElementId y) const noexcept { return join_[index(x, y)]; }

  /// Hasse edges (lower, upper), sorted.
  const std::vector<std::pair<ElementId, ElementId>>& covers() const noexcept {
    return covers_;
  }
  std::vector<ElementId> upper_covers(ElementId x) const;
  std::vector<ElementId> lower_covers(ElementId x) const;

  /// Top is never meet-irreducible and bottom never join-irreducible
  /// (they are the empty meet and empty join).
  Irreducibles irreducibles() const;

  /// One entry per co-prime element, in declaration order of the co-prime.
  const std::vector<CoprimePrimePair>& coprime_prime_pairs() const noexcept {
    return pairs_;
  }
  std::vector<ElementId> coprimes() const;
  std::vector<ElementId> primes() const;
  bool is_coprime(ElementId x) const;
  /// Co-primes that are not below another co-prime.
  std::vector<ElementId> maximal_coprimes() const;

private:
  FiniteLattice() = default;
  std::size_t index(ElementId x, ElementId y) const noexcept {
    return static_cast<std::size_t>(x) * names_.size() + y;
  }
  void compute_coprime_pairs();

  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  std::vector<std::pair<ElementId, ElementId>> covers_;
  std::vector<CoprimePrimePair> pairs_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
};

} // namespace declcmp
