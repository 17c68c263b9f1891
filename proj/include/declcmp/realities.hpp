#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "declcmp/abstract.hpp"

namespace declcmp {

/// A {0,1}-labeling of one truth lattice with bottom -> 0 and top -> 1.
/// Monotonicity is not assumed; classify_interpretation reports it.
class AttributeInterpretation {
public:
  /// `labels[x]` for every element x. Throws InvalidInterpretation when the
  /// size is wrong or bottom/top are not labeled 0/1.
  AttributeInterpretation(const FiniteLattice& L, std::vector<bool> labels);
  /// h(x) = 1 iff x >= threshold.
  static AttributeInterpretation up_set(const FiniteLattice& L, ElementId threshold);

  bool operator()(ElementId x) const { return labels_.at(x); }
  const std::vector<bool>& labels() const noexcept { return labels_; }

private:
  std::vector<bool> labels_;
};

struct InterpretationFlags {
  bool increasing = false;
  bool meet_hom = false;
  bool join_hom = false;
  bool hom = false;
};

/// Exhaustive definition checks over all pairs of elements.
InterpretationFlags classify_interpretation(const AttributeInterpretation& h, const FiniteLattice& L);

/// A schema interpretation given by arbitrary per-attribute labelings. Used to
/// study interpretations that are not realities; the decision procedures only
/// take Reality and StrongReality.
class Interpretation {
public:
  Interpretation(const SchemaContext& ctx, std::vector<AttributeInterpretation> parts);
  const AttributeInterpretation& part(std::size_t a) const { return parts_.at(a); }
  std::size_t size() const noexcept { return parts_.size(); }

private:
  std::vector<AttributeInterpretation> parts_;
};

/// A reality stored as its threshold vector: attribute A is interpreted as
/// equal on x iff x[A] >= thresholds[A]. Thresholds are never bottom.
class Reality {
public:
  /// Throws InvalidThreshold on a bottom threshold, ArityMismatch on size.
  Reality(const SchemaContext& ctx, AbstractTuple thresholds);
  /// All thresholds at top: classical equality.
  static Reality equality(const SchemaContext& ctx);

  const AbstractTuple& thresholds() const noexcept { return thresholds_; }
  ElementId threshold(std::size_t a) const { return thresholds_[a]; }
  Interpretation as_interpretation(const SchemaContext& ctx) const;

  friend bool operator==(const Reality&, const Reality&) = default;

private:
  AbstractTuple thresholds_;
};

/// A strong reality: one co-prime per attribute. Its labeling is h^c, which
/// is the up-set of c (the complement is the down-set of the prime partner).
class StrongReality {
public:
  /// Throws InvalidThreshold when a choice is not co-prime.
  StrongReality(const SchemaContext& ctx, AbstractTuple coprime_choice);

  const AbstractTuple& coprime_choice() const noexcept { return choice_; }
  Reality as_reality(const SchemaContext& ctx) const { return Reality(ctx, choice_); }

  friend bool operator==(const StrongReality&, const StrongReality&) = default;

private:
  AbstractTuple choice_;
};

AttributeSet interpret_element(const SchemaContext& ctx, const Reality& g, const AbstractTuple& x);
AttributeSet interpret_element(const SchemaContext& ctx, const Interpretation& g,
                               const AbstractTuple& x);

/// Image family, sorted and deduplicated.
std::vector<AttributeSet> interpret_family(const SchemaContext& ctx, const Reality& g,
                                           std::span<const AbstractTuple> elements);
std::vector<AttributeSet> interpret_family(const SchemaContext& ctx, const Interpretation& g,
                                           std::span<const AbstractTuple> elements);

/// Contains the full set and is closed under pairwise intersection.
bool is_closure_system(std::span<const AttributeSet> family, std::size_t universe);

/// pi_g(x)[A] = x_g[A] if x[A] >= x_g[A], else bottom.
AbstractTuple projection(const SchemaContext& ctx, const Reality& g, const AbstractTuple& x);

/// Every generator m with X in g(m) has A in g(m). Throws UnknownAttribute
/// when A is outside the schema.
bool check_fd_under_reality(const GeneratorSet& G, const Reality& g, const AttributeSet& X,
                            std::size_t A);

/// g(lhs) in g(m) implies g(rhs) in g(m), for every generator m.
bool check_interpreted_afd(const GeneratorSet& G, const Reality& g, const AbstractFD& fd);

/// Evaluates both sides of the projection equivalence (interpreted FD vs the
/// abstract FD between projections) and returns their shared value. Throws
/// TheoremViolation if they ever differ.
bool check_projection_theorem(const GeneratorSet& G, const Reality& g, const AbstractFD& fd);

/// A reality under which the interpreted FD has the same truth value as the
/// abstract FD. When it holds the thresholds follow the non-bottom lhs
/// coordinates, otherwise the non-bottom rhs coordinates; other attributes get
/// the top. Throws InconsistentFlag when `holds` disagrees with
/// check_abstract_fd, and WitnessVerificationFailed if the result does not
/// verify.
Reality witness_reality(const GeneratorSet& G, const AbstractFD& fd, bool holds);

/// Odometer over the cartesian product of per-attribute candidate sets.
class ProductEnumerator {
public:
  explicit ProductEnumerator(std::vector<std::vector<ElementId>> choices);
  /// Next combination, or nullopt when exhausted (immediately if some
  /// candidate set is empty).
  std::optional<AbstractTuple> next();
  /// Product of the candidate set sizes, saturating at UINT64_MAX.
  std::uint64_t count() const noexcept { return count_; }

private:
  std::vector<std::vector<ElementId>> choices_;
  std::vector<std::size_t> pos_;
  std::uint64_t count_ = 0;
  bool done_ = false;
};

/// Realities: every non-bottom threshold per attribute.
class RealityEnumerator {
public:
  explicit RealityEnumerator(const SchemaContext& ctx);
  std::optional<Reality> next();
  std::uint64_t count() const noexcept { return inner_.count(); }

private:
  const SchemaContext* ctx_;
  ProductEnumerator inner_;
};

/// Strong realities: every co-prime per attribute. Empty when some truth
/// lattice has no co-prime.
class StrongRealityEnumerator {
public:
  explicit StrongRealityEnumerator(const SchemaContext& ctx);
  std::optional<StrongReality> next();
  std::uint64_t count() const noexcept { return inner_.count(); }

private:
  const SchemaContext* ctx_;
  ProductEnumerator inner_;
};

inline RealityEnumerator enumerate_realities(const SchemaContext& ctx) {
  return RealityEnumerator(ctx);
}
inline StrongRealityEnumerator enumerate_strong_realities(const SchemaContext& ctx) {
  return StrongRealityEnumerator(ctx);
}

} // namespace declcmp
