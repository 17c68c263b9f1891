#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "declcmp/abstract_tuple.hpp"
#include "declcmp/lattice.hpp"
#include "declcmp/value.hpp"

namespace declcmp {

/// Numeric interval with independently open or closed ends. A missing bound
/// is unbounded on that side.
struct Interval {
  std::optional<Decimal> lo;
  std::optional<Decimal> hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Value& v) const;
  bool empty() const;
  bool subset_of(const Interval& o) const;
};

namespace pred {
struct Equal {};
struct EqualNonNull {};
struct BothInInterval {
  Interval interval;
};
struct CrossIntervals {
  Interval first;
  Interval second;
};
struct EitherNull {};
struct BothNull {};
struct AbsDiffLeq {
  Decimal delta;
};
struct PairInSet {
  std::vector<std::pair<Value, Value>> pairs;
};
struct Always {};
} // namespace pred

/// Every alternative is symmetric in its two arguments, so comparability
/// functions built from them are commutative.
using Predicate = std::variant<pred::Equal, pred::EqualNonNull, pred::BothInInterval,
                               pred::CrossIntervals, pred::EitherNull, pred::BothNull,
                               pred::AbsDiffLeq, pred::PairInSet, pred::Always>;

bool matches(const Predicate& p, const Value& u, const Value& v);
std::string predicate_name(const Predicate& p);

struct ComparabilityRule {
  Predicate predicate;
  ElementId result;
};

/// A comparability function (ordered first-match rules) and its truth lattice.
struct AttributeContext {
  std::string name;
  FiniteLattice lattice;
  std::vector<ComparabilityRule> rules;
};

class SchemaContext {
public:
  /// Throws DuplicateAttribute, or UnknownElement when a rule result is not
  /// an element of its lattice. Totality and the other definitional checks
  /// are left to validate_context.
  explicit SchemaContext(std::vector<AttributeContext> attributes);

  std::size_t size() const noexcept { return attributes_.size(); }
  const AttributeContext& attribute(std::size_t i) const { return attributes_.at(i); }
  const std::vector<AttributeContext>& attributes() const noexcept { return attributes_; }
  const FiniteLattice& lattice(std::size_t i) const { return attributes_.at(i).lattice; }
  const std::string& name(std::size_t i) const { return attributes_.at(i).name; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownAttribute.
  std::size_t index_of(std::string_view name) const;

  AbstractTuple top_vector() const;
  AbstractTuple bottom_vector() const;

  /// Parses "gb,d,i" (element names in schema order). Throws ArityMismatch or
  /// UnknownElement.
  AbstractTuple parse_tuple(std::string_view text) const;
  std::string format_tuple(const AbstractTuple& t) const;
  /// Parses "B,C" (attribute names; empty string is the empty set).
  AttributeSet parse_attributes(std::string_view text) const;
  std::string format_attributes(const AttributeSet& s) const;

private:
  std::vector<AttributeContext> attributes_;
};

/// First matching rule on the unordered pair {u, v}. Throws NotTotal when no
/// rule matches and ReflexivityViolation when equal non-null values do not
/// map to the lattice top.
ElementId compare_values(const AttributeContext& ctx, const Value& u, const Value& v);

/// Coordinate-wise compare_values in schema order. Throws ArityMismatch.
AbstractTuple compare_tuples(const SchemaContext& ctx, std::span<const Value> t1,
                             std::span<const Value> t2);

struct ValidationIssue {
  enum class Severity { Info, Warning, Fatal };
  enum class Kind {
    LatticeValid,
    InvalidLattice,
    DegenerateLattice,
    NotTotal,
    UnreachableRule,
    Surjectivity,
  };

  Severity severity;
  Kind kind;
  std::string attribute;
  std::string message;
};

std::string_view to_string(ValidationIssue::Kind kind) noexcept;
std::string_view to_string(ValidationIssue::Severity s) noexcept;

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const;
  std::size_t warning_count() const;
};

/// Static checks: one info line per valid lattice, fatal NotTotal and
/// DegenerateLattice (one-element truth lattices), warnings for rules shadowed
/// by an earlier rule and for lattice elements no reachable rule produces.
/// Shadowing is detected conservatively (single earlier rule subsumption).
ValidationReport validate_context(const SchemaContext& ctx);

} // namespace declcmp
