#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "declcmp/abstract_tuple.hpp"
#include "declcmp/context.hpp"
#include "declcmp/relation.hpp"

namespace declcmp {

/// Coordinate-wise order of the product lattice. Throws ArityMismatch.
bool vec_leq(const SchemaContext& ctx, const AbstractTuple& x, const AbstractTuple& y);
/// Coordinate-wise meet. Throws ArityMismatch.
AbstractTuple vec_meet(const SchemaContext& ctx, const AbstractTuple& x, const AbstractTuple& y);

/// Top on the attributes of X, bottom elsewhere.
AbstractTuple characteristic_vector(const SchemaContext& ctx, const AttributeSet& X);

struct AbstractFD {
  AbstractTuple lhs;
  AbstractTuple rhs;
};

/// The comparison vectors of all tuple pairs of a relation (identity pairs
/// included) plus the top vector, deduplicated and sorted. The abstract
/// lattice is the meet-closure of this set; it is never materialized by the
/// closure and decision code.
class GeneratorSet {
public:
  /// Builds from arbitrary vectors (e.g. a sampled meet-closed family); the
  /// top vector is added. Throws ArityMismatch.
  GeneratorSet(std::shared_ptr<const SchemaContext> schema, std::vector<AbstractTuple> vectors);

  const SchemaContext& schema() const noexcept { return *schema_; }
  const std::shared_ptr<const SchemaContext>& schema_ptr() const noexcept { return schema_; }
  const std::vector<AbstractTuple>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool contains(const AbstractTuple& t) const;

private:
  std::shared_ptr<const SchemaContext> schema_;
  std::vector<AbstractTuple> gens_;
};

/// Compares every pair t_i, t_j (i <= j). With workers > 1 the pairs are split
/// by first row across threads; the result is identical to the sequential one.
GeneratorSet generators(const Relation& r, unsigned workers = 1);

/// Least element of the abstract lattice above x: the meet of all generators
/// above x (top is always one of them).
AbstractTuple closure(const GeneratorSet& G, const AbstractTuple& x);

/// y <= closure(x).
bool check_abstract_fd(const GeneratorSet& G, const AbstractFD& fd);

/// Explicit abstract lattice: the meet-closure of a generator set.
class AbstractLattice {
public:
  AbstractLattice(std::shared_ptr<const SchemaContext> schema, std::vector<AbstractTuple> elements);

  const SchemaContext& schema() const noexcept { return *schema_; }
  const std::vector<AbstractTuple>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const AbstractTuple& t) const;
  /// Index pairs (lower, upper) of the cover relation.
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const;

private:
  std::shared_ptr<const SchemaContext> schema_;
  std::vector<AbstractTuple> elements_; // sorted
};

constexpr std::size_t kDefaultMaterializeCap = 100000;

/// Pairwise-meet fixpoint of the generators. Throws CapExceeded as soon as
/// the element count would pass `cap`.
AbstractLattice materialize(const GeneratorSet& G, std::size_t cap = kDefaultMaterializeCap);

} // namespace declcmp
