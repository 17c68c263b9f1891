#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "declcmp/abstract.hpp"
#include "declcmp/error.hpp"
#include "declcmp/decision.hpp"
#include "declcmp/realities.hpp"
#include "declcmp/reduction.hpp"

namespace testing {

using namespace declcmp;

using Rng = std::mt19937_64;

std::string fixture_path(const std::string& rel);

struct Loaded {
  std::shared_ptr<const SchemaContext> schema;
  std::shared_ptr<Relation> relation;
  std::shared_ptr<GeneratorSet> gens;
};

/// Loads <dir>/context.json and <dir>/relation.csv from the fixture tree.
Loaded load_fixture(const std::string& dir);
/// Reality file from the fixture tree, in threshold form.
Reality load_reality(const SchemaContext& ctx, const std::string& rel);

FiniteLattice chain(int n, const std::string& prefix = "c");
FiniteLattice diamond();

/// A lattice of at most max_size elements, built as an intersection-closed
/// family of subsets of a small ground set (plus the full set).
FiniteLattice random_lattice(Rng& rng, std::size_t max_size);

/// Equal -> top first, then a few pair_in_set rules over 1..domain mapping to
/// random elements, and an always rule to a random element.
AttributeContext random_attribute(Rng& rng, const std::string& name, std::size_t max_lattice,
                                  int domain);

std::shared_ptr<const SchemaContext> random_schema(Rng& rng, std::size_t attributes,
                                                   std::size_t max_lattice, int domain);

Relation random_relation(Rng& rng, std::shared_ptr<const SchemaContext> schema,
                         std::size_t tuples, int domain);

AbstractTuple random_tuple(Rng& rng, const SchemaContext& ctx);
Reality random_reality(Rng& rng, const SchemaContext& ctx);
AttributeSet random_subset(Rng& rng, std::size_t n, std::size_t max_size);

/// Random 3CNF without complementary literals inside a clause.
Cnf random_cnf(Rng& rng, int vars, int clauses);

/// The meet-closure of a set of tuples, computed naively from scratch.
std::vector<AbstractTuple> naive_meet_closure(const SchemaContext& ctx,
                                              std::vector<AbstractTuple> xs);

/// The code of the declcmp::Error thrown by f, or nullopt if none is thrown.
std::optional<ErrorCode> error_of(const std::function<void()>& f);

/// All classical FDs X -> A with |X| <= max_lhs, trivial ones included.
std::vector<ClassicalFD> all_fds(std::size_t n, std::size_t max_lhs);

} // namespace testing
