#pragma once

#include <array>
#include <istream>
#include <memory>
#include <vector>

#include "declcmp/decision.hpp"
#include "declcmp/relation.hpp"

namespace declcmp {

/// A 3CNF formula. Literals are DIMACS style: +i is x_i, -i is its negation,
/// variables are numbered 1..num_vars.
struct Cnf {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// Reads DIMACS CNF ("c" comments, one "p cnf <vars> <clauses>" line, clauses
/// terminated by 0, possibly spanning lines). Throws ParseError on syntax and
/// MalformedClause when a clause does not have exactly three literals, mentions
/// a variable out of range, or contains a literal and its negation.
Cnf parse_dimacs(std::istream& in);
void write_dimacs(const Cnf& cnf, std::ostream& out);

/// Throws MalformedClause on the conditions listed for parse_dimacs.
void check_cnf(const Cnf& cnf);

/// Schema, relation and FD whose strong possibility is equivalent to the
/// satisfiability of the formula.
///
/// Attributes A1..An take the lattice {bot < a_i, na_i < top} and compare
/// integers as top if equal, a_i at distance 1, na_i at distance 2, bot
/// otherwise. The last attribute uses {bot < top}, with bot exactly at
/// distance 1. Clause j contributes two tuples; the FD is {A1..An} -> A(n+1).
struct ReductionInstance {
  std::shared_ptr<const SchemaContext> schema;
  Relation relation;
  ClassicalFD fd;
};

ReductionInstance reduce_3sat(const Cnf& cnf);

/// x_i true picks a_i, false picks na_i; the last attribute picks top.
StrongReality assignment_to_strong_reality(const ReductionInstance& inst,
                                           const std::vector<bool>& assignment);
/// Inverse of assignment_to_strong_reality. Throws InvalidThreshold when the
/// strong reality does not come from an assignment.
std::vector<bool> strong_reality_to_assignment(const ReductionInstance& inst,
                                               const StrongReality& s);

/// True when every clause has a true literal. `assignment[i]` is x_{i+1}.
bool satisfies(const Cnf& cnf, const std::vector<bool>& assignment);

} // namespace declcmp
