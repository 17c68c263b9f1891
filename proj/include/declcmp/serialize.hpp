#pragma once

#include <istream>
#include <memory>
#include <string>
#include <variant>

#include <json.hpp>

#include "declcmp/decision.hpp"

namespace declcmp {

using Json = nlohmann::json;

/// Schema-context document:
///
///   {"attributes": [{"name": "A",
///                    "lattice": {"elements": ["b", "u", "gb", "g"],
///                                "covers": [["b", "u"], ["b", "gb"], ...]},
///                    "rules": [{"predicate": "equal", "result": "g"}, ...]}]}
///
/// Predicates: equal, equal_non_null, either_null, both_null, always,
/// both_in_interval {interval}, cross_intervals {first, second},
/// abs_diff_leq {delta}, pair_in_set {pairs: [[u, v], ...]}. An interval is
/// {lo, hi, lo_closed, hi_closed}; a missing or null bound is unbounded and
/// ends default to closed. Rule values are typed like CSV cells.
///
/// Throws ParseError on shape errors and the lattice/context errors on
/// semantic ones.
std::shared_ptr<const SchemaContext> context_from_json(const Json& doc);
std::shared_ptr<const SchemaContext> load_context(std::istream& in);
Json context_to_json(const SchemaContext& ctx);

/// Like validate_context, but starts from the document so that every broken
/// lattice is reported (as a fatal InvalidLattice issue) instead of stopping
/// at the first one. Shape errors still throw ParseError.
ValidationReport validate_context_json(const Json& doc);

/// {"thresholds": {"A": "gb", ...}} or {"coprimes": {"A": "u", ...}}. Every
/// attribute must be listed.
using AnyReality = std::variant<Reality, StrongReality>;
AnyReality reality_from_json(const SchemaContext& ctx, const Json& doc);
Json reality_to_json(const SchemaContext& ctx, const AnyReality& g);
/// The threshold form of either kind.
Reality as_reality(const SchemaContext& ctx, const AnyReality& g);

/// {problem, answer, witness?, counterexample?, stats}. The witness uses the
/// reality document format, the counterexample the "x,y,z" tuple syntax.
Json verdict_to_json(const SchemaContext& ctx, const Verdict& v);
/// Throws ParseError on a malformed document.
Verdict verdict_from_json(const SchemaContext& ctx, const Json& doc);

/// Graphviz text; nodes are elements, edges go from lower to upper cover.
std::string to_dot(const FiniteLattice& L, const std::string& graph_name = "L");
std::string to_dot(const AbstractLattice& L, const std::string& graph_name = "Lr");

} // namespace declcmp
