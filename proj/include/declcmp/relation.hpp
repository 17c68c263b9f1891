#pragma once

#include <istream>
#include <memory>
#include <ostream>
#include <vector>

#include "declcmp/context.hpp"

namespace declcmp {

struct Tuple {
  std::vector<Value> values; ///< aligned with the schema attribute order
  std::size_t row_id = 0;    ///< 0-based data row in the source

  friend bool operator==(const Tuple&, const Tuple&) = default;
};

class Relation {
public:
  /// Throws ArityMismatch if a tuple does not conform to the schema.
  Relation(std::shared_ptr<const SchemaContext> schema, std::vector<Tuple> tuples);

  const SchemaContext& schema() const noexcept { return *schema_; }
  const std::shared_ptr<const SchemaContext>& schema_ptr() const noexcept { return schema_; }
  const std::vector<Tuple>& tuples() const noexcept { return tuples_; }
  std::size_t size() const noexcept { return tuples_.size(); }

private:
  std::shared_ptr<const SchemaContext> schema_;
  std::vector<Tuple> tuples_;
};

/// Reads comma-separated values with a header row. Header names must be a
/// permutation of the schema attributes; columns are reordered to schema
/// order. Cells are unquoted and trimmed, then typed by Value::parse_cell.
/// Throws HeaderMismatch or RaggedRow (with the 1-based line number).
Relation load_relation(std::shared_ptr<const SchemaContext> schema, std::istream& in);

/// Writes the relation back in schema column order. Reloading the output
/// yields an identical relation.
void write_relation(const Relation& r, std::ostream& out);

} // namespace declcmp
