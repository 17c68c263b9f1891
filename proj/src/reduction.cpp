#include "declcmp/reduction.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "declcmp/error.hpp"

namespace declcmp {

void check_cnf(const Cnf& cnf) {
  if (cnf.num_vars < 0) throw Error(ErrorCode::MalformedClause, "negative variable count");
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    const auto& c = cnf.clauses[j];
    for (std::size_t k = 0; k < 3; ++k) {
      if (c[k] == 0 || std::abs(c[k]) > cnf.num_vars)
        throw Error(ErrorCode::MalformedClause,
                    "clause " + std::to_string(j + 1) + ": variable out of range");
      for (std::size_t l = k + 1; l < 3; ++l)
        if (c[k] == -c[l])
          throw Error(ErrorCode::MalformedClause,
                      "clause " + std::to_string(j + 1) + " contains x" +
                          std::to_string(std::abs(c[k])) + " and its negation");
    }
  }
}

Cnf parse_dimacs(std::istream& in) {
  Cnf cnf;
  bool have_header = false;
  std::size_t declared = 0;
  std::vector<int> pending;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string fmt;
      long long vars = -1;
      long long count = -1;
      if (have_header || !(ls >> fmt >> vars >> count) || fmt != "cnf" || vars < 0 || count < 0)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad problem line");
      cnf.num_vars = static_cast<int>(vars);
      declared = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }
    if (!have_header)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": clause before problem line");
    do {
      std::size_t used = 0;
      int lit = 0;
      try {
        lit = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": bad literal '" + tok + "'");
      if (lit != 0) {
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3)
        throw Error(ErrorCode::MalformedClause, "clause " + std::to_string(cnf.clauses.size() + 1) +
                                                    " has " + std::to_string(pending.size()) +
                                                    " literals, expected 3");
      cnf.clauses.push_back({pending[0], pending[1], pending[2]});
      pending.clear();
    } while (ls >> tok);
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing problem line");
  if (!pending.empty()) throw Error(ErrorCode::MalformedClause, "last clause is not terminated by 0");
  if (cnf.clauses.size() != declared)
    throw Error(ErrorCode::ParseError, "problem line declares " + std::to_string(declared) +
                                           " clauses, found " + std::to_string(cnf.clauses.size()));
  check_cnf(cnf);
  return cnf;
}

void write_dimacs(const Cnf& cnf, std::ostream& out) {
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
}

namespace {

std::string attr_name(int i) { return "A" + std::to_string(i); }
std::string pos_name(int i) { return "a" + std::to_string(i); }
std::string neg_name(int i) { return "na" + std::to_string(i); }

} // namespace

ReductionInstance reduce_3sat(const Cnf& cnf) {
  check_cnf(cnf);
  const int n = cnf.num_vars;
  std::vector<AttributeContext> attrs;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::string> els{"bot", pos_name(i), neg_name(i), "top"};
    std::vector<std::pair<std::string, std::string>> covers{
        {"bot", pos_name(i)}, {"bot", neg_name(i)}, {pos_name(i), "top"}, {neg_name(i), "top"}};
    auto L = FiniteLattice::build_from_covers(els, covers);
    std::vector<ComparabilityRule> rules{
        {pred::Equal{}, L.top()},
        {pred::AbsDiffLeq{Decimal::from_int(1)}, L.id(pos_name(i))},
        {pred::AbsDiffLeq{Decimal::from_int(2)}, L.id(neg_name(i))},
        {pred::Always{}, L.bottom()}};
    attrs.push_back({attr_name(i), std::move(L), std::move(rules)});
  }
  {
    std::vector<std::string> els{"bot", "top"};
    std::vector<std::pair<std::string, std::string>> covers{{"bot", "top"}};
    auto L = FiniteLattice::build_from_covers(els, covers);
    std::vector<ComparabilityRule> rules{{pred::Equal{}, L.top()},
                                         {pred::AbsDiffLeq{Decimal::from_int(1)}, L.bottom()},
                                         {pred::Always{}, L.top()}};
    attrs.push_back({attr_name(n + 1), std::move(L), std::move(rules)});
  }
  auto schema = std::make_shared<const SchemaContext>(std::move(attrs));

  std::vector<Tuple> tuples;
  for (std::size_t idx = 0; idx < cnf.clauses.size(); ++idx) {
    const auto j = static_cast<std::int64_t>(idx + 1);
    Tuple t, u;
    t.values.reserve(n + 1);
    u.values.reserve(n + 1);
    for (int i = 1; i <= n; ++i) {
      std::int64_t first = 3 * j;
      std::int64_t second = 3 * j;
      for (int lit : cnf.clauses[idx]) {
        if (lit == i) first = 3 * j - 2;
        if (lit == -i) first = 3 * j - 2, second = 3 * j - 1;
      }
      t.values.push_back(Value::number(first));
      u.values.push_back(Value::number(second));
    }
    t.values.push_back(Value::number(3 * j - 1));
    u.values.push_back(Value::number(3 * j));
    t.row_id = tuples.size();
    tuples.push_back(std::move(t));
    u.row_id = tuples.size();
    tuples.push_back(std::move(u));
  }

  ClassicalFD fd{AttributeSet(static_cast<std::size_t>(n) + 1), static_cast<std::size_t>(n)};
  for (int i = 0; i < n; ++i) fd.lhs.insert(static_cast<std::size_t>(i));
  Relation rel(schema, std::move(tuples));
  return ReductionInstance{std::move(schema), std::move(rel), std::move(fd)};
}

StrongReality assignment_to_strong_reality(const ReductionInstance& inst,
                                           const std::vector<bool>& assignment) {
  const auto& ctx = *inst.schema;
  const std::size_t n = ctx.size() - 1;
  if (assignment.size() != n)
    throw Error(ErrorCode::ArityMismatch, "assignment size does not match the variable count");
  AbstractTuple choice(std::vector<ElementId>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<int>(i + 1);
    choice[i] = ctx.lattice(i).id(assignment[i] ? pos_name(v) : neg_name(v));
  }
  choice[n] = ctx.lattice(n).top();
  return StrongReality(ctx, std::move(choice));
}

std::vector<bool> strong_reality_to_assignment(const ReductionInstance& inst,
                                               const StrongReality& s) {
  const auto& ctx = *inst.schema;
  const std::size_t n = ctx.size() - 1;
  const auto& c = s.coprime_choice();
  if (c.size() != n + 1) throw Error(ErrorCode::ArityMismatch, "strong reality arity mismatch");
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& name = ctx.lattice(i).name(c[i]);
    const auto v = static_cast<int>(i + 1);
    if (name == pos_name(v))
      out[i] = true;
    else if (name == neg_name(v))
      out[i] = false;
    else
      throw Error(ErrorCode::InvalidThreshold, "choice for " + ctx.name(i) + " is not a literal");
  }
  if (c[n] != ctx.lattice(n).top())
    throw Error(ErrorCode::InvalidThreshold, "choice for " + ctx.name(n) + " must be top");
  return out;
}

bool satisfies(const Cnf& cnf, const std::vector<bool>& assignment) {
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (int lit : c) {
      auto v = static_cast<std::size_t>(std::abs(lit) - 1);
      if (v < assignment.size() && assignment[v] == (lit > 0)) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

} // namespace declcmp
