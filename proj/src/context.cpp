#include "declcmp/context.hpp"

#include <algorithm>
#include <unordered_set>

#include "declcmp/error.hpp"

namespace declcmp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

bool same_unordered(const std::pair<Value, Value>& p, const Value& u, const Value& v) {
  return (p.first == u && p.second == v) || (p.first == v && p.second == u);
}

// Whether every pair matched by `later` is also matched by `earlier`.
bool subsumes(const Predicate& earlier, const Predicate& later) {
  if (std::holds_alternative<pred::Always>(earlier)) return true;
  return std::visit(
      overloaded{
          [](const pred::Equal&, const pred::Equal&) { return true; },
          [](const pred::Equal&, const pred::EqualNonNull&) { return true; },
          [](const pred::Equal&, const pred::BothNull&) { return true; },
          [](const pred::EqualNonNull&, const pred::EqualNonNull&) { return true; },
          [](const pred::EitherNull&, const pred::EitherNull&) { return true; },
          [](const pred::EitherNull&, const pred::BothNull&) { return true; },
          [](const pred::BothNull&, const pred::BothNull&) { return true; },
          [](const pred::BothInInterval& a, const pred::BothInInterval& b) {
            return b.interval.subset_of(a.interval);
          },
          [](const pred::CrossIntervals& a, const pred::CrossIntervals& b) {
            return (b.first.subset_of(a.first) && b.second.subset_of(a.second)) ||
                   (b.first.subset_of(a.second) && b.second.subset_of(a.first));
          },
          [](const pred::AbsDiffLeq& a, const pred::AbsDiffLeq& b) { return b.delta <= a.delta; },
          [](const pred::PairInSet& a, const pred::PairInSet& b) {
            return std::all_of(b.pairs.begin(), b.pairs.end(), [&](const auto& p) {
              return std::any_of(a.pairs.begin(), a.pairs.end(),
                                 [&](const auto& q) { return same_unordered(q, p.first, p.second); });
            });
          },
          [](const auto&, const auto&) { return false; },
      },
      earlier, later);
}

bool never_matches(const Predicate& p) {
  return std::visit(overloaded{
                        [](const pred::BothInInterval& b) { return b.interval.empty(); },
                        [](const pred::CrossIntervals& c) { return c.first.empty() || c.second.empty(); },
                        [](const pred::PairInSet& s) { return s.pairs.empty(); },
                        [](const auto&) { return false; },
                    },
                    p);
}

} // namespace

bool Interval::contains(const Value& v) const {
  if (!v.is_number()) return false;
  const auto& x = v.as_number();
  if (lo && (lo_closed ? x < *lo : x <= *lo)) return false;
  if (hi && (hi_closed ? x > *hi : x >= *hi)) return false;
  return true;
}

bool Interval::empty() const {
  if (!lo || !hi) return false;
  if (*lo > *hi) return true;
  return *lo == *hi && !(lo_closed && hi_closed);
}

bool Interval::subset_of(const Interval& o) const {
  if (empty()) return true;
  bool lower_ok = !o.lo || (lo && (*o.lo < *lo || (*o.lo == *lo && (o.lo_closed || !lo_closed))));
  bool upper_ok = !o.hi || (hi && (*hi < *o.hi || (*hi == *o.hi && (o.hi_closed || !hi_closed))));
  return lower_ok && upper_ok;
}

bool matches(const Predicate& p, const Value& u, const Value& v) {
  return std::visit(
      overloaded{
          [&](const pred::Equal&) { return u == v; },
          [&](const pred::EqualNonNull&) { return u == v && !u.is_null(); },
          [&](const pred::BothInInterval& b) { return b.interval.contains(u) && b.interval.contains(v); },
          [&](const pred::CrossIntervals& c) {
            return (c.first.contains(u) && c.second.contains(v)) ||
                   (c.first.contains(v) && c.second.contains(u));
          },
          [&](const pred::EitherNull&) { return u.is_null() || v.is_null(); },
          [&](const pred::BothNull&) { return u.is_null() && v.is_null(); },
          [&](const pred::AbsDiffLeq& d) {
            return u.is_number() && v.is_number() && abs_diff(u.as_number(), v.as_number()) <= d.delta;
          },
          [&](const pred::PairInSet& s) {
            return std::any_of(s.pairs.begin(), s.pairs.end(),
                               [&](const auto& p) { return same_unordered(p, u, v); });
          },
          [&](const pred::Always&) { return true; },
      },
      p);
}

std::string predicate_name(const Predicate& p) {
  return std::visit(overloaded{
                        [](const pred::Equal&) { return std::string("equal"); },
                        [](const pred::EqualNonNull&) { return std::string("equal_non_null"); },
                        [](const pred::BothInInterval&) { return std::string("both_in_interval"); },
                        [](const pred::CrossIntervals&) { return std::string("cross_intervals"); },
                        [](const pred::EitherNull&) { return std::string("either_null"); },
                        [](const pred::BothNull&) { return std::string("both_null"); },
                        [](const pred::AbsDiffLeq&) { return std::string("abs_diff_leq"); },
                        [](const pred::PairInSet&) { return std::string("pair_in_set"); },
                        [](const pred::Always&) { return std::string("always"); },
                    },
                    p);
}

SchemaContext::SchemaContext(std::vector<AttributeContext> attributes)
    : attributes_(std::move(attributes)) {
  std::unordered_set<std::string> seen;
  for (const auto& a : attributes_) {
    if (a.name.empty()) throw Error(ErrorCode::ParseError, "attribute with empty name");
    if (!seen.insert(a.name).second)
      throw Error(ErrorCode::DuplicateAttribute, "duplicate attribute '" + a.name + "'");
    for (const auto& r : a.rules)
      if (r.result >= a.lattice.size())
        throw Error(ErrorCode::UnknownElement,
                    "rule result outside the truth lattice of '" + a.name + "'");
  }
}

std::optional<std::size_t> SchemaContext::find(std::string_view name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i].name == name) return i;
  return std::nullopt;
}

std::size_t SchemaContext::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::UnknownAttribute, "unknown attribute '" + std::string(name) + "'");
}

AbstractTuple SchemaContext::top_vector() const {
  AbstractTuple t;
  for (const auto& a : attributes_) t.coords.push_back(a.lattice.top());
  return t;
}

AbstractTuple SchemaContext::bottom_vector() const {
  AbstractTuple t;
  for (const auto& a : attributes_) t.coords.push_back(a.lattice.bottom());
  return t;
}

AbstractTuple SchemaContext::parse_tuple(std::string_view text) const {
  auto parts = split_commas(text);
  if (parts.size() != size())
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(size()) +
                                              " truth values, got " + std::to_string(parts.size()));
  AbstractTuple t;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto id = lattice(i).find(parts[i]);
    if (!id)
      throw Error(ErrorCode::UnknownElement,
                  "'" + parts[i] + "' is not an element of the truth lattice of '" + name(i) + "'");
    t.coords.push_back(*id);
  }
  return t;
}

std::string SchemaContext::format_tuple(const AbstractTuple& t) const {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += lattice(i).name(t[i]);
  }
  return s;
}

AttributeSet SchemaContext::parse_attributes(std::string_view text) const {
  AttributeSet s(size());
  if (text.find_first_not_of(" \t") == std::string_view::npos) return s;
  for (const auto& n : split_commas(text)) s.insert(index_of(n));
  return s;
}

std::string SchemaContext::format_attributes(const AttributeSet& s) const {
  std::string out;
  for (auto a : s.members()) {
    if (!out.empty()) out += ',';
    out += name(a);
  }
  return out;
}

ElementId compare_values(const AttributeContext& ctx, const Value& u, const Value& v) {
  for (const auto& rule : ctx.rules) {
    if (!matches(rule.predicate, u, v)) continue;
    if (u == v && !u.is_null() && rule.result != ctx.lattice.top())
      throw Error(ErrorCode::ReflexivityViolation,
                  "attribute '" + ctx.name + "' maps equal values " + u.to_string() + " to '" +
                      ctx.lattice.name(rule.result) + "' instead of the top element");
    return rule.result;
  }
  throw Error(ErrorCode::NotTotal, "no rule of attribute '" + ctx.name + "' matches (" +
                                       u.to_string() + ", " + v.to_string() + ")");
}

AbstractTuple compare_tuples(const SchemaContext& ctx, std::span<const Value> t1,
                             std::span<const Value> t2) {
  if (t1.size() != ctx.size() || t2.size() != ctx.size())
    throw Error(ErrorCode::ArityMismatch, "tuple arity does not match the schema");
  AbstractTuple out;
  out.coords.reserve(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i)
    out.coords.push_back(compare_values(ctx.attribute(i), t1[i], t2[i]));
  return out;
}

std::string_view to_string(ValidationIssue::Kind kind) noexcept {
  using K = ValidationIssue::Kind;
  switch (kind) {
    case K::LatticeValid: return "LatticeValid";
    case K::InvalidLattice: return "InvalidLattice";
    case K::DegenerateLattice: return "DegenerateLattice";
    case K::NotTotal: return "NotTotal";
    case K::UnreachableRule: return "UnreachableRule";
    case K::Surjectivity: return "SurjectivityWarning";
  }
  return "Unknown";
}

std::string_view to_string(ValidationIssue::Severity s) noexcept {
  using S = ValidationIssue::Severity;
  switch (s) {
    case S::Info: return "info";
    case S::Warning: return "warning";
    case S::Fatal: return "fatal";
  }
  return "unknown";
}

bool ValidationReport::ok() const {
  return std::none_of(issues.begin(), issues.end(), [](const auto& i) {
    return i.severity == ValidationIssue::Severity::Fatal;
  });
}

std::size_t ValidationReport::warning_count() const {
  return static_cast<std::size_t>(std::count_if(issues.begin(), issues.end(), [](const auto& i) {
    return i.severity == ValidationIssue::Severity::Warning;
  }));
}

ValidationReport validate_context(const SchemaContext& ctx) {
  using S = ValidationIssue::Severity;
  using K = ValidationIssue::Kind;
  ValidationReport report;
  for (const auto& a : ctx.attributes()) {
    const auto& L = a.lattice;
    report.issues.push_back({S::Info, K::LatticeValid, a.name,
                             std::to_string(L.size()) + " elements, bottom '" + L.name(L.bottom()) +
                                 "', top '" + L.name(L.top()) + "'"});
    if (L.size() < 2)
      report.issues.push_back({S::Fatal, K::DegenerateLattice, a.name,
                               "a one-element truth lattice admits no interpretation"});

    bool total = std::any_of(a.rules.begin(), a.rules.end(), [](const auto& r) {
      return std::holds_alternative<pred::Always>(r.predicate);
    });
    if (!total)
      report.issues.push_back({S::Fatal, K::NotTotal, a.name, "rule list has no 'always' rule"});

    std::vector<bool> produced(L.size(), false);
    for (std::size_t j = 0; j < a.rules.size(); ++j) {
      const auto& rule = a.rules[j];
      bool shadowed = never_matches(rule.predicate);
      for (std::size_t i = 0; i < j && !shadowed; ++i)
        shadowed = subsumes(a.rules[i].predicate, rule.predicate);
      if (shadowed) {
        report.issues.push_back({S::Warning, K::UnreachableRule, a.name,
                                 "rule " + std::to_string(j + 1) + " (" +
                                     predicate_name(rule.predicate) + ") can never match"});
      } else {
        produced[rule.result] = true;
      }
    }
    for (ElementId x = 0; x < L.size(); ++x)
      if (!produced[x])
        report.issues.push_back({S::Warning, K::Surjectivity, a.name,
                                 "no rule produces '" + L.name(x) + "'"});
  }
  return report;
}

} // namespace declcmp
