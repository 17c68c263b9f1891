#include "declcmp/serialize.hpp"

#include <sstream>

#include "declcmp/error.hpp"

namespace declcmp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void shape_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, "context document: " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) shape_error(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) shape_error(where + " is missing '" + key + "'");
  return *it;
}

std::string string_field(const Json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_string()) shape_error(where + "." + key + " must be a string");
  return v.get<std::string>();
}

Decimal decimal_from_json(const Json& j, const std::string& where) {
  std::optional<Decimal> d;
  if (j.is_number_integer() || j.is_number_unsigned() || j.is_number_float())
    d = Decimal::parse(j.dump());
  else if (j.is_string())
    d = Decimal::parse(j.get<std::string>());
  if (!d) shape_error(where + " must be a decimal number, got " + j.dump());
  return *d;
}

Value value_from_json(const Json& j, const std::string& where) {
  if (j.is_null()) return Value();
  if (j.is_string()) return Value::parse_cell(j.get<std::string>());
  if (j.is_number()) return Value(decimal_from_json(j, where));
  shape_error(where + " must be a number, a string or null");
}

Json value_to_json(const Value& v) {
  if (v.is_null()) return nullptr;
  if (v.is_text()) return v.as_text();
  auto text = v.to_string();
  auto j = Json::parse(text, nullptr, false);
  // fall back to the string form when the JSON number would lose digits
  if (j.is_discarded() || !Decimal::parse(j.dump()) || *Decimal::parse(j.dump()) != v.as_number())
    return text;
  return j;
}

Interval interval_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) shape_error(where + " must be an object");
  Interval iv;
  if (auto it = j.find("lo"); it != j.end() && !it->is_null()) iv.lo = decimal_from_json(*it, where + ".lo");
  if (auto it = j.find("hi"); it != j.end() && !it->is_null()) iv.hi = decimal_from_json(*it, where + ".hi");
  if (auto it = j.find("lo_closed"); it != j.end()) {
    if (!it->is_boolean()) shape_error(where + ".lo_closed must be a boolean");
    iv.lo_closed = it->get<bool>();
  }
  if (auto it = j.find("hi_closed"); it != j.end()) {
    if (!it->is_boolean()) shape_error(where + ".hi_closed must be a boolean");
    iv.hi_closed = it->get<bool>();
  }
  return iv;
}

Json interval_to_json(const Interval& iv) {
  Json j = Json::object();
  j["lo"] = iv.lo ? value_to_json(Value(*iv.lo)) : Json(nullptr);
  j["hi"] = iv.hi ? value_to_json(Value(*iv.hi)) : Json(nullptr);
  j["lo_closed"] = iv.lo_closed;
  j["hi_closed"] = iv.hi_closed;
  return j;
}

Predicate predicate_from_json(const Json& rule, const std::string& where) {
  const auto name = string_field(rule, "predicate", where);
  if (name == "equal") return pred::Equal{};
  if (name == "equal_non_null") return pred::EqualNonNull{};
  if (name == "either_null") return pred::EitherNull{};
  if (name == "both_null") return pred::BothNull{};
  if (name == "always") return pred::Always{};
  if (name == "both_in_interval")
    return pred::BothInInterval{interval_from_json(field(rule, "interval", where), where + ".interval")};
  if (name == "cross_intervals")
    return pred::CrossIntervals{interval_from_json(field(rule, "first", where), where + ".first"),
                                interval_from_json(field(rule, "second", where), where + ".second")};
  if (name == "abs_diff_leq")
    return pred::AbsDiffLeq{decimal_from_json(field(rule, "delta", where), where + ".delta")};
  if (name == "pair_in_set") {
    const auto& pairs = field(rule, "pairs", where);
    if (!pairs.is_array()) shape_error(where + ".pairs must be an array");
    pred::PairInSet p;
    for (const auto& pr : pairs) {
      if (!pr.is_array() || pr.size() != 2) shape_error(where + ".pairs entries must be [u, v]");
      p.pairs.emplace_back(value_from_json(pr[0], where + ".pairs"),
                           value_from_json(pr[1], where + ".pairs"));
    }
    return p;
  }
  shape_error(where + ": unknown predicate '" + name + "'");
}

Json predicate_to_json(const Predicate& p) {
  Json j = Json::object();
  j["predicate"] = predicate_name(p);
  std::visit(overloaded{
                 [&](const pred::BothInInterval& b) { j["interval"] = interval_to_json(b.interval); },
                 [&](const pred::CrossIntervals& c) {
                   j["first"] = interval_to_json(c.first);
                   j["second"] = interval_to_json(c.second);
                 },
                 [&](const pred::AbsDiffLeq& d) { j["delta"] = value_to_json(Value(d.delta)); },
                 [&](const pred::PairInSet& s) {
                   Json pairs = Json::array();
                   for (const auto& [u, v] : s.pairs)
                     pairs.push_back(Json::array({value_to_json(u), value_to_json(v)}));
                   j["pairs"] = std::move(pairs);
                 },
                 [](const auto&) {},
             },
             p);
  return j;
}

const Json& attribute_list(const Json& doc) {
  const auto& attrs = field(doc, "attributes", "document");
  if (!attrs.is_array()) shape_error("'attributes' must be an array");
  return attrs;
}

FiniteLattice lattice_from_json(const Json& attr, const std::string& where) {
  const auto& lat = field(attr, "lattice", where);
  const auto& els = field(lat, "elements", where + ".lattice");
  const auto& covers = field(lat, "covers", where + ".lattice");
  if (!els.is_array() || !covers.is_array()) shape_error(where + ".lattice fields must be arrays");
  std::vector<std::string> names;
  for (const auto& e : els) {
    if (!e.is_string()) shape_error(where + ".lattice.elements must be strings");
    names.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      shape_error(where + ".lattice.covers entries must be [lower, upper]");
    pairs.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return FiniteLattice::build_from_covers(names, pairs);
}

std::string attribute_where(const Json& attr, std::size_t i) {
  if (attr.is_object())
    if (auto it = attr.find("name"); it != attr.end() && it->is_string())
      return "attribute '" + it->get<std::string>() + "'";
  return "attribute #" + std::to_string(i + 1);
}

} // namespace

std::shared_ptr<const SchemaContext> context_from_json(const Json& doc) {
  const auto& attrs = attribute_list(doc);
  std::vector<AttributeContext> out;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    const auto& a = attrs[i];
    const auto where = attribute_where(a, i);
    AttributeContext ac{string_field(a, "name", where), lattice_from_json(a, where), {}};
    const auto& rules = field(a, "rules", where);
    if (!rules.is_array()) shape_error(where + ".rules must be an array");
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const auto rw = where + " rule " + std::to_string(r + 1);
      auto p = predicate_from_json(rules[r], rw);
      ac.rules.push_back({std::move(p), ac.lattice.id(string_field(rules[r], "result", rw))});
    }
    out.push_back(std::move(ac));
  }
  return std::make_shared<const SchemaContext>(std::move(out));
}

std::shared_ptr<const SchemaContext> load_context(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("context document: ") + e.what());
  }
  return context_from_json(doc);
}

Json context_to_json(const SchemaContext& ctx) {
  Json attrs = Json::array();
  for (const auto& a : ctx.attributes()) {
    Json covers = Json::array();
    for (auto [lo, hi] : a.lattice.covers())
      covers.push_back(Json::array({a.lattice.name(lo), a.lattice.name(hi)}));
    Json rules = Json::array();
    for (const auto& r : a.rules) {
      auto j = predicate_to_json(r.predicate);
      j["result"] = a.lattice.name(r.result);
      rules.push_back(std::move(j));
    }
    attrs.push_back({{"name", a.name},
                     {"lattice", {{"elements", a.lattice.names()}, {"covers", std::move(covers)}}},
                     {"rules", std::move(rules)}});
  }
  return {{"attributes", std::move(attrs)}};
}

ValidationReport validate_context_json(const Json& doc) {
  const auto& attrs = attribute_list(doc);
  ValidationReport report;
  bool broken = false;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    const auto where = attribute_where(attrs[i], i);
    const auto name = string_field(attrs[i], "name", where);
    try {
      auto L = lattice_from_json(attrs[i], where);
      report.issues.push_back({ValidationIssue::Severity::Info, ValidationIssue::Kind::LatticeValid,
                               name, std::to_string(L.size()) + "-element lattice"});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      broken = true;
      report.issues.push_back({ValidationIssue::Severity::Fatal, ValidationIssue::Kind::InvalidLattice,
                               name, std::string(to_string(e.code())) + ": " + e.what()});
    }
  }
  if (broken) return report;
  // all lattices build; let the context checks produce the full report
  return validate_context(*context_from_json(doc));
}

AnyReality reality_from_json(const SchemaContext& ctx, const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "reality document must be an object");
  const bool strong = doc.contains("coprimes");
  const char* key = strong ? "coprimes" : "thresholds";
  if (!doc.contains(key))
    throw Error(ErrorCode::ParseError, "reality document needs 'thresholds' or 'coprimes'");
  const auto& m = doc.at(key);
  if (!m.is_object()) throw Error(ErrorCode::ParseError, std::string("'") + key + "' must be an object");
  AbstractTuple t(std::vector<ElementId>(ctx.size()));
  std::vector<bool> seen(ctx.size(), false);
  for (const auto& [name, el] : m.items()) {
    auto a = ctx.index_of(name);
    if (!el.is_string())
      throw Error(ErrorCode::ParseError, "element for '" + name + "' must be a string");
    t[a] = ctx.lattice(a).id(el.get<std::string>());
    seen[a] = true;
  }
  for (std::size_t a = 0; a < ctx.size(); ++a)
    if (!seen[a]) throw Error(ErrorCode::ParseError, "reality does not list attribute '" + ctx.name(a) + "'");
  if (strong) return StrongReality(ctx, std::move(t));
  return Reality(ctx, std::move(t));
}

Json reality_to_json(const SchemaContext& ctx, const AnyReality& g) {
  const bool strong = std::holds_alternative<StrongReality>(g);
  const auto& t = strong ? std::get<StrongReality>(g).coprime_choice()
                         : std::get<Reality>(g).thresholds();
  Json m = Json::object();
  for (std::size_t a = 0; a < ctx.size(); ++a) m[ctx.name(a)] = ctx.lattice(a).name(t[a]);
  return {{strong ? "coprimes" : "thresholds", std::move(m)}};
}

Reality as_reality(const SchemaContext& ctx, const AnyReality& g) {
  if (auto s = std::get_if<StrongReality>(&g)) return s->as_reality(ctx);
  return std::get<Reality>(g);
}

Json verdict_to_json(const SchemaContext& ctx, const Verdict& v) {
  Json j = Json::object();
  j["problem"] = std::string(to_string(v.problem));
  j["answer"] = v.answer;
  if (v.witness) j["witness"] = reality_to_json(ctx, *v.witness);
  if (v.counterexample) j["counterexample"] = ctx.format_tuple(*v.counterexample);
  j["stats"] = {{"generators", v.stats.generators},
                {"closures_computed", v.stats.closures_computed},
                {"nodes_explored", v.stats.nodes_explored}};
  return j;
}

Verdict verdict_from_json(const SchemaContext& ctx, const Json& doc) {
  try {
    Verdict v;
    const auto problem = doc.at("problem").get<std::string>();
    bool known = false;
    for (auto p : {Problem::Certain, Problem::StronglyCertain, Problem::Possible,
                   Problem::StronglyPossible})
      if (to_string(p) == problem) {
        v.problem = p;
        known = true;
      }
    if (!known) throw Error(ErrorCode::ParseError, "unknown problem '" + problem + "'");
    v.answer = doc.at("answer").get<bool>();
    if (doc.contains("witness")) v.witness = reality_from_json(ctx, doc.at("witness"));
    if (doc.contains("counterexample"))
      v.counterexample = ctx.parse_tuple(doc.at("counterexample").get<std::string>());
    const auto& s = doc.at("stats");
    v.stats.generators = s.at("generators").get<std::uint64_t>();
    v.stats.closures_computed = s.at("closures_computed").get<std::uint64_t>();
    v.stats.nodes_explored = s.at("nodes_explored").get<std::uint64_t>();
    return v;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("verdict document: ") + e.what());
  }
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

template <class Label>
std::string emit_dot(const std::string& graph_name, std::size_t n, Label&& label,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::ostringstream out;
  out << "digraph " << dot_quote(graph_name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < n; ++i) out << "  n" << i << " [label=" << dot_quote(label(i)) << "];\n";
  for (auto [lo, hi] : edges) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace

std::string to_dot(const FiniteLattice& L, const std::string& graph_name) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [lo, hi] : L.covers()) edges.emplace_back(lo, hi);
  return emit_dot(graph_name, L.size(), [&](std::size_t i) { return L.name(static_cast<ElementId>(i)); },
                  edges);
}

std::string to_dot(const AbstractLattice& L, const std::string& graph_name) {
  const auto& ctx = L.schema();
  return emit_dot(
      graph_name, L.size(),
      [&](std::size_t i) { return "⟨" + ctx.format_tuple(L.elements()[i]) + "⟩"; },
      L.cover_edges());
}

} // namespace declcmp
