#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "declcmp/serialize.hpp"
#include "support.hpp"

using namespace declcmp;
using testing::error_of;
using testing::Rng;

namespace {

Json fixture_json(const std::string& rel) {
  std::ifstream in(testing::fixture_path(rel));
  return Json::parse(in);
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

} // namespace

TEST_CASE("context round trip") {
  for (const char* dir : {"running_example", "non_closure", "no_coprimes", "separation"}) {
    auto ctx = context_from_json(fixture_json(std::string(dir) + "/context.json"));
    auto doc = context_to_json(*ctx);
    auto back = context_from_json(doc);
    CHECK(context_to_json(*back) == doc);
    REQUIRE(back->size() == ctx->size());
    for (std::size_t a = 0; a < ctx->size(); ++a) {
      CHECK(back->attribute(a).name == ctx->attribute(a).name);
      CHECK(back->lattice(a).size() == ctx->lattice(a).size());
      CHECK(back->attribute(a).rules.size() == ctx->attribute(a).rules.size());
    }
  }
}

TEST_CASE("round trip preserves comparisons") {
  Rng rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    auto schema = testing::random_schema(rng, 3, 6, 4);
    auto r = testing::random_relation(rng, schema, 6, 4);
    auto back = context_from_json(Json::parse(context_to_json(*schema).dump()));
    for (const auto& t1 : r.tuples())
      for (const auto& t2 : r.tuples())
        CHECK(compare_tuples(*schema, t1.values, t2.values) == compare_tuples(*back, t1.values, t2.values));
  }
}

TEST_CASE("every predicate kind parses") {
  auto doc = Json::parse(R"({"attributes": [{"name": "X",
    "lattice": {"elements": ["0", "m", "1"], "covers": [["0", "m"], ["m", "1"]]},
    "rules": [
      {"predicate": "equal", "result": "1"},
      {"predicate": "equal_non_null", "result": "1"},
      {"predicate": "both_null", "result": "m"},
      {"predicate": "either_null", "result": "0"},
      {"predicate": "both_in_interval", "interval": {"lo": 0, "hi": 10, "hi_closed": false}, "result": "m"},
      {"predicate": "cross_intervals", "first": {"hi": 0}, "second": {"lo": 10}, "result": "0"},
      {"predicate": "abs_diff_leq", "delta": "0.5", "result": "m"},
      {"predicate": "pair_in_set", "pairs": [["a", "b"], [1, null]], "result": "m"},
      {"predicate": "always", "result": "0"}]}]})");
  auto ctx = context_from_json(doc);
  const auto& a = ctx->attribute(0);
  auto name = [&](const char* u, const char* v) {
    return ctx->lattice(0).name(compare_values(a, Value::parse_cell(u), Value::parse_cell(v)));
  };
  CHECK(name("3", "7") == "m");
  CHECK(name("3", "10") == "0");
  CHECK(name("-1", "12") == "0");
  CHECK(name("10.2", "10.6") == "m");
  CHECK(name("b", "a") == "m");
  CHECK(name("x", "y") == "0");
  CHECK(context_from_json(context_to_json(*ctx))->attribute(0).rules.size() == 9);
}

TEST_CASE("malformed context documents") {
  auto bad = [](const char* text) {
    return error_of([&] { context_from_json(Json::parse(text)); });
  };
  CHECK(bad(R"({})") == ErrorCode::ParseError);
  CHECK(bad(R"({"attributes": [{"name": "X"}]})") == ErrorCode::ParseError);
  CHECK(bad(R"({"attributes": [{"name": "X", "lattice": {"elements": ["0", "1"], "covers": [["0", "1"]]},
      "rules": [{"predicate": "sometimes", "result": "1"}]}]})") == ErrorCode::ParseError);
  CHECK(bad(R"({"attributes": [{"name": "X", "lattice": {"elements": ["0", "1"], "covers": [["0", "1"]]},
      "rules": [{"predicate": "always", "result": "2"}]}]})") == ErrorCode::UnknownElement);
  CHECK(bad(R"({"attributes": [{"name": "X", "lattice": {"elements": ["0", "a", "b"],
      "covers": [["0", "a"], ["0", "b"]]}, "rules": [{"predicate": "always", "result": "0"}]}]})") ==
        ErrorCode::NoUniqueTop);
}

TEST_CASE("validation from the document") {
  auto doc = Json::parse(R"({"attributes": [
    {"name": "X", "lattice": {"elements": ["0", "a", "b"], "covers": [["0", "a"], ["0", "b"]]},
     "rules": [{"predicate": "always", "result": "0"}]},
    {"name": "Y", "lattice": {"elements": ["0", "1"], "covers": [["0", "1"]]},
     "rules": [{"predicate": "always", "result": "1"}]},
    {"name": "Z", "lattice": {"elements": [], "covers": []}, "rules": []}]})");
  auto r = validate_context_json(doc);
  CHECK_FALSE(r.ok());
  auto invalid = std::count_if(r.issues.begin(), r.issues.end(), [](const auto& i) {
    return i.kind == ValidationIssue::Kind::InvalidLattice;
  });
  CHECK(invalid == 2);
  bool names_code = std::any_of(r.issues.begin(), r.issues.end(), [](const auto& i) {
    return i.attribute == "X" && i.message.rfind("NoUniqueTop", 0) == 0;
  });
  CHECK(names_code);
  CHECK(validate_context_json(fixture_json("running_example/context.json")).ok());
  CHECK(error_of([] { validate_context_json(Json::parse("[]")); }) == ErrorCode::ParseError);
}

TEST_CASE("reality documents") {
  auto fx = testing::load_fixture("running_example");
  const auto& ctx = *fx.schema;
  auto g0 = reality_from_json(ctx, fixture_json("running_example/g0.json"));
  REQUIRE(std::holds_alternative<Reality>(g0));
  CHECK(ctx.format_tuple(std::get<Reality>(g0).thresholds()) == "gb,t,u");
  CHECK(reality_from_json(ctx, reality_to_json(ctx, g0)) == g0);

  AnyReality s = StrongReality(ctx, ctx.parse_tuple("u,t,c"));
  auto doc = reality_to_json(ctx, s);
  CHECK(doc.contains("coprimes"));
  CHECK(reality_from_json(ctx, doc) == s);
  CHECK(as_reality(ctx, s).thresholds() == ctx.parse_tuple("u,t,c"));

  auto bad = [&](const char* text) { return error_of([&] { reality_from_json(ctx, Json::parse(text)); }); };
  CHECK(bad(R"({"thresholds": {"A": "g", "B": "t"}})") == ErrorCode::ParseError);
  CHECK(bad(R"({"thresholds": {"A": "b", "B": "t", "C": "c"}})") == ErrorCode::InvalidThreshold);
  CHECK(bad(R"({"coprimes": {"A": "g", "B": "t", "C": "c"}})") == ErrorCode::InvalidThreshold);
  CHECK(bad(R"({"thresholds": {"A": "zz", "B": "t", "C": "c"}})") == ErrorCode::UnknownElement);
  CHECK(bad(R"({"levels": {}})") == ErrorCode::ParseError);
}

TEST_CASE("verdict round trip") {
  auto fx = testing::load_fixture("running_example");
  const auto& ctx = *fx.schema;
  ClassicalFD fd{ctx.parse_attributes("B,C"), 0};
  for (auto p : {Problem::Certain, Problem::StronglyCertain, Problem::Possible, Problem::StronglyPossible}) {
    auto v = decide(p, *fx.gens, fd);
    auto back = verdict_from_json(ctx, verdict_to_json(ctx, v));
    CHECK(back.problem == v.problem);
    CHECK(back.answer == v.answer);
    CHECK(back.witness == v.witness);
    CHECK(back.counterexample == v.counterexample);
    CHECK(back.stats.generators == v.stats.generators);
    CHECK(back.stats.nodes_explored == v.stats.nodes_explored);
  }
  auto j = verdict_to_json(ctx, certain_fd(*fx.gens, fd));
  CHECK(j["problem"] == "certain");
  CHECK(j["counterexample"].is_string());
  j["problem"] = "probable";
  CHECK(error_of([&] { verdict_from_json(ctx, j); }) == ErrorCode::ParseError);
  CHECK(error_of([&] { verdict_from_json(ctx, Json::object()); }) == ErrorCode::ParseError);
}

TEST_CASE("dot export") {
  auto one = FiniteLattice::build_from_covers(std::vector<std::string>{"x"}, {});
  auto dot1 = to_dot(one, "One");
  CHECK(dot1.rfind("digraph \"One\" {", 0) == 0);
  CHECK(count_of(dot1, "[label=") == 1);
  CHECK(count_of(dot1, "->") == 0);

  auto dot4 = to_dot(testing::diamond());
  CHECK(count_of(dot4, "[label=") == 4);
  CHECK(count_of(dot4, "->") == 4);
  CHECK(dot4.find("rankdir=BT") != std::string::npos);

  auto fx = testing::load_fixture("running_example");
  auto L = materialize(*fx.gens);
  auto dot = to_dot(L);
  CHECK(count_of(dot, "[label=") == L.size());
  CHECK(count_of(dot, "->") == L.cover_edges().size());
  CHECK(dot.find("\"⟨gb,d,u⟩\"") != std::string::npos);
}
