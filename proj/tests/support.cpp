#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "declcmp/serialize.hpp"

namespace testing {

std::string fixture_path(const std::string& rel) { return std::string(DECLCMP_FIXTURES) + "/" + rel; }

Loaded load_fixture(const std::string& dir) {
  std::ifstream c(fixture_path(dir + "/context.json"));
  std::ifstream r(fixture_path(dir + "/relation.csv"));
  if (!c || !r) throw std::runtime_error("missing fixture " + dir);
  Loaded out;
  out.schema = load_context(c);
  out.relation = std::make_shared<Relation>(load_relation(out.schema, r));
  out.gens = std::make_shared<GeneratorSet>(generators(*out.relation));
  return out;
}

Reality load_reality(const SchemaContext& ctx, const std::string& rel) {
  std::ifstream in(fixture_path(rel));
  if (!in) throw std::runtime_error("missing fixture " + rel);
  return as_reality(ctx, reality_from_json(ctx, Json::parse(in)));
}

namespace {

FiniteLattice from_pairs(const std::vector<std::string>& names,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  return FiniteLattice::build_from_covers(names, covers);
}

} // namespace

FiniteLattice chain(int n, const std::string& prefix) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) {
    names.push_back(prefix + std::to_string(i));
    if (i) covers.emplace_back(names[i - 1], names[i]);
  }
  return from_pairs(names, covers);
}

FiniteLattice diamond() {
  return from_pairs({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

FiniteLattice random_lattice(Rng& rng, std::size_t max_size) {
  max_size = std::max<std::size_t>(max_size, 2);
  std::uniform_int_distribution<std::size_t> size_dist(2, max_size);
  const std::size_t target = size_dist(rng);
  const unsigned ground = 4;
  const unsigned full = (1U << ground) - 1;
  std::set<unsigned> family{full};
  std::uniform_int_distribution<unsigned> subset(0, full - 1);
  for (int attempt = 0; attempt < 64 && family.size() < target; ++attempt) {
    auto next = family;
    next.insert(subset(rng));
    // close under intersection
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto a : std::vector<unsigned>(next.begin(), next.end()))
        for (auto b : std::vector<unsigned>(next.begin(), next.end()))
          if (next.insert(a & b).second) grew = true;
    }
    if (next.size() <= target) family = std::move(next);
  }
  std::vector<unsigned> sets(family.begin(), family.end());
  std::shuffle(sets.begin(), sets.end(), rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sets.size(); ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers;
  auto below = [](unsigned a, unsigned b) { return a != b && (a & b) == a; };
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (!below(sets[i], sets[j])) continue;
      bool cover = std::none_of(sets.begin(), sets.end(), [&](unsigned z) {
        return below(sets[i], z) && below(z, sets[j]);
      });
      if (cover) covers.emplace_back(names[i], names[j]);
    }
  return from_pairs(names, covers);
}

AttributeContext random_attribute(Rng& rng, const std::string& name, std::size_t max_lattice,
                                  int domain) {
  auto L = random_lattice(rng, max_lattice);
  std::uniform_int_distribution<int> val(1, domain);
  std::uniform_int_distribution<int> el(0, static_cast<int>(L.size()) - 1);
  std::uniform_int_distribution<int> nrules(0, 4);
  std::vector<ComparabilityRule> rules{{pred::Equal{}, L.top()}};
  for (int r = nrules(rng); r > 0; --r) {
    pred::PairInSet p;
    for (int k = 1 + val(rng) % 2; k > 0; --k) p.pairs.emplace_back(Value::number(val(rng)), Value::number(val(rng)));
    rules.push_back({std::move(p), static_cast<ElementId>(el(rng))});
  }
  rules.push_back({pred::Always{}, static_cast<ElementId>(el(rng))});
  return AttributeContext{name, std::move(L), std::move(rules)};
}

std::shared_ptr<const SchemaContext> random_schema(Rng& rng, std::size_t attributes,
                                                   std::size_t max_lattice, int domain) {
  std::vector<AttributeContext> attrs;
  for (std::size_t a = 0; a < attributes; ++a)
    attrs.push_back(random_attribute(rng, std::string(1, static_cast<char>('A' + a)), max_lattice, domain));
  return std::make_shared<const SchemaContext>(std::move(attrs));
}

Relation random_relation(Rng& rng, std::shared_ptr<const SchemaContext> schema, std::size_t tuples,
                         int domain) {
  std::uniform_int_distribution<int> val(1, domain);
  std::vector<Tuple> rows;
  for (std::size_t i = 0; i < tuples; ++i) {
    Tuple t;
    t.row_id = i;
    for (std::size_t a = 0; a < schema->size(); ++a) t.values.push_back(Value::number(val(rng)));
    rows.push_back(std::move(t));
  }
  return Relation(std::move(schema), std::move(rows));
}

AbstractTuple random_tuple(Rng& rng, const SchemaContext& ctx) {
  AbstractTuple t;
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    std::uniform_int_distribution<int> el(0, static_cast<int>(ctx.lattice(a).size()) - 1);
    t.coords.push_back(static_cast<ElementId>(el(rng)));
  }
  return t;
}

Reality random_reality(Rng& rng, const SchemaContext& ctx) {
  AbstractTuple t;
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    const auto& L = ctx.lattice(a);
    std::vector<ElementId> cands;
    for (ElementId x = 0; x < L.size(); ++x)
      if (x != L.bottom()) cands.push_back(x);
    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
    t.coords.push_back(cands[pick(rng)]);
  }
  return Reality(ctx, std::move(t));
}

AttributeSet random_subset(Rng& rng, std::size_t n, std::size_t max_size) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::uniform_int_distribution<std::size_t> k(0, std::min(n, max_size));
  AttributeSet s(n);
  for (std::size_t i = 0, m = k(rng); i < m; ++i) s.insert(idx[i]);
  return s;
}

Cnf random_cnf(Rng& rng, int vars, int clauses) {
  Cnf cnf;
  cnf.num_vars = vars;
  std::uniform_int_distribution<int> var(1, vars);
  std::bernoulli_distribution neg(0.5);
  for (int j = 0; j < clauses; ++j) {
    std::array<int, 3> c{};
    for (int k = 0; k < 3; ++k) {
      int v = var(rng);
      int lit = neg(rng) ? -v : v;
      // keep the polarity of an earlier occurrence so no clause is tautological
      for (int l = 0; l < k; ++l)
        if (c[l] == -lit) lit = -lit;
      c[k] = lit;
    }
    cnf.clauses.push_back(c);
  }
  return cnf;
}

std::vector<AbstractTuple> naive_meet_closure(const SchemaContext& ctx, std::vector<AbstractTuple> xs) {
  std::set<AbstractTuple> s(xs.begin(), xs.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<AbstractTuple> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (s.insert(vec_meet(ctx, a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

std::vector<ClassicalFD> all_fds(std::size_t n, std::size_t max_lhs) {
  std::vector<ClassicalFD> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    AttributeSet X(n);
    for (std::size_t a = 0; a < n; ++a)
      if (mask & (1U << a)) X.insert(a);
    if (X.count() > max_lhs) continue;
    for (std::size_t A = 0; A < n; ++A) out.push_back({X, A});
  }
  return out;
}

std::optional<ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

} // namespace testing
