#include "declcmp/decision.hpp"

#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "declcmp/error.hpp"

namespace declcmp {

std::string_view to_string(Problem p) noexcept {
  switch (p) {
    case Problem::Certain: return "certain";
    case Problem::StronglyCertain: return "strongly-certain";
    case Problem::Possible: return "possible";
    case Problem::StronglyPossible: return "strongly-possible";
  }
  return "?";
}

void require_valid(const SchemaContext& ctx, const ClassicalFD& fd) {
  if (fd.lhs.universe() != ctx.size())
    throw Error(ErrorCode::ArityMismatch, "lhs attribute set does not match the schema");
  if (fd.rhs >= ctx.size())
    throw Error(ErrorCode::UnknownAttribute, "rhs attribute index out of range");
}

namespace {

Verdict start(Problem p, const GeneratorSet& G, const ClassicalFD& fd) {
  require_valid(G.schema(), fd);
  Verdict v;
  v.problem = p;
  v.stats.generators = G.size();
  return v;
}

bool has_strong_realities(const SchemaContext& ctx) {
  for (std::size_t a = 0; a < ctx.size(); ++a)
    if (ctx.lattice(a).coprimes().empty()) return false;
  return true;
}

ElementId join_all(const FiniteLattice& L, const std::vector<ElementId>& xs) {
  ElementId j = L.bottom();
  for (auto x : xs) j = L.join(j, x);
  return j;
}

} // namespace

Verdict certain_fd(const GeneratorSet& G, const ClassicalFD& fd) {
  auto v = start(Problem::Certain, G, fd);
  const auto& ctx = G.schema();
  const auto& LA = ctx.lattice(fd.rhs);
  const auto X = fd.lhs.members();
  v.answer = true;
  if (fd.lhs.contains(fd.rhs)) return v;
  for (const auto& m : G.gens()) {
    if (m[fd.rhs] == LA.top()) continue;
    bool escapes = false;
    for (auto B : X)
      if (m[B] == ctx.lattice(B).bottom()) escapes = true;
    if (!escapes) {
      v.answer = false;
      v.counterexample = m;
      return v;
    }
  }
  return v;
}

Verdict strongly_certain_fd(const GeneratorSet& G, const ClassicalFD& fd) {
  auto v = start(Problem::StronglyCertain, G, fd);
  const auto& ctx = G.schema();
  v.answer = true;
  if (fd.lhs.contains(fd.rhs) || !has_strong_realities(ctx)) return v;
  const auto& LA = ctx.lattice(fd.rhs);
  const ElementId need = join_all(LA, LA.coprimes());
  const auto X = fd.lhs.members();
  for (const auto& m : G.gens()) {
    if (LA.leq(need, m[fd.rhs])) continue;
    bool escapes = false;
    for (auto B : X) {
      const auto& LB = ctx.lattice(B);
      bool above_some = false;
      for (auto c : LB.coprimes())
        if (LB.leq(c, m[B])) above_some = true;
      if (!above_some) escapes = true;
    }
    if (!escapes) {
      v.answer = false;
      v.counterexample = m;
      return v;
    }
  }
  return v;
}

Verdict possible_fd(const GeneratorSet& G, const ClassicalFD& fd) {
  auto v = start(Problem::Possible, G, fd);
  const auto& ctx = G.schema();
  const auto& LA = ctx.lattice(fd.rhs);
  auto cl = closure(G, characteristic_vector(ctx, fd.lhs));
  v.stats.closures_computed = 1;
  if (cl[fd.rhs] == LA.bottom()) {
    v.answer = false;
    v.counterexample = cl;
    return v;
  }
  std::optional<ElementId> atom;
  for (auto a : LA.irreducibles().atoms)
    if (LA.leq(a, cl[fd.rhs])) {
      atom = a;
      break;
    }
  if (!atom) throw Error(ErrorCode::WitnessVerificationFailed, "no atom below the closure");
  auto thresholds = ctx.top_vector();
  thresholds[fd.rhs] = *atom;
  Reality g(ctx, std::move(thresholds));
  if (!check_fd_under_reality(G, g, fd.lhs, fd.rhs))
    throw Error(ErrorCode::WitnessVerificationFailed, "possible-FD witness does not verify");
  v.answer = true;
  v.witness = std::move(g);
  return v;
}

namespace {

struct SpfdSearch {
  const GeneratorSet& G;
  const SchemaContext& ctx;
  std::size_t A;
  std::vector<std::size_t> X;
  std::vector<std::vector<ElementId>> candidates; // parallel to X
  std::vector<ElementId> rhs_coprimes;
  bool prune;
  const std::atomic<bool>* stop = nullptr;

  std::unordered_map<AbstractTuple, AbstractTuple> memo;
  std::uint64_t closures = 0;
  std::uint64_t nodes = 0;

  const AbstractTuple& cached_closure(const AbstractTuple& x) {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    ++closures;
    return memo.emplace(x, closure(G, x)).first->second;
  }

  std::optional<ElementId> satisfied(const AbstractTuple& x) {
    const auto& cl = cached_closure(x);
    const auto& LA = ctx.lattice(A);
    for (auto c : rhs_coprimes)
      if (LA.leq(c, cl[A])) return c;
    return std::nullopt;
  }

  // Returns the completed assignment and the co-prime found for A.
  std::optional<std::pair<AbstractTuple, ElementId>> run(AbstractTuple& cur, std::size_t depth) {
    if (stop && stop->load(std::memory_order_relaxed)) return std::nullopt;
    ++nodes;
    if (prune || depth == X.size()) {
      if (auto c = satisfied(cur)) {
        AbstractTuple done = cur;
        for (std::size_t i = depth; i < X.size(); ++i) done[X[i]] = candidates[i].front();
        return std::pair{std::move(done), *c};
      }
    }
    if (depth == X.size()) return std::nullopt;
    if (prune) {
      AbstractTuple upper = cur;
      for (std::size_t i = depth; i < X.size(); ++i)
        upper[X[i]] = join_all(ctx.lattice(X[i]), candidates[i]);
      if (!satisfied(upper)) return std::nullopt;
    }
    const auto B = X[depth];
    for (auto c : candidates[depth]) {
      cur[B] = c;
      auto r = run(cur, depth + 1);
      cur[B] = ctx.lattice(B).bottom();
      if (r) return r;
    }
    return std::nullopt;
  }
};

} // namespace

Verdict strongly_possible_fd(const GeneratorSet& G, const ClassicalFD& fd, const SpfdOptions& opts) {
  auto v = start(Problem::StronglyPossible, G, fd);
  const auto& ctx = G.schema();
  if (!has_strong_realities(ctx)) return v;

  auto build_witness = [&](const AbstractTuple& assignment, ElementId c) {
    AbstractTuple choice(std::vector<ElementId>(ctx.size()));
    for (std::size_t a = 0; a < ctx.size(); ++a) choice[a] = ctx.lattice(a).coprimes().front();
    for (auto B : fd.lhs.members()) choice[B] = assignment[B];
    choice[fd.rhs] = c;
    StrongReality s(ctx, std::move(choice));
    if (!check_fd_under_reality(G, s.as_reality(ctx), fd.lhs, fd.rhs))
      throw Error(ErrorCode::WitnessVerificationFailed, "strongly-possible witness does not verify");
    v.answer = true;
    v.witness = std::move(s);
  };

  if (fd.lhs.contains(fd.rhs)) {
    auto firsts = ctx.bottom_vector();
    for (std::size_t a = 0; a < ctx.size(); ++a) firsts[a] = ctx.lattice(a).coprimes().front();
    build_witness(firsts, firsts[fd.rhs]);
    return v;
  }

  SpfdSearch proto{G, ctx, fd.rhs, fd.lhs.members(), {}, {}, opts.prune, nullptr, {}, 0, 0};
  for (auto B : proto.X)
    proto.candidates.push_back(opts.prune ? ctx.lattice(B).maximal_coprimes()
                                          : ctx.lattice(B).coprimes());
  proto.rhs_coprimes = ctx.lattice(fd.rhs).coprimes();

  std::optional<std::pair<AbstractTuple, ElementId>> found;
  const unsigned workers =
      opts.deterministic || proto.X.empty()
          ? 1U
          : std::min<unsigned>(std::max(1U, opts.threads),
                               static_cast<unsigned>(proto.candidates.front().size()));

  if (workers <= 1) {
    auto cur = ctx.bottom_vector();
    found = proto.run(cur, 0);
    v.stats.closures_computed = proto.closures;
    v.stats.nodes_explored = proto.nodes;
  } else {
    // Each worker takes every workers-th choice for the first attribute.
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          try {
            SpfdSearch s = proto;
            s.stop = &stop;
            s.nodes = 1; // the shared root
            auto cur = ctx.bottom_vector();
            std::optional<std::pair<AbstractTuple, ElementId>> local;
            if (auto c = s.satisfied(cur)) {
              AbstractTuple done = cur;
              for (std::size_t i = 0; i < s.X.size(); ++i) done[s.X[i]] = s.candidates[i].front();
              local = std::pair{std::move(done), *c};
            } else {
              const auto B = s.X.front();
              for (std::size_t i = w; i < s.candidates.front().size() && !local; i += workers) {
                cur[B] = s.candidates.front()[i];
                local = s.run(cur, 1);
                cur[B] = ctx.lattice(B).bottom();
              }
            }
            std::lock_guard lock(mu);
            v.stats.closures_computed += s.closures;
            v.stats.nodes_explored += s.nodes - (w == 0 ? 0 : 1);
            if (local && !found) {
              found = std::move(local);
              stop = true;
            }
          } catch (...) {
            errors[w] = std::current_exception();
            stop = true;
          }
        });
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  if (found) build_witness(found->first, found->second);
  return v;
}

Verdict decide(Problem p, const GeneratorSet& G, const ClassicalFD& fd, const SpfdOptions& opts) {
  switch (p) {
    case Problem::Certain: return certain_fd(G, fd);
    case Problem::StronglyCertain: return strongly_certain_fd(G, fd);
    case Problem::Possible: return possible_fd(G, fd);
    case Problem::StronglyPossible: return strongly_possible_fd(G, fd, opts);
  }
  throw Error(ErrorCode::ParseError, "unknown problem");
}

} // namespace declcmp
