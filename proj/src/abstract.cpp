#include "declcmp/abstract.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_set>

#include "declcmp/error.hpp"

namespace declcmp {

namespace {

void require_arity(const SchemaContext& ctx, const AbstractTuple& x) {
  if (x.size() != ctx.size())
    throw Error(ErrorCode::ArityMismatch, "abstract tuple has " + std::to_string(x.size()) +
                                              " coordinates, schema has " +
                                              std::to_string(ctx.size()));
}

bool leq_unchecked(const SchemaContext& ctx, const AbstractTuple& x, const AbstractTuple& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!ctx.lattice(i).leq(x[i], y[i])) return false;
  return true;
}

void sort_unique(std::vector<AbstractTuple>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

bool vec_leq(const SchemaContext& ctx, const AbstractTuple& x, const AbstractTuple& y) {
  require_arity(ctx, x);
  require_arity(ctx, y);
  return leq_unchecked(ctx, x, y);
}

AbstractTuple vec_meet(const SchemaContext& ctx, const AbstractTuple& x, const AbstractTuple& y) {
  require_arity(ctx, x);
  require_arity(ctx, y);
  AbstractTuple out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ctx.lattice(i).meet(x[i], y[i]);
  return out;
}

AbstractTuple characteristic_vector(const SchemaContext& ctx, const AttributeSet& X) {
  if (X.universe() != ctx.size())
    throw Error(ErrorCode::ArityMismatch, "attribute set does not match the schema");
  AbstractTuple out = ctx.bottom_vector();
  for (auto a : X.members()) out[a] = ctx.lattice(a).top();
  return out;
}

GeneratorSet::GeneratorSet(std::shared_ptr<const SchemaContext> schema,
                           std::vector<AbstractTuple> vectors)
    : schema_(std::move(schema)), gens_(std::move(vectors)) {
  for (const auto& g : gens_) require_arity(*schema_, g);
  gens_.push_back(schema_->top_vector());
  sort_unique(gens_);
}

bool GeneratorSet::contains(const AbstractTuple& t) const {
  return std::binary_search(gens_.begin(), gens_.end(), t);
}

GeneratorSet generators(const Relation& r, unsigned workers) {
  const auto& ctx = r.schema();
  const auto& rows = r.tuples();
  const std::size_t n = rows.size();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));

  auto scan = [&](std::size_t first, std::size_t stride) {
    std::unordered_set<AbstractTuple> local;
    for (std::size_t i = first; i < n; i += stride)
      for (std::size_t j = i; j < n; ++j)
        local.insert(compare_tuples(ctx, rows[i].values, rows[j].values));
    return std::vector<AbstractTuple>(local.begin(), local.end());
  };

  std::vector<AbstractTuple> all;
  if (workers == 1) {
    all = scan(0, 1);
  } else {
    std::vector<std::vector<AbstractTuple>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          try {
            parts[w] = scan(w, workers);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  }
  return GeneratorSet(r.schema_ptr(), std::move(all));
}

AbstractTuple closure(const GeneratorSet& G, const AbstractTuple& x) {
  const auto& ctx = G.schema();
  require_arity(ctx, x);
  AbstractTuple out = ctx.top_vector();
  for (const auto& m : G.gens()) {
    if (!leq_unchecked(ctx, x, m)) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.lattice(i).meet(out[i], m[i]);
  }
  return out;
}

bool check_abstract_fd(const GeneratorSet& G, const AbstractFD& fd) {
  require_arity(G.schema(), fd.rhs);
  return leq_unchecked(G.schema(), fd.rhs, closure(G, fd.lhs));
}

AbstractLattice::AbstractLattice(std::shared_ptr<const SchemaContext> schema,
                                 std::vector<AbstractTuple> elements)
    : schema_(std::move(schema)), elements_(std::move(elements)) {
  for (const auto& e : elements_) require_arity(*schema_, e);
  sort_unique(elements_);
}

bool AbstractLattice::contains(const AbstractTuple& t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

std::vector<std::pair<std::size_t, std::size_t>> AbstractLattice::cover_edges() const {
  const auto& ctx = *schema_;
  const auto k = elements_.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i && leq_unchecked(ctx, elements_[i], elements_[j])) above.push_back(j);
    for (auto j : above) {
      bool cover = std::none_of(above.begin(), above.end(), [&](std::size_t z) {
        return z != j && leq_unchecked(ctx, elements_[z], elements_[j]);
      });
      if (cover) edges.emplace_back(i, j);
    }
  }
  return edges;
}

AbstractLattice materialize(const GeneratorSet& G, std::size_t cap) {
  const auto& ctx = G.schema();
  std::vector<AbstractTuple> elements;
  std::unordered_set<AbstractTuple> seen;
  std::deque<std::size_t> pending;
  auto add = [&](AbstractTuple t) {
    if (!seen.insert(t).second) return;
    if (elements.size() + 1 > cap)
      throw Error(ErrorCode::CapExceeded, "abstract lattice exceeds " + std::to_string(cap) +
                                              " elements (" + std::to_string(elements.size()) +
                                              " found so far)");
    elements.push_back(std::move(t));
    pending.push_back(elements.size() - 1);
  };
  for (const auto& g : G.gens()) add(g);
  while (!pending.empty()) {
    auto i = pending.front();
    pending.pop_front();
    // elements may grow inside the loop; index access stays valid
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (j == i) continue;
      add(vec_meet(ctx, elements[i], elements[j]));
    }
  }
  return AbstractLattice(G.schema_ptr(), std::move(elements));
}

} // namespace declcmp
