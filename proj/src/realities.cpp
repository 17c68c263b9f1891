#include "declcmp/realities.hpp"

#include <algorithm>
#include <limits>

#include "declcmp/error.hpp"

namespace declcmp {

AttributeInterpretation::AttributeInterpretation(const FiniteLattice& L, std::vector<bool> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() != L.size())
    throw Error(ErrorCode::InvalidInterpretation, "labeling size does not match the lattice");
  if (labels_[L.bottom()] || !labels_[L.top()])
    throw Error(ErrorCode::InvalidInterpretation, "bottom must map to 0 and top to 1");
}

AttributeInterpretation AttributeInterpretation::up_set(const FiniteLattice& L, ElementId threshold) {
  std::vector<bool> labels(L.size());
  for (ElementId x = 0; x < L.size(); ++x) labels[x] = L.leq(threshold, x);
  return AttributeInterpretation(L, std::move(labels));
}

InterpretationFlags classify_interpretation(const AttributeInterpretation& h, const FiniteLattice& L) {
  InterpretationFlags f{true, true, true, false};
  const auto k = static_cast<ElementId>(L.size());
  for (ElementId x = 0; x < k; ++x) {
    for (ElementId y = 0; y < k; ++y) {
      if (L.leq(x, y) && h(x) && !h(y)) f.increasing = false;
      if (h(L.meet(x, y)) != (h(x) && h(y))) f.meet_hom = false;
      if (h(L.join(x, y)) != (h(x) || h(y))) f.join_hom = false;
    }
  }
  f.hom = f.meet_hom && f.join_hom;
  return f;
}

Interpretation::Interpretation(const SchemaContext& ctx, std::vector<AttributeInterpretation> parts)
    : parts_(std::move(parts)) {
  if (parts_.size() != ctx.size())
    throw Error(ErrorCode::ArityMismatch, "interpretation arity does not match the schema");
  for (std::size_t a = 0; a < ctx.size(); ++a)
    if (parts_[a].labels().size() != ctx.lattice(a).size())
      throw Error(ErrorCode::InvalidInterpretation,
                  "labeling of '" + ctx.name(a) + "' does not match its lattice");
}

Reality::Reality(const SchemaContext& ctx, AbstractTuple thresholds)
    : thresholds_(std::move(thresholds)) {
  if (thresholds_.size() != ctx.size())
    throw Error(ErrorCode::ArityMismatch, "reality arity does not match the schema");
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    if (thresholds_[a] >= ctx.lattice(a).size())
      throw Error(ErrorCode::InvalidThreshold, "threshold outside the lattice of '" + ctx.name(a) + "'");
    if (thresholds_[a] == ctx.lattice(a).bottom())
      throw Error(ErrorCode::InvalidThreshold,
                  "threshold of '" + ctx.name(a) + "' is the bottom element");
  }
}

Reality Reality::equality(const SchemaContext& ctx) { return Reality(ctx, ctx.top_vector()); }

Interpretation Reality::as_interpretation(const SchemaContext& ctx) const {
  std::vector<AttributeInterpretation> parts;
  for (std::size_t a = 0; a < ctx.size(); ++a)
    parts.push_back(AttributeInterpretation::up_set(ctx.lattice(a), thresholds_[a]));
  return Interpretation(ctx, std::move(parts));
}

StrongReality::StrongReality(const SchemaContext& ctx, AbstractTuple coprime_choice)
    : choice_(std::move(coprime_choice)) {
  if (choice_.size() != ctx.size())
    throw Error(ErrorCode::ArityMismatch, "strong reality arity does not match the schema");
  for (std::size_t a = 0; a < ctx.size(); ++a)
    if (choice_[a] >= ctx.lattice(a).size() || !ctx.lattice(a).is_coprime(choice_[a]))
      throw Error(ErrorCode::InvalidThreshold,
                  "choice for '" + ctx.name(a) + "' is not a co-prime element");
}

AttributeSet interpret_element(const SchemaContext& ctx, const Reality& g, const AbstractTuple& x) {
  AttributeSet s(ctx.size());
  for (std::size_t a = 0; a < ctx.size(); ++a)
    if (ctx.lattice(a).leq(g.threshold(a), x[a])) s.insert(a);
  return s;
}

AttributeSet interpret_element(const SchemaContext& ctx, const Interpretation& g,
                               const AbstractTuple& x) {
  AttributeSet s(ctx.size());
  for (std::size_t a = 0; a < ctx.size(); ++a)
    if (g.part(a)(x[a])) s.insert(a);
  return s;
}

namespace {

template <class G>
std::vector<AttributeSet> image(const SchemaContext& ctx, const G& g,
                                std::span<const AbstractTuple> elements) {
  std::vector<AttributeSet> out;
  out.reserve(elements.size());
  for (const auto& x : elements) out.push_back(interpret_element(ctx, g, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

std::vector<AttributeSet> interpret_family(const SchemaContext& ctx, const Reality& g,
                                           std::span<const AbstractTuple> elements) {
  return image(ctx, g, elements);
}

std::vector<AttributeSet> interpret_family(const SchemaContext& ctx, const Interpretation& g,
                                           std::span<const AbstractTuple> elements) {
  return image(ctx, g, elements);
}

bool is_closure_system(std::span<const AttributeSet> family, std::size_t universe) {
  auto has = [&](const AttributeSet& s) {
    return std::find(family.begin(), family.end(), s) != family.end();
  };
  if (!has(AttributeSet::full(universe))) return false;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!has(family[i] & family[j])) return false;
  return true;
}

AbstractTuple projection(const SchemaContext& ctx, const Reality& g, const AbstractTuple& x) {
  AbstractTuple out = x;
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    const auto& L = ctx.lattice(a);
    out[a] = L.leq(g.threshold(a), x[a]) ? g.threshold(a) : L.bottom();
  }
  return out;
}

bool check_fd_under_reality(const GeneratorSet& G, const Reality& g, const AttributeSet& X,
                            std::size_t A) {
  const auto& ctx = G.schema();
  if (A >= ctx.size())
    throw Error(ErrorCode::UnknownAttribute, "attribute index out of range");
  if (X.universe() != ctx.size())
    throw Error(ErrorCode::ArityMismatch, "attribute set does not match the schema");
  if (X.contains(A)) return true;
  const auto lhs = X.members();
  for (const auto& m : G.gens()) {
    bool agrees_on_lhs = std::all_of(lhs.begin(), lhs.end(), [&](std::size_t B) {
      return ctx.lattice(B).leq(g.threshold(B), m[B]);
    });
    if (agrees_on_lhs && !ctx.lattice(A).leq(g.threshold(A), m[A])) return false;
  }
  return true;
}

bool check_interpreted_afd(const GeneratorSet& G, const Reality& g, const AbstractFD& fd) {
  const auto& ctx = G.schema();
  auto gx = interpret_element(ctx, g, fd.lhs);
  auto gy = interpret_element(ctx, g, fd.rhs);
  for (const auto& m : G.gens()) {
    auto gm = interpret_element(ctx, g, m);
    if (gx.subset_of(gm) && !gy.subset_of(gm)) return false;
  }
  return true;
}

bool check_projection_theorem(const GeneratorSet& G, const Reality& g, const AbstractFD& fd) {
  const auto& ctx = G.schema();
  bool interpreted = check_interpreted_afd(G, g, fd);
  bool projected = check_abstract_fd(G, {projection(ctx, g, fd.lhs), projection(ctx, g, fd.rhs)});
  if (interpreted != projected)
    throw Error(ErrorCode::TheoremViolation,
                "interpreted FD " + ctx.format_tuple(fd.lhs) + " -> " + ctx.format_tuple(fd.rhs) +
                    " disagrees with its projection");
  return interpreted;
}

Reality witness_reality(const GeneratorSet& G, const AbstractFD& fd, bool holds) {
  const auto& ctx = G.schema();
  if (check_abstract_fd(G, fd) != holds)
    throw Error(ErrorCode::InconsistentFlag, "the holds flag does not match the abstract FD");
  const auto& anchor = holds ? fd.lhs : fd.rhs;
  AbstractTuple thresholds = ctx.top_vector();
  for (std::size_t a = 0; a < ctx.size(); ++a)
    if (anchor[a] != ctx.lattice(a).bottom()) thresholds[a] = anchor[a];
  Reality g(ctx, std::move(thresholds));
  if (check_interpreted_afd(G, g, fd) != holds)
    throw Error(ErrorCode::WitnessVerificationFailed, "witness reality does not verify");
  return g;
}

ProductEnumerator::ProductEnumerator(std::vector<std::vector<ElementId>> choices)
    : choices_(std::move(choices)), pos_(choices_.size(), 0) {
  count_ = 1;
  for (const auto& c : choices_) {
    if (c.empty()) {
      count_ = 0;
      done_ = true;
      break;
    }
    if (count_ > std::numeric_limits<std::uint64_t>::max() / c.size())
      count_ = std::numeric_limits<std::uint64_t>::max();
    else
      count_ *= c.size();
  }
}

std::optional<AbstractTuple> ProductEnumerator::next() {
  if (done_) return std::nullopt;
  AbstractTuple out;
  out.coords.reserve(choices_.size());
  for (std::size_t i = 0; i < choices_.size(); ++i) out.coords.push_back(choices_[i][pos_[i]]);
  // advance, last coordinate fastest
  std::size_t i = choices_.size();
  while (i > 0) {
    --i;
    if (++pos_[i] < choices_[i].size()) return out;
    pos_[i] = 0;
  }
  done_ = true;
  return out;
}

namespace {

std::vector<std::vector<ElementId>> non_bottom_choices(const SchemaContext& ctx) {
  std::vector<std::vector<ElementId>> out;
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    const auto& L = ctx.lattice(a);
    std::vector<ElementId> c;
    for (ElementId x = 0; x < L.size(); ++x)
      if (x != L.bottom()) c.push_back(x);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<ElementId>> coprime_choices(const SchemaContext& ctx) {
  std::vector<std::vector<ElementId>> out;
  for (std::size_t a = 0; a < ctx.size(); ++a) out.push_back(ctx.lattice(a).coprimes());
  return out;
}

} // namespace

RealityEnumerator::RealityEnumerator(const SchemaContext& ctx)
    : ctx_(&ctx), inner_(non_bottom_choices(ctx)) {}

std::optional<Reality> RealityEnumerator::next() {
  auto t = inner_.next();
  if (!t) return std::nullopt;
  return Reality(*ctx_, std::move(*t));
}

StrongRealityEnumerator::StrongRealityEnumerator(const SchemaContext& ctx)
    : ctx_(&ctx), inner_(coprime_choices(ctx)) {}

std::optional<StrongReality> StrongRealityEnumerator::next() {
  auto t = inner_.next();
  if (!t) return std::nullopt;
  return StrongReality(*ctx_, std::move(*t));
}

} // namespace declcmp
