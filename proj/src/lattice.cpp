#include "declcmp/lattice.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include "declcmp/error.hpp"

namespace declcmp {

namespace {

// Fixed-width bit rows for the order computations during construction.
class BitRow {
public:
  explicit BitRow(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  BitRow& operator|=(const BitRow& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend BitRow operator&(BitRow a, const BitRow& b) {
    for (std::size_t k = 0; k < a.words_.size(); ++k) a.words_[k] &= b.words_[k];
    return a;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w != 0) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

private:
  std::vector<std::uint64_t> words_;
};

// Elements m of `set` with no other element of `set` strictly above them
// (`above[m]` is the up-set of m).
std::vector<std::size_t> maximal_in(const BitRow& set, const std::vector<BitRow>& above) {
  std::vector<std::size_t> out;
  set.for_each([&](std::size_t m) {
    if ((above[m] & set).count() == 1) out.push_back(m);
  });
  return out;
}

} // namespace

FiniteLattice FiniteLattice::build_from_covers(
    std::span<const std::string> names,
    std::span<const std::pair<std::string, std::string>> covers) {
  if (names.empty()) throw Error(ErrorCode::EmptyLattice, "lattice has no elements");
  if (names.size() > std::numeric_limits<ElementId>::max())
    throw Error(ErrorCode::EmptyLattice, "lattice has too many elements");

  FiniteLattice L;
  const std::size_t k = names.size();
  std::unordered_map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < k; ++i) {
    if (names[i].empty()) throw Error(ErrorCode::DuplicateElement, "empty element name");
    if (!ids.emplace(names[i], i).second)
      throw Error(ErrorCode::DuplicateElement, "duplicate element '" + names[i] + "'");
    L.names_.push_back(names[i]);
  }

  auto lookup = [&](const std::string& n) {
    auto it = ids.find(n);
    if (it == ids.end())
      throw Error(ErrorCode::UnknownElement, "cover references unknown element '" + n + "'");
    return it->second;
  };

  // up[i] = {j : i <= j}
  std::vector<BitRow> up(k, BitRow(k));
  for (std::size_t i = 0; i < k; ++i) up[i].set(i);
  for (const auto& [lo, hi] : covers) {
    auto a = lookup(lo);
    auto b = lookup(hi);
    if (a == b)
      throw Error(ErrorCode::NotAPartialOrder, "element '" + lo + "' declared to cover itself");
    up[a].set(b);
  }
  // Warshall: i <= m and m <= j gives i <= j.
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      if (i != m && up[i].test(m)) up[i] |= up[m];

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (up[i].test(j) && up[j].test(i))
        throw Error(ErrorCode::NotAPartialOrder,
                    "cycle through '" + names[i] + "' and '" + names[j] + "'");

  std::vector<BitRow> down(k, BitRow(k));
  for (std::size_t i = 0; i < k; ++i) up[i].for_each([&](std::size_t j) { down[j].set(i); });

  L.leq_.assign(k * k, false);
  for (std::size_t i = 0; i < k; ++i) up[i].for_each([&](std::size_t j) { L.leq_[i * k + j] = true; });

  constexpr ElementId unset = std::numeric_limits<ElementId>::max();
  L.meet_.assign(k * k, unset);
  L.join_.assign(k * k, unset);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      auto lower = maximal_in(down[i] & down[j], up);
      if (lower.size() > 1)
        throw Error(ErrorCode::NotALattice, "'" + names[i] + "' and '" + names[j] +
                                                "' have no greatest lower bound ('" +
                                                names[lower[0]] + "' and '" + names[lower[1]] +
                                                "' are both maximal lower bounds)");
      auto upper = maximal_in(up[i] & up[j], down);
      if (upper.size() > 1)
        throw Error(ErrorCode::NotALattice, "'" + names[i] + "' and '" + names[j] +
                                                "' have no least upper bound ('" +
                                                names[upper[0]] + "' and '" + names[upper[1]] +
                                                "' are both minimal upper bounds)");
      if (lower.size() == 1) {
        L.meet_[i * k + j] = L.meet_[j * k + i] = static_cast<ElementId>(lower[0]);
      }
      if (upper.size() == 1) {
        L.join_[i * k + j] = L.join_[j * k + i] = static_cast<ElementId>(upper[0]);
      }
    }
  }

  std::vector<std::string> minimal;
  std::vector<std::string> maximal;
  for (std::size_t i = 0; i < k; ++i) {
    if (down[i].count() == 1) {
      minimal.push_back(names[i]);
      L.bottom_ = static_cast<ElementId>(i);
    }
    if (up[i].count() == 1) {
      maximal.push_back(names[i]);
      L.top_ = static_cast<ElementId>(i);
    }
  }
  auto joined = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& n : v) s += (s.empty() ? "'" : ", '") + n + "'";
    return s;
  };
  if (minimal.size() != 1)
    throw Error(ErrorCode::NoUniqueBottom, "minimal elements: " + joined(minimal));
  if (maximal.size() != 1)
    throw Error(ErrorCode::NoUniqueTop, "maximal elements: " + joined(maximal));

  // upper covers of i: minimal elements of up[i] \ {i}
  for (std::size_t i = 0; i < k; ++i) {
    up[i].for_each([&](std::size_t j) {
      if (j == i) return;
      bool cover = true;
      up[i].for_each([&](std::size_t z) {
        if (z != i && z != j && up[z].test(j)) cover = false;
      });
      if (cover) L.covers_.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(j));
    });
  }
  std::sort(L.covers_.begin(), L.covers_.end());

  L.compute_coprime_pairs();
  return L;
}

void FiniteLattice::compute_coprime_pairs() {
  const auto k = static_cast<ElementId>(size());
  for (ElementId c = 0; c < k; ++c) {
    if (c == bottom_) continue;
    // c is co-prime iff {y : c not<= y} has a greatest element, which is then
    // the prime partner.
    std::optional<ElementId> candidate;
    for (ElementId y = 0; y < k; ++y) {
      if (leq(c, y)) continue;
      if (!candidate || leq(*candidate, y)) {
        candidate = y;
      }
    }
    if (!candidate) continue;
    bool greatest = true;
    for (ElementId y = 0; y < k; ++y)
      if (!leq(c, y) && !leq(y, *candidate)) greatest = false;
    if (greatest) pairs_.push_back({c, *candidate});
  }
}

std::optional<ElementId> FiniteLattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<ElementId>(i);
  return std::nullopt;
}

ElementId FiniteLattice::id(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw Error(ErrorCode::UnknownElement, "unknown element '" + std::string(name) + "'");
}

std::vector<ElementId> FiniteLattice::upper_covers(ElementId x) const {
  std::vector<ElementId> out;
  for (const auto& [lo, hi] : covers_)
    if (lo == x) out.push_back(hi);
  return out;
}

std::vector<ElementId> FiniteLattice::lower_covers(ElementId x) const {
  std::vector<ElementId> out;
  for (const auto& [lo, hi] : covers_)
    if (hi == x) out.push_back(lo);
  std::sort(out.begin(), out.end());
  return out;
}

Irreducibles FiniteLattice::irreducibles() const {
  Irreducibles out;
  const auto k = static_cast<ElementId>(size());
  for (ElementId x = 0; x < k; ++x) {
    auto ups = upper_covers(x);
    auto downs = lower_covers(x);
    if (downs.size() == 1 && downs[0] == bottom_) out.atoms.push_back(x);
    if (ups.size() == 1) out.meet_irreducible.push_back(x);
    if (downs.size() == 1) out.join_irreducible.push_back(x);
  }
  return out;
}

std::vector<ElementId> FiniteLattice::coprimes() const {
  std::vector<ElementId> out;
  for (const auto& p : pairs_) out.push_back(p.coprime);
  return out;
}

std::vector<ElementId> FiniteLattice::primes() const {
  std::vector<ElementId> out;
  for (const auto& p : pairs_) out.push_back(p.prime);
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteLattice::is_coprime(ElementId x) const {
  return std::any_of(pairs_.begin(), pairs_.end(), [x](const auto& p) { return p.coprime == x; });
}

std::vector<ElementId> FiniteLattice::maximal_coprimes() const {
  std::vector<ElementId> out;
  for (const auto& p : pairs_) {
    bool dominated = std::any_of(pairs_.begin(), pairs_.end(), [&](const auto& q) {
      return lt(p.coprime, q.coprime);
    });
    if (!dominated) out.push_back(p.coprime);
  }
  return out;
}

} // namespace declcmp
