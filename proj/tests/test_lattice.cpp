#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "declcmp/error.hpp"
#include "support.hpp"

using namespace declcmp;
using testing::Rng;

namespace {

using Names = std::vector<std::string>;
using Covers = std::vector<std::pair<std::string, std::string>>;

FiniteLattice build(const Names& n, const Covers& c) { return FiniteLattice::build_from_covers(n, c); }

FiniteLattice running_a() {
  return build({"b", "u", "gb", "g"}, {{"b", "u"}, {"b", "gb"}, {"u", "g"}, {"gb", "g"}});
}

FiniteLattice m3() {
  return build({"0", "a", "b", "c", "1"},
               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

ErrorCode code_of(const Names& n, const Covers& c) {
  try {
    build(n, c);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

std::vector<std::string> names_of(const FiniteLattice& L, const std::vector<ElementId>& ids) {
  std::vector<std::string> out;
  for (auto x : ids) out.push_back(L.name(x));
  std::sort(out.begin(), out.end());
  return out;
}

// Lattice axioms by brute force over all pairs and triples.
void check_axioms(const FiniteLattice& L) {
  const auto k = static_cast<ElementId>(L.size());
  for (ElementId x = 0; x < k; ++x) {
    CHECK(L.leq(L.bottom(), x));
    CHECK(L.leq(x, L.top()));
    CHECK(L.meet(x, x) == x);
    CHECK(L.join(x, x) == x);
    for (ElementId y = 0; y < k; ++y) {
      CHECK(L.meet(x, y) == L.meet(y, x));
      CHECK(L.join(x, y) == L.join(y, x));
      CHECK(L.meet(x, L.join(x, y)) == x);
      CHECK(L.join(x, L.meet(x, y)) == x);
      CHECK(L.leq(x, y) == (L.meet(x, y) == x));
      CHECK(L.leq(x, y) == (L.join(x, y) == y));
      if (x != y && L.leq(x, y)) CHECK_FALSE(L.leq(y, x));
      // meet is the greatest lower bound
      for (ElementId z = 0; z < k; ++z) {
        if (L.leq(z, x) && L.leq(z, y)) CHECK(L.leq(z, L.meet(x, y)));
        if (L.leq(x, z) && L.leq(y, z)) CHECK(L.leq(L.join(x, y), z));
        CHECK(L.meet(x, L.meet(y, z)) == L.meet(L.meet(x, y), z));
        CHECK(L.join(x, L.join(y, z)) == L.join(L.join(x, y), z));
        if (L.leq(x, y) && L.leq(y, z)) CHECK(L.leq(x, z));
      }
    }
  }
}

// Co-prime by definition: c != bottom and c <= x v y implies c <= x or c <= y.
bool brute_coprime(const FiniteLattice& L, ElementId c) {
  if (c == L.bottom()) return false;
  for (ElementId x = 0; x < L.size(); ++x)
    for (ElementId y = 0; y < L.size(); ++y)
      if (L.leq(c, L.join(x, y)) && !L.leq(c, x) && !L.leq(c, y)) return false;
  return true;
}

bool brute_prime(const FiniteLattice& L, ElementId p) {
  if (p == L.top()) return false;
  for (ElementId x = 0; x < L.size(); ++x)
    for (ElementId y = 0; y < L.size(); ++y)
      if (L.leq(L.meet(x, y), p) && !L.leq(x, p) && !L.leq(y, p)) return false;
  return true;
}

} // namespace

TEST_CASE("diamond from covers") {
  auto L = running_a();
  CHECK(L.size() == 4);
  CHECK(L.name(L.bottom()) == "b");
  CHECK(L.name(L.top()) == "g");
  CHECK(L.meet(L.id("gb"), L.id("u")) == L.id("b"));
  CHECK(L.join(L.id("gb"), L.id("u")) == L.id("g"));
  CHECK(names_of(L, L.irreducibles().atoms) == Names{"gb", "u"});
  CHECK(L.covers().size() == 4);
  check_axioms(L);
}

TEST_CASE("one-element lattice") {
  auto L = build({"x"}, {});
  CHECK(L.bottom() == L.top());
  auto irr = L.irreducibles();
  CHECK(irr.atoms.empty());
  CHECK(irr.meet_irreducible.empty());
  CHECK(irr.join_irreducible.empty());
  CHECK(L.coprime_prime_pairs().empty());
  CHECK(L.covers().empty());
}

TEST_CASE("chain of three") {
  auto L = build({"i", "u", "c"}, {{"i", "u"}, {"u", "c"}});
  CHECK(L.meet(L.id("c"), L.id("u")) == L.id("u"));
  auto irr = L.irreducibles();
  CHECK(names_of(L, irr.atoms) == Names{"u"});
  CHECK(names_of(L, irr.meet_irreducible) == Names{"i", "u"});
  CHECK(names_of(L, irr.join_irreducible) == Names{"c", "u"});
  check_axioms(L);
}

TEST_CASE("irreducibles agree with the definition") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto L = testing::random_lattice(rng, 8);
    auto irr = L.irreducibles();
    for (ElementId m = 0; m < L.size(); ++m) {
      bool meet_irr = m != L.top();
      bool join_irr = m != L.bottom();
      for (ElementId x = 0; x < L.size(); ++x)
        for (ElementId y = 0; y < L.size(); ++y) {
          if (L.meet(x, y) == m && x != m && y != m) meet_irr = false;
          if (L.join(x, y) == m && x != m && y != m) join_irr = false;
        }
      auto has = [&](const std::vector<ElementId>& v) { return std::count(v.begin(), v.end(), m) == 1; };
      CHECK(has(irr.meet_irreducible) == meet_irr);
      CHECK(has(irr.join_irreducible) == join_irr);
      bool atom = m != L.bottom() && L.lower_covers(m) == std::vector<ElementId>{L.bottom()};
      CHECK(has(irr.atoms) == atom);
    }
  }
}

TEST_CASE("join in M3 and no co-primes") {
  auto L = m3();
  CHECK(L.join(L.id("a"), L.id("b")) == L.top());
  CHECK(L.coprime_prime_pairs().empty());
  CHECK(L.maximal_coprimes().empty());
  check_axioms(L);
}

TEST_CASE("co-prime/prime pairs") {
  SUBCASE("two-chain") {
    auto L = build({"0", "1"}, {{"0", "1"}});
    REQUIRE(L.coprime_prime_pairs().size() == 1);
    CHECK(L.coprime_prime_pairs()[0].coprime == L.top());
    CHECK(L.coprime_prime_pairs()[0].prime == L.bottom());
  }
  SUBCASE("literal lattice") {
    auto L = build({"bot", "a", "na", "top"}, {{"bot", "a"}, {"bot", "na"}, {"a", "top"}, {"na", "top"}});
    REQUIRE(L.coprime_prime_pairs().size() == 2);
    for (auto [c, p] : L.coprime_prime_pairs()) {
      if (L.name(c) == "a") CHECK(L.name(p) == "na");
      else {
        CHECK(L.name(c) == "na");
        CHECK(L.name(p) == "a");
      }
    }
    CHECK(names_of(L, L.maximal_coprimes()) == Names{"a", "na"});
  }
  SUBCASE("random lattices against the definitions") {
    Rng rng(11);
    for (int trial = 0; trial < 80; ++trial) {
      auto L = testing::random_lattice(rng, 8);
      std::vector<ElementId> coprimes;
      std::vector<ElementId> primes;
      for (ElementId x = 0; x < L.size(); ++x) {
        if (brute_coprime(L, x)) coprimes.push_back(x);
        if (brute_prime(L, x)) primes.push_back(x);
      }
      auto got_c = L.coprimes();
      auto got_p = L.primes();
      std::sort(got_c.begin(), got_c.end());
      std::sort(got_p.begin(), got_p.end());
      CHECK(got_c == coprimes);
      CHECK(got_p == primes);
      for (auto [c, p] : L.coprime_prime_pairs()) {
        // the up-set of c and the down-set of p partition the lattice
        for (ElementId x = 0; x < L.size(); ++x) CHECK(L.leq(c, x) != L.leq(x, p));
        CHECK(L.is_coprime(c));
      }
      for (auto c : L.maximal_coprimes())
        for (auto d : L.coprimes()) CHECK_FALSE(L.lt(c, d));
    }
  }
}

TEST_CASE("construction errors") {
  CHECK(code_of({}, {}) == ErrorCode::EmptyLattice);
  CHECK(code_of({"a", "a"}, {}) == ErrorCode::DuplicateElement);
  CHECK(code_of({"a", "b"}, {{"a", "z"}}) == ErrorCode::UnknownElement);
  CHECK(code_of({"a", "b"}, {{"a", "b"}, {"b", "a"}}) == ErrorCode::NotAPartialOrder);
  CHECK(code_of({"a", "b"}, {}) == ErrorCode::NoUniqueBottom);
  CHECK(code_of({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}) == ErrorCode::NoUniqueTop);
  SUBCASE("missing meet reports the pair") {
    try {
      build({"bot", "a", "b", "c", "top"},
            {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}, {"c", "a"}, {"c", "b"}});
      FAIL("expected NotALattice");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotALattice);
      std::string msg = e.what();
      CHECK(msg.find("'a'") != std::string::npos);
      CHECK(msg.find("'b'") != std::string::npos);
    }
  }
  SUBCASE("two minimal upper bounds") {
    // a, b below both c and d
    CHECK(code_of({"0", "a", "b", "c", "d", "1"},
                  {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}}) ==
          ErrorCode::NotALattice);
  }
}

TEST_CASE("transitive covers are dropped") {
  auto L = build({"i", "u", "c"}, {{"i", "u"}, {"u", "c"}, {"i", "c"}});
  CHECK(L.covers().size() == 2);
}

TEST_CASE("random lattices satisfy the axioms") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) check_axioms(testing::random_lattice(rng, 8));
}

TEST_CASE("64-element lattice builds quickly") {
  // product of a 4-chain with itself, with itself again: 4*4*4 = 64 elements
  Names names;
  Covers covers;
  auto nm = [](int a, int b, int c) { return std::to_string(a) + std::to_string(b) + std::to_string(c); };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        names.push_back(nm(a, b, c));
        if (a < 3) covers.emplace_back(nm(a, b, c), nm(a + 1, b, c));
        if (b < 3) covers.emplace_back(nm(a, b, c), nm(a, b + 1, c));
        if (c < 3) covers.emplace_back(nm(a, b, c), nm(a, b, c + 1));
      }
  auto t0 = std::chrono::steady_clock::now();
  auto L = build(names, covers);
  auto elapsed = std::chrono::steady_clock::now() - t0;
  CHECK(L.size() == 64);
  CHECK(L.name(L.meet(L.id("312"), L.id("123"))) == "112");
  CHECK(L.name(L.join(L.id("312"), L.id("123"))) == "323");
  CHECK(std::chrono::duration<double>(elapsed).count() < 1.0);
}
