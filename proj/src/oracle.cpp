#include "declcmp/oracle.hpp"

#include <cstdlib>

#include "declcmp/error.hpp"

namespace declcmp {

namespace {

template <class Enumerator, class ToReality>
bool quantify(Enumerator e, bool universal, const GeneratorSet& G, const ClassicalFD& fd,
              std::uint64_t cap, ToReality&& to_reality) {
  if (e.count() > cap)
    throw Error(ErrorCode::EnumerationCapExceeded,
                std::to_string(e.count()) + " realities exceed the cap of " + std::to_string(cap));
  while (auto g = e.next()) {
    bool holds = check_fd_under_reality(G, to_reality(*g), fd.lhs, fd.rhs);
    if (universal && !holds) return false;
    if (!universal && holds) return true;
  }
  return universal;
}

} // namespace

bool brute_decide(Problem kind, const GeneratorSet& G, const ClassicalFD& fd, std::uint64_t cap) {
  const auto& ctx = G.schema();
  require_valid(ctx, fd);
  const bool universal = kind == Problem::Certain || kind == Problem::StronglyCertain;
  if (kind == Problem::Certain || kind == Problem::Possible)
    return quantify(enumerate_realities(ctx), universal, G, fd, cap,
                    [](const Reality& g) -> const Reality& { return g; });
  return quantify(enumerate_strong_realities(ctx), universal, G, fd, cap,
                  [&](const StrongReality& s) { return s.as_reality(ctx); });
}

bool brute_sat(const Cnf& cnf) {
  if (cnf.num_vars > kMaxBruteSatVars)
    throw Error(ErrorCode::TooManyVariables,
                std::to_string(cnf.num_vars) + " variables, at most " +
                    std::to_string(kMaxBruteSatVars) + " supported");
  check_cnf(cnf);
  const auto n = static_cast<std::size_t>(cnf.num_vars);
  std::vector<bool> a(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t i = 0; i < n; ++i) a[i] = (bits >> i) & 1U;
    bool all = true;
    for (const auto& c : cnf.clauses) {
      bool sat = false;
      for (int lit : c) sat = sat || a[static_cast<std::size_t>(std::abs(lit) - 1)] == (lit > 0);
      all = all && sat;
    }
    if (all) return true;
  }
  return false;
}

} // namespace declcmp
