#include "specsl/morphisms.hpp"

#include <algorithm>
#include <string>

#include "specsl/kernels.hpp"

namespace specsl {

namespace {

std::vector<int> closures_or_throw(const SpecSemilattice& s, const char* who) {
  std::vector<int> k(static_cast<std::size_t>(s.size()));
  for (int a = 0; a < s.size(); ++a) {
    auto ka = closure_of(s, a);
    if (!ka) {
      throw PreconditionError(std::string(who) + ": element " +
                              std::to_string(a) + " has no closure");
    }
    k[a] = *ka;
  }
  return k;
}

std::optional<Violation> join_defect(const SpecSemilattice& src,
                                     const SpecSemilattice& dst,
                                     const Morphism& f) {
  for (int a = 0; a < src.size(); ++a)
    for (int b = 0; b < src.size(); ++b)
      if (f(src.join(a, b)) != dst.join(f(a), f(b)))
        return Violation{defect::kJoin, {a, b}};
  return std::nullopt;
}

}  // namespace

Morphism compose(const Morphism& first, const Morphism& second) {
  Morphism out;
  out.map.reserve(first.map.size());
  for (int x : first.map) out.map.push_back(second(x));
  return out;
}

Morphism identity_morphism(int n) {
  Morphism id;
  id.map.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id.map[i] = i;
  return id;
}

std::optional<Violation> homomorphism_defect(const SpecSemilattice& src,
                                             const SpecSemilattice& dst,
                                             const Morphism& f,
                                             bool zero_preserving) {
  if (f.size() != src.size()) return Violation{defect::kShape, {f.size()}};
  for (int a = 0; a < src.size(); ++a)
    if (f(a) < 0 || f(a) >= dst.size()) return Violation{defect::kShape, {a}};
  if (zero_preserving && src.zero() && dst.zero() && f(*src.zero()) != *dst.zero())
    return Violation{defect::kZero, {*src.zero()}};
  if (auto v = join_defect(src, dst, f)) return v;
  for (int a = 0; a < src.size(); ++a)
    for (int b = 0; b < src.size(); ++b)
      if (src.sq(a, b) && !dst.sq(f(a), f(b))) return Violation{defect::kSq, {a, b}};
  return std::nullopt;
}

bool is_homomorphism(const SpecSemilattice& src, const SpecSemilattice& dst,
                     const Morphism& f, bool zero_preserving) {
  return !homomorphism_defect(src, dst, f, zero_preserving);
}

std::optional<Violation> embedding_defect(const SpecSemilattice& src,
                                          const SpecSemilattice& dst,
                                          const Morphism& f,
                                          bool zero_preserving) {
  if (auto v = homomorphism_defect(src, dst, f, zero_preserving)) return v;
  for (int a = 0; a < src.size(); ++a)
    for (int b = a + 1; b < src.size(); ++b)
      if (f(a) == f(b)) return Violation{defect::kInjective, {a, b}};
  for (int a = 0; a < src.size(); ++a)
    for (int b = 0; b < src.size(); ++b)
      if (dst.sq(f(a), f(b)) && !src.sq(a, b))
        return Violation{defect::kReflect, {a, b}};
  return std::nullopt;
}

bool is_embedding(const SpecSemilattice& src, const SpecSemilattice& dst,
                  const Morphism& f, bool zero_preserving) {
  return !embedding_defect(src, dst, f, zero_preserving);
}

bool is_K_homomorphism(const SpecSemilattice& src, const SpecSemilattice& dst,
                       const Morphism& f) {
  const auto ks = closures_or_throw(src, "is_K_homomorphism(source)");
  const auto kt = closures_or_throw(dst, "is_K_homomorphism(target)");
  if (f.size() != src.size()) return false;
  for (int a = 0; a < src.size(); ++a)
    if (f(a) < 0 || f(a) >= dst.size()) return false;
  if (join_defect(src, dst, f)) return false;
  for (int a = 0; a < src.size(); ++a)
    if (f(ks[a]) != kt[f(a)]) return false;
  // A join map commuting with K preserves [= automatically.
  for (int a = 0; a < src.size(); ++a)
    for (int b = 0; b < src.size(); ++b)
      if (src.sq(a, b) && !dst.sq(f(a), f(b))) {
        throw InvariantViolation(
            "join map commuting with K failed to preserve [= at (" +
            std::to_string(a) + "," + std::to_string(b) + ")");
      }
  return true;
}

namespace {

kernels::MapProblem make_problem(const SpecSemilattice& src,
                                 const SpecSemilattice& dst,
                                 const HomSearchOptions& opts, bool k_only) {
  const int n = src.size();
  const int m = dst.size();
  if (!opts.fixed.empty() && static_cast<int>(opts.fixed.size()) != n)
    throw StructuralError("fixed assignment has wrong length");

  kernels::MapProblem pr;
  pr.source_size = n;
  pr.target_size = m;
  pr.target_join = dst.join_table();
  pr.target_sq = dst.sq_table();
  pr.domain.resize(n);
  pr.join_checks.resize(n);
  pr.sq_checks.resize(n);
  pr.closure_checks.resize(n);

  for (int a = 0; a < n; ++a) {
    int pin = opts.fixed.empty() ? -1 : opts.fixed[a];
    if (opts.zero_preserving && src.zero() && dst.zero() && a == *src.zero()) {
      if (pin >= 0 && pin != *dst.zero()) pin = -2;  // contradictory pins
      else pin = *dst.zero();
    }
    if (pin >= m) throw StructuralError("fixed value out of range");
    if (pin == -2) continue;
    if (pin >= 0) {
      pr.domain[a] = {pin};
    } else {
      pr.domain[a].resize(static_cast<std::size_t>(m));
      for (int v = 0; v < m; ++v) pr.domain[a][v] = v;
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      const int z = src.join(x, y);
      pr.join_checks[std::max({x, y, z})].push_back({x, y, z});
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (src.sq(x, y)) pr.sq_checks[std::max(x, y)].push_back({x, y});

  if (k_only) {
    const auto ks = closures_or_throw(src, "enumerate_K_homomorphisms(source)");
    pr.target_closure = closures_or_throw(dst, "enumerate_K_homomorphisms(target)");
    for (int x = 0; x < n; ++x)
      pr.closure_checks[std::max(x, ks[x])].push_back({x, ks[x]});
  }
  return pr;
}

std::vector<Morphism> run(const kernels::MapProblem& pr,
                          const HomSearchOptions& opts) {
  auto maps = opts.parallel ? kernels::search_maps_parallel(pr, opts.budget)
                            : kernels::search_maps_serial(pr, opts.budget);
  std::vector<Morphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back(Morphism{std::move(m)});
  return out;
}

}  // namespace

std::vector<Morphism> enumerate_homomorphisms(const SpecSemilattice& src,
                                              const SpecSemilattice& dst,
                                              const HomSearchOptions& opts) {
  return run(make_problem(src, dst, opts, false), opts);
}

std::vector<Morphism> enumerate_K_homomorphisms(const SpecSemilattice& src,
                                                const SpecSemilattice& dst,
                                                const HomSearchOptions& opts) {
  return run(make_problem(src, dst, opts, true), opts);
}

}  // namespace specsl
