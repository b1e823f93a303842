#include "specsl/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>

namespace specsl {

namespace {

constexpr int kMaxGround = 8;

int carrier_size(int ground_size) {
  if (ground_size < 0 || ground_size > kMaxGround) {
    throw PreconditionError("ground set size must be in [0, " +
                            std::to_string(kMaxGround) + "]");
  }
  return 1 << ground_size;
}

void check_masks(int ground_size, std::span<const Mask> masks, const char* what) {
  const Mask full = (Mask{1} << ground_size) - 1;
  for (Mask m : masks)
    if (m & ~full)
      throw StructuralError(std::string(what) + " contains a mask outside the ground set");
}

std::vector<int> union_table(int size) {
  std::vector<int> join(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) join[static_cast<std::size_t>(a) * size + b] = a | b;
  return join;
}

std::size_t at(int n, int a, int b) { return static_cast<std::size_t>(a) * n + b; }

bool join_laws_hold(const JoinTable& t) {
  for (int a = 0; a < t.n; ++a) {
    if (t(a, a) != a) return false;
    for (int b = 0; b < t.n; ++b) {
      if (t(a, b) != t(b, a)) return false;
      for (int c = 0; c < t.n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
    }
  }
  return true;
}

}  // namespace

SpecSemilattice from_closure_space(int ground_size, std::span<const Mask> closed) {
  const int size = carrier_size(ground_size);
  check_masks(ground_size, closed, "closed-set family");
  const Mask full = static_cast<Mask>(size - 1);
  const std::set<Mask> family(closed.begin(), closed.end());
  if (!family.count(full))
    throw PreconditionError("closed-set family must contain the ground set");
  for (Mask x : family)
    for (Mask y : family)
      if (!family.count(x & y))
        throw PreconditionError("closed-set family is not closed under intersection");

  std::vector<Mask> k(static_cast<std::size_t>(size));
  for (int y = 0; y < size; ++y) {
    Mask acc = full;
    for (Mask c : family)
      if ((c & static_cast<Mask>(y)) == static_cast<Mask>(y)) acc &= c;
    k[y] = acc;
  }
  std::vector<std::uint8_t> sq(static_cast<std::size_t>(size) * size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      sq[at(size, x, y)] = (static_cast<Mask>(x) & ~k[y]) == 0 ? 1 : 0;
  std::optional<int> zero;
  if (family.count(0)) zero = 0;
  return SpecSemilattice::create(size, union_table(size), std::move(sq), zero);
}

SpecSemilattice from_semilattice_hom(const JoinTable& source,
                                     const JoinTable& target,
                                     std::span<const int> phi) {
  const int n = source.n;
  if (static_cast<int>(source.join.size()) != n * n ||
      static_cast<int>(target.join.size()) != target.n * target.n ||
      static_cast<int>(phi.size()) != n)
    throw StructuralError("from_semilattice_hom: table dimensions mismatch");
  for (int v : phi)
    if (v < 0 || v >= target.n) throw StructuralError("phi value out of range");
  for (int v : source.join)
    if (v < 0 || v >= n) throw StructuralError("source join entry out of range");
  for (int v : target.join)
    if (v < 0 || v >= target.n) throw StructuralError("target join entry out of range");
  if (!join_laws_hold(source) || !join_laws_hold(target))
    throw PreconditionError("from_semilattice_hom: join table is not a semilattice");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi[source(a, b)] != target(phi[a], phi[b]))
        throw PreconditionError("phi is not a join-homomorphism at (" +
                                std::to_string(a) + "," + std::to_string(b) + ")");

  std::vector<std::uint8_t> sq(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      sq[at(n, a, b)] = target(phi[a], phi[b]) == phi[b] ? 1 : 0;

  std::optional<int> zero;
  for (int z = 0; z < n && !zero; ++z) {
    bool neutral = true;
    for (int a = 0; a < n && neutral; ++a) neutral = source(z, a) == a;
    if (neutral) zero = z;
  }
  if (zero) {
    for (int x = 0; x < n; ++x)
      if (x != *zero && phi[x] == phi[*zero]) {
        zero.reset();
        break;
      }
  }
  return SpecSemilattice::create(n, source.join, std::move(sq), zero);
}

SpecSemilattice mod_ideal(int ground_size, std::span<const Mask> ideal) {
  const int size = carrier_size(ground_size);
  check_masks(ground_size, ideal, "ideal");
  const std::set<Mask> members(ideal.begin(), ideal.end());
  if (!members.count(0)) throw PreconditionError("ideal must contain the empty set");
  for (Mask x : members) {
    for (Mask y : members)
      if (!members.count(x | y)) throw PreconditionError("ideal is not union-closed");
    for (Mask sub = x;; sub = (sub - 1) & x) {
      if (!members.count(sub)) throw PreconditionError("ideal is not downward closed");
      if (sub == 0) break;
    }
  }
  std::vector<std::uint8_t> sq(static_cast<std::size_t>(size) * size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      sq[at(size, x, y)] =
          members.count(static_cast<Mask>(x) & ~static_cast<Mask>(y)) ? 1 : 0;
  std::optional<int> zero;
  if (members.size() == 1) zero = 0;
  return SpecSemilattice::create(size, union_table(size), std::move(sq), zero);
}

SpecSemilattice adjoin_zero(const SpecSemilattice& s) {
  const int n = s.size();
  const int m = n + 1;
  std::vector<int> join(static_cast<std::size_t>(m) * m);
  std::vector<std::uint8_t> sq(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == n) {
        join[at(m, a, b)] = b;
        sq[at(m, a, b)] = 1;
      } else if (b == n) {
        join[at(m, a, b)] = a;
        sq[at(m, a, b)] = 0;
      } else {
        join[at(m, a, b)] = s.join(a, b);
        sq[at(m, a, b)] = s.sq(a, b);
      }
    }
  return SpecSemilattice::create(m, std::move(join), std::move(sq), n);
}

ClosureSemilattice adjoin_zero(const ClosureSemilattice& c) {
  const int n = c.size();
  const int m = n + 1;
  std::vector<int> join(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      join[at(m, a, b)] = a == n ? b : b == n ? a : c.join(a, b);
  std::vector<int> k = c.closure_table();
  k.push_back(n);
  return ClosureSemilattice::create(m, std::move(join), std::move(k), n);
}

SpecSemilattice strip_zero(const SpecSemilattice& s) {
  if (!s.zero()) throw PreconditionError("strip_zero: structure has no zero");
  const int z = *s.zero();
  const int m = s.size() - 1;
  auto old = [z](int i) { return i < z ? i : i + 1; };
  auto fresh = [z](int i) { return i < z ? i : i - 1; };
  std::vector<int> join(static_cast<std::size_t>(m) * m);
  std::vector<std::uint8_t> sq(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int j = s.join(old(a), old(b));
      if (j == z) throw InvariantViolation("strip_zero: join of nonzero elements is zero");
      join[at(m, a, b)] = fresh(j);
      sq[at(m, a, b)] = s.sq(old(a), old(b));
    }
  return SpecSemilattice::create(m, std::move(join), std::move(sq), std::nullopt);
}

Quotient quotient(const SpecSemilattice& s, std::span<const int> block) {
  const int n = s.size();
  if (static_cast<int>(block.size()) != n)
    throw StructuralError("quotient: partition has wrong length");

  // Renumber classes by least member.
  std::vector<int> cls(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> seen;  // (label, class)
  int classes = 0;
  for (int a = 0; a < n; ++a) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& e) { return e.first == block[a]; });
    if (it == seen.end()) {
      seen.emplace_back(block[a], classes);
      cls[a] = classes++;
    } else {
      cls[a] = it->second;
    }
  }

  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      if (cls[a] != cls[a2]) continue;
      for (int c = 0; c < n; ++c)
        if (cls[s.join(a, c)] != cls[s.join(a2, c)])
          throw QuotientError("partition is not a semilattice congruence",
                              {kCongruence, {a, a2, c}});
    }

  // related[A][C]: some member of A is [= some member of C.
  std::vector<std::uint8_t> related(static_cast<std::size_t>(classes) * classes);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (s.sq(a, c)) related[at(classes, cls[a], cls[c])] = 1;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!s.sq(a, b)) continue;
      for (int b1 = 0; b1 < n; ++b1) {
        if (cls[b1] != cls[b]) continue;
        for (int c = 0; c < n; ++c)
          if (s.sq(b1, c) && !related[at(classes, cls[a], cls[c])])
            throw QuotientError("partition fails the interpolation condition",
                                {kInterpolation, {a, b, b1, c}});
      }
    }

  std::vector<int> rep(static_cast<std::size_t>(classes), -1);
  for (int a = 0; a < n; ++a)
    if (rep[cls[a]] < 0) rep[cls[a]] = a;
  std::vector<int> join(static_cast<std::size_t>(classes) * classes);
  for (int x = 0; x < classes; ++x)
    for (int y = 0; y < classes; ++y)
      join[at(classes, x, y)] = cls[s.join(rep[x], rep[y])];

  std::optional<int> zero;
  if (auto z = s.zero()) {
    zero = cls[*z];
    for (int x = 0; x < classes; ++x)
      if (x != *zero && related[at(classes, x, *zero)]) {
        zero.reset();
        break;
      }
  }
  auto q = SpecSemilattice::create(classes, std::move(join), std::move(related), zero);
  return Quotient{std::move(q), Morphism{std::move(cls)}};
}

SpecSemilattice product(const SpecSemilattice& s, const SpecSemilattice& t) {
  const int n = s.size(), m = t.size();
  const int size = n * m;
  std::vector<int> join(static_cast<std::size_t>(size) * size);
  std::vector<std::uint8_t> sq(static_cast<std::size_t>(size) * size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      const int xs = x / m, xt = x % m, ys = y / m, yt = y % m;
      join[at(size, x, y)] = s.join(xs, ys) * m + t.join(xt, yt);
      sq[at(size, x, y)] = s.sq(xs, ys) && t.sq(xt, yt);
    }
  std::optional<int> zero;
  if (s.zero() && t.zero()) zero = *s.zero() * m + *t.zero();
  return SpecSemilattice::create(size, std::move(join), std::move(sq), zero);
}

SpecSemilattice chain(int n) {
  if (n < 1) throw PreconditionError("chain length must be positive");
  std::vector<int> join(static_cast<std::size_t>(n) * n);
  std::vector<std::uint8_t> sq(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      join[at(n, a, b)] = std::max(a, b);
      sq[at(n, a, b)] = a <= b;
    }
  return SpecSemilattice::create(n, std::move(join), std::move(sq), 0);
}

SpecSemilattice truncated_naturals(int top) {
  if (top < 0) throw PreconditionError("truncated_naturals: negative top");
  const int n = top + 1;
  std::vector<int> join(static_cast<std::size_t>(n) * n);
  std::vector<std::uint8_t> sq(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      join[at(n, a, b)] = std::max(a, b);
      sq[at(n, a, b)] = a == 0 || b > 0;
    }
  return SpecSemilattice::create(n, std::move(join), std::move(sq), 0);
}

SpecSemilattice counterexample_target() {
  auto c = chain(3);
  auto sq = c.sq_table();
  sq[at(3, 2, 1)] = 1;
  return SpecSemilattice::create(3, c.join_table(), std::move(sq), 0);
}

SpecSemilattice diamond() {
  // 0 = bottom, 1 = x, 2 = y, 3 = top
  std::vector<int> join = {0, 1, 2, 3,  //
                           1, 1, 3, 3,  //
                           2, 3, 2, 3,  //
                           3, 3, 3, 3};
  std::vector<std::uint8_t> sq(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) sq[at(4, a, b)] = join[at(4, a, b)] == b;
  return SpecSemilattice::create(4, std::move(join), std::move(sq), 0);
}

SpecSemilattice nonadditive_space() {
  const Mask closed[] = {0b000, 0b001, 0b010, 0b100, 0b111};
  return from_closure_space(3, closed);
}

SpecSemilattice named_example(std::string_view name) {
  auto numeric_suffix = [&](std::string_view prefix) -> std::optional<int> {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix)
      return std::nullopt;
    int value = 0;
    auto rest = name.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) return std::nullopt;
    return value;
  };
  if (name == "T") return counterexample_target();
  if (name == "diamond") return diamond();
  if (name == "nonadditive-space") return nonadditive_space();
  if (auto k = numeric_suffix("chain"); k && *k >= 1 && *k <= 64) return chain(*k);
  if (auto k = numeric_suffix("N"); k && *k >= 0 && *k <= 63) return truncated_naturals(*k);
  throw StructuralError("unknown named example: " + std::string(name));
}

std::vector<std::string> named_example_ids() {
  return {"chain1", "chain2", "chain3", "N1", "N2", "N3", "T", "diamond",
          "nonadditive-space"};
}

SpecSemilattice random_structure(std::uint64_t seed, int max_size) {
  if (max_size < 1 || max_size > 12)
    throw PreconditionError("random_structure: max_size must be in [1, 12]");
  constexpr int kGround = 16;
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  // A union-closed family of exactly `target` subsets containing the empty set.
  const int target = uniform(1, max_size);
  std::vector<Mask> family{0};
  const Mask gen_mask = (Mask{1} << uniform(1, 5)) - 1;
  for (int attempt = 0; static_cast<int>(family.size()) < target && attempt < 64; ++attempt) {
    const Mask gen = static_cast<Mask>(rng()) & gen_mask;
    std::vector<Mask> grown = family;
    for (Mask f : family)
      if (std::find(grown.begin(), grown.end(), f | gen) == grown.end())
        grown.push_back(f | gen);
    if (static_cast<int>(grown.size()) <= target) family = std::move(grown);
  }
  while (static_cast<int>(family.size()) < target) {
    // A strict superset of everything adds exactly one element.
    Mask all = 0;
    for (Mask f : family) all |= f;
    Mask fresh = 1;
    while (all & fresh) fresh <<= 1;
    family.push_back(all | fresh);
  }
  std::sort(family.begin(), family.end());

  // Direct image along a random map of ground points is a join map that
  // sends only the empty set to the empty set, so the zero survives.
  const int image_bits = uniform(1, 4);
  std::vector<int> point_map(kGround);
  for (auto& p : point_map) p = uniform(0, image_bits - 1);
  auto image = [&](Mask x) {
    Mask out = 0;
    for (int i = 0; i < kGround; ++i)
      if (x & (Mask{1} << i)) out |= Mask{1} << point_map[i];
    return out;
  };

  const int n = static_cast<int>(family.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);  // order[i] = family index at slot i
  std::vector<int> slot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) slot[order[i]] = i;
  auto index_of = [&](Mask m) {
    return slot[std::lower_bound(family.begin(), family.end(), m) - family.begin()];
  };

  std::vector<int> join(static_cast<std::size_t>(n) * n);
  std::vector<std::uint8_t> sq(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Mask x = family[order[i]], y = family[order[j]];
      join[at(n, i, j)] = index_of(x | y);
      const Mask fx = image(x), fy = image(y);
      sq[at(n, i, j)] = (fx & ~fy) == 0;
    }
  return SpecSemilattice::create(n, std::move(join), std::move(sq), index_of(0));
}

}  // namespace specsl
