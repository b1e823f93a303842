#pragma once

// Builders for the standard examples and auxiliary constructions, plus the
// random corpus generator. Subsets of a ground set are bitmasks, and
// carriers of powerset-based structures are indexed by mask value.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specsl/core.hpp"
#include "specsl/morphisms.hpp"

namespace specsl {

using Mask = std::uint32_t;

/// Plain join semilattice, used as the source/target of a join map.
struct JoinTable {
  int n = 0;
  std::vector<int> join;

  int operator()(int a, int b) const {
    return join[static_cast<std::size_t>(a) * n + b];
  }
};

/// Powerset of a `ground_size`-element set with x [= y iff x is contained in
/// the smallest closed superset of y. `closed` must be intersection-closed
/// and contain the ground set. The empty set is the zero iff it is closed.
SpecSemilattice from_closure_space(int ground_size, std::span<const Mask> closed);

/// a [= b iff phi(a) <= phi(b) in the target semilattice.
SpecSemilattice from_semilattice_hom(const JoinTable& source,
                                     const JoinTable& target,
                                     std::span<const int> phi);

/// Powerset with x [= y iff x \ y lies in `ideal`.
SpecSemilattice mod_ideal(int ground_size, std::span<const Mask> ideal);

/// New bottom element appended at index n.
SpecSemilattice adjoin_zero(const SpecSemilattice& s);
ClosureSemilattice adjoin_zero(const ClosureSemilattice& c);
SpecSemilattice strip_zero(const SpecSemilattice& s);

struct Quotient {
  SpecSemilattice structure;
  Morphism projection;
};

/// Thrown when a partition is not a semilattice congruence or fails the
/// interpolation condition; the witness uses source element indices.
class QuotientError : public PreconditionError {
 public:
  QuotientError(const std::string& what, Violation v)
      : PreconditionError(what), violation_(std::move(v)) {}
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

inline constexpr const char* kCongruence = "congruence";
inline constexpr const char* kInterpolation = "interpolation";

/// `block[a]` names the class of a; any labelling works. Classes are
/// renumbered by least member.
Quotient quotient(const SpecSemilattice& s, std::span<const int> block);

/// Componentwise structure on S x T; (s, t) has index s * |T| + t.
SpecSemilattice product(const SpecSemilattice& s, const SpecSemilattice& t);

// Named examples.
SpecSemilattice chain(int n);                 // 0 < 1 < ... < n-1, [= is <=
SpecSemilattice truncated_naturals(int top);  // {0..top}, a [= b iff a = 0 or b > 0
SpecSemilattice counterexample_target();      // {0,1,2}, <= plus 2 [= 1
SpecSemilattice diamond();                    // 0, x, y, 1 with [= as <=
SpecSemilattice nonadditive_space();          // {p,q,r}: closed sets 0, p, q, r, X

/// "chain<k>", "N<k>", "T", "diamond", "nonadditive-space".
SpecSemilattice named_example(std::string_view name);
std::vector<std::string> named_example_ids();

/// Deterministic per seed; sizes 1..max_size (max_size <= 12); always has a
/// zero and always validates.
SpecSemilattice random_structure(std::uint64_t seed, int max_size);

}  // namespace specsl
