#pragma once

// The universal additive closure extension of a specialization semilattice.
//
// Pairs (a, b) of S x S stand for "a v K b" with K a freshly introduced
// closure. Two pairs are identified when
//
//   b [= d, d [= b, and there are a1 [= b, c1 [= d with
//   a <= c v c1 and c <= a v a1.
//
// The classes form an additive closure semilattice under the componentwise
// join with K[a,b] = [a, a v b], and a -> [a, 0] embeds S into it. Any
// specialization homomorphism eta from S into a principal additive T factors
// uniquely through that embedding by a K-homomorphism, namely
// [a,b] -> eta(a) v K eta(b).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specsl/core.hpp"
#include "specsl/morphisms.hpp"

namespace specsl {

struct ElementPair {
  int first = 0;
  int second = 0;

  auto operator<=>(const ElementPair&) const = default;
};

struct ExtensionOptions {
  /// Largest accepted |S| (after adjoining a zero, if needed).
  int max_size = 12;
  bool parallel = true;
  /// Re-check every structural claim about the result at runtime.
  bool verify = true;
};

struct ExtensionResult {
  /// The structure that was passed in.
  SpecSemilattice source;
  /// `source`, or `source` with a zero appended when it had none.
  SpecSemilattice base;
  bool adjoined_zero = false;

  ClosureSemilattice tilde;
  SpecSemilattice tilde_spec;
  /// Over base elements: upsilon[a] = class of (a, 0).
  std::vector<int> upsilon;
  /// base.size() x base.size(), row-major.
  std::vector<int> class_of;
  /// Least pair of each class; classes are numbered in order of these.
  std::vector<ElementPair> reps;

  int pair_class(int a, int b) const {
    return class_of[static_cast<std::size_t>(a) * base.size() + b];
  }
};

/// For an extension built on an adjoined zero: the same classes minus
/// [0,0], which is always the last class. Indices of the other classes are
/// unchanged.
struct ZeroFreeExtension {
  ClosureSemilattice tilde;
  SpecSemilattice tilde_spec;
  std::vector<int> upsilon;   // over source elements
  std::vector<int> class_of;  // source.size() x source.size()
};

/// (a,b) ~ (c,d). Requires a valid structure with a zero.
bool sim_related(const SpecSemilattice& s, ElementPair p, ElementPair q);

/// Throws InvalidStructure on invalid input, BudgetExceeded above
/// options.max_size, InvariantViolation if a runtime check on the result
/// fails.
ExtensionResult build_extension(const SpecSemilattice& s,
                                const ExtensionOptions& options = {});

ZeroFreeExtension zero_free_view(const ExtensionResult& ext);

/// eta: S -> T (T's specialization structure) lifted to the extension:
/// [a,b] -> eta(a) v K eta(b). For a zero-less source the result is indexed
/// by the zero-free view. Throws NotAHomomorphism if eta is not a
/// homomorphism, PreconditionError if T is not additive or eta(0) is not
/// K-closed in T.
Morphism lift_homomorphism(const ExtensionResult& ext, const ClosureSemilattice& t,
                           const Morphism& eta);

/// The map extS.tilde -> extU.tilde induced by a 0-preserving homomorphism
/// psi: S -> U.
Morphism lift_functorial(const ExtensionResult& ext_s, const ExtensionResult& ext_u,
                         const Morphism& psi);

struct UniversalityReport {
  bool holds = true;
  int homomorphisms = 0;  // eta: S -> T examined
  int liftable = 0;       // of those, with eta(0) K-closed in T
  /// First eta (lexicographic) whose factorizations are wrong.
  std::optional<Morphism> counterexample;
  int counterexample_factorizations = 0;
  std::string reason;
};

/// Enumerates every homomorphism eta: S -> T and every K-homomorphism
/// g: S~ -> T with g(upsilon(a)) = eta(a). Holds iff each eta with eta(0)
/// K-closed has exactly one such g and it equals lift_homomorphism(eta),
/// and every other eta has none. `ext` is used as given, so a tampered
/// table is detected rather than rebuilt.
UniversalityReport check_universal_property(const ExtensionResult& ext,
                                            const ClosureSemilattice& t,
                                            const HomSearchOptions& search = {});

}  // namespace specsl
