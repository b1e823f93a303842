#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "specsl/core.hpp"

namespace specsl {

/// A total map between carriers, stored as the image of each source index.
struct Morphism {
  std::vector<int> map;

  int operator()(int a) const { return map[static_cast<std::size_t>(a)]; }
  int size() const noexcept { return static_cast<int>(map.size()); }
  bool operator==(const Morphism&) const = default;
};

/// x -> second(first(x)).
Morphism compose(const Morphism& first, const Morphism& second);
Morphism identity_morphism(int n);

// Defect names reported by the *_defect functions.
namespace defect {
inline constexpr const char* kShape = "shape";
inline constexpr const char* kJoin = "join";
inline constexpr const char* kSq = "sq";
inline constexpr const char* kZero = "zero";
inline constexpr const char* kInjective = "injective";
inline constexpr const char* kReflect = "reflect";
inline constexpr const char* kClosure = "K";
}  // namespace defect

/// First failure (in a fixed check order, least witness) of the
/// homomorphism conditions, or nullopt if `f` is a homomorphism.
std::optional<Violation> homomorphism_defect(const SpecSemilattice& src,
                                             const SpecSemilattice& dst,
                                             const Morphism& f,
                                             bool zero_preserving = false);
bool is_homomorphism(const SpecSemilattice& src, const SpecSemilattice& dst,
                     const Morphism& f, bool zero_preserving = false);

std::optional<Violation> embedding_defect(const SpecSemilattice& src,
                                          const SpecSemilattice& dst,
                                          const Morphism& f,
                                          bool zero_preserving = false);
bool is_embedding(const SpecSemilattice& src, const SpecSemilattice& dst,
                  const Morphism& f, bool zero_preserving = false);

/// Both structures must be principal (PreconditionError otherwise).
bool is_K_homomorphism(const SpecSemilattice& src, const SpecSemilattice& dst,
                       const Morphism& f);

struct HomSearchOptions {
  bool zero_preserving = false;
  /// Optional per-element pins: fixed[a] >= 0 forces f(a) = fixed[a].
  std::vector<int> fixed;
  std::uint64_t budget = 10'000'000;
  bool parallel = true;
};

/// All homomorphisms src -> dst, in lexicographic order of the map array.
std::vector<Morphism> enumerate_homomorphisms(const SpecSemilattice& src,
                                              const SpecSemilattice& dst,
                                              const HomSearchOptions& opts = {});
/// All K-homomorphisms between principal structures, lexicographic.
std::vector<Morphism> enumerate_K_homomorphisms(
    const SpecSemilattice& src, const SpecSemilattice& dst,
    const HomSearchOptions& opts = {});

}  // namespace specsl
