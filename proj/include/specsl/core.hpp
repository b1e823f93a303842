#pragma once

// Finite specialization semilattices (S, v, [=) and closure semilattices
// (S, v, K) over dense element indices 0..n-1.
//
// The join table is the only stored order information; a <= b is always
// computed as join(a, b) == b.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specsl/errors.hpp"

namespace specsl {

struct Violation {
  std::string axiom;
  std::vector<int> witness;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(const std::string& axiom) const;
  const Violation* find(const std::string& axiom) const;
  std::string summary() const;
};

/// Thrown by the validating factories. Carries the full report.
class InvalidStructure : public std::runtime_error {
 public:
  explicit InvalidStructure(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

class SpecSemilattice {
 public:
  SpecSemilattice() = default;

  /// Checks dimensions and index ranges, then every axiom. Throws
  /// StructuralError or InvalidStructure.
  static SpecSemilattice create(int n, std::vector<int> join,
                                std::vector<std::uint8_t> sq,
                                std::optional<int> zero);

  /// Structural checks only. Exists so that the validator can be pointed at
  /// structures that break the axioms.
  static SpecSemilattice unchecked(int n, std::vector<int> join,
                                   std::vector<std::uint8_t> sq,
                                   std::optional<int> zero);

  int size() const noexcept { return n_; }
  int join(int a, int b) const { return join_[index(a, b)]; }
  bool sq(int a, int b) const { return sq_[index(a, b)] != 0; }
  bool leq(int a, int b) const { return join(a, b) == b; }
  std::optional<int> zero() const noexcept { return zero_; }

  const std::vector<int>& join_table() const noexcept { return join_; }
  const std::vector<std::uint8_t>& sq_table() const noexcept { return sq_; }

  bool operator==(const SpecSemilattice&) const = default;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<int> join_;
  std::vector<std::uint8_t> sq_;
  std::optional<int> zero_;
};

class ClosureSemilattice {
 public:
  ClosureSemilattice() = default;

  /// Validates join laws and that K is extensive, idempotent and isotone;
  /// when a zero is given it must be join-neutral and K-closed.
  static ClosureSemilattice create(int n, std::vector<int> join,
                                   std::vector<int> closure,
                                   std::optional<int> zero);
  static ClosureSemilattice unchecked(int n, std::vector<int> join,
                                      std::vector<int> closure,
                                      std::optional<int> zero);

  int size() const noexcept { return n_; }
  int join(int a, int b) const {
    return join_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(b)];
  }
  int closure(int a) const { return k_[static_cast<std::size_t>(a)]; }
  bool leq(int a, int b) const { return join(a, b) == b; }
  std::optional<int> zero() const noexcept { return zero_; }

  const std::vector<int>& join_table() const noexcept { return join_; }
  const std::vector<int>& closure_table() const noexcept { return k_; }

  bool operator==(const ClosureSemilattice&) const = default;

 private:
  int n_ = 0;
  std::vector<int> join_;
  std::vector<int> k_;
  std::optional<int> zero_;
};

using Relation = std::vector<std::vector<bool>>;

// Axiom names used in reports.
namespace axiom {
inline constexpr const char* kJoinIdempotent = "join-idempotent";
inline constexpr const char* kJoinCommutative = "join-commutative";
inline constexpr const char* kJoinAssociative = "join-associative";
inline constexpr const char* kZeroNeutral = "zero-neutral";
inline constexpr const char* kS0 = "S0";
inline constexpr const char* kS1 = "S1";
inline constexpr const char* kS2 = "S2";
inline constexpr const char* kS3 = "S3";
inline constexpr const char* kS4 = "S4";
inline constexpr const char* kS7 = "S7";
inline constexpr const char* kExtensive = "K-extensive";
inline constexpr const char* kIdempotent = "K-idempotent";
inline constexpr const char* kIsotone = "K-isotone";
inline constexpr const char* kZeroClosed = "K-zero";
}  // namespace axiom

/// Every applicable axiom, each reported at most once with its
/// lexicographically least witness.
ValidationReport validate(const SpecSemilattice& s);
ValidationReport validate(const ClosureSemilattice& c);

/// True iff the witness of `v` still exhibits the failure on `s` / `c`.
bool replay(const SpecSemilattice& s, const Violation& v);
bool replay(const ClosureSemilattice& c, const Violation& v);

Relation induced_order(const SpecSemilattice& s);

/// a [= b and a1 [= b1 imply a v a1 [= b v b1, scanned over all quadruples.
ValidationReport check_s7(const SpecSemilattice& s);

/// The <=-maximum of {b : b [= a}, provided it is itself [= a.
std::optional<int> closure_of(const SpecSemilattice& s, int a);

bool is_principal(const SpecSemilattice& s);
/// Throws PreconditionError on non-principal input.
bool is_additive(const SpecSemilattice& s);
bool is_additive(const ClosureSemilattice& c);

/// Requires a valid principal structure; K[a] = closure_of(s, a).
ClosureSemilattice to_closure_semilattice(const SpecSemilattice& s);
/// Requires a valid closure semilattice; a [= b iff a <= K b.
SpecSemilattice from_closure_semilattice(const ClosureSemilattice& c);
/// Same mapping without validating either side.
SpecSemilattice specialization_of(const ClosureSemilattice& c);

}  // namespace specsl
