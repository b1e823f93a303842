#include "specsl/core.hpp"

#include <sstream>

namespace specsl {

namespace {

void check_shape(int n, const std::vector<int>& join, std::size_t aux_size,
                 std::size_t aux_expected, const char* aux_name,
                 std::optional<int> zero) {
  if (n < 0) throw StructuralError("element count must be non-negative");
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (join.size() != nn) {
    throw StructuralError("join table has " + std::to_string(join.size()) +
                          " entries, expected " + std::to_string(nn));
  }
  if (aux_size != aux_expected) {
    throw StructuralError(std::string(aux_name) + " table has " +
                          std::to_string(aux_size) + " entries, expected " +
                          std::to_string(aux_expected));
  }
  for (std::size_t i = 0; i < join.size(); ++i) {
    if (join[i] < 0 || join[i] >= n) {
      throw StructuralError("join entry " + std::to_string(i) +
                            " out of range: " + std::to_string(join[i]));
    }
  }
  if (zero && (*zero < 0 || *zero >= n)) {
    throw StructuralError("zero index out of range: " + std::to_string(*zero));
  }
}

// Join laws shared by both structure kinds. `J` is any callable join(a, b).
template <typename J>
void check_join_laws(int n, J join, ValidationReport& r) {
  for (int a = 0; a < n; ++a) {
    if (join(a, a) != a) {
      r.violations.push_back({axiom::kJoinIdempotent, {a}});
      break;
    }
  }
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (join(a, b) != join(b, a)) {
          r.violations.push_back({axiom::kJoinCommutative, {a, b}});
          return;
        }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (join(join(a, b), c) != join(a, join(b, c))) {
            r.violations.push_back({axiom::kJoinAssociative, {a, b, c}});
            return;
          }
  }();
}

template <typename J>
void check_zero_neutral(int n, J join, std::optional<int> zero,
                        ValidationReport& r) {
  if (!zero) return;
  for (int a = 0; a < n; ++a) {
    if (join(*zero, a) != a) {
      r.violations.push_back({axiom::kZeroNeutral, {a}});
      return;
    }
  }
}

bool witness_in_range(int n, const Violation& v, std::size_t arity) {
  if (v.witness.size() != arity) return false;
  for (int x : v.witness)
    if (x < 0 || x >= n) return false;
  return true;
}

}  // namespace

bool ValidationReport::has(const std::string& name) const {
  return find(name) != nullptr;
}

const Violation* ValidationReport::find(const std::string& name) const {
  for (const auto& v : violations)
    if (v.axiom == name) return &v;
  return nullptr;
}

std::string ValidationReport::summary() const {
  if (ok()) return "pass";
  std::ostringstream out;
  out << "fail:";
  for (const auto& v : violations) {
    out << ' ' << v.axiom << '(';
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out << ',';
      out << v.witness[i];
    }
    out << ')';
  }
  return out.str();
}

InvalidStructure::InvalidStructure(ValidationReport report)
    : std::runtime_error("invalid structure: " + report.summary()),
      report_(std::move(report)) {}

SpecSemilattice SpecSemilattice::unchecked(int n, std::vector<int> join,
                                           std::vector<std::uint8_t> sq,
                                           std::optional<int> zero) {
  const auto nn = static_cast<std::size_t>(n < 0 ? 0 : n) *
                  static_cast<std::size_t>(n < 0 ? 0 : n);
  check_shape(n, join, sq.size(), nn, "sq", zero);
  SpecSemilattice s;
  s.n_ = n;
  s.join_ = std::move(join);
  s.sq_ = std::move(sq);
  for (auto& x : s.sq_) x = x ? 1 : 0;
  s.zero_ = zero;
  return s;
}

SpecSemilattice SpecSemilattice::create(int n, std::vector<int> join,
                                        std::vector<std::uint8_t> sq,
                                        std::optional<int> zero) {
  auto s = unchecked(n, std::move(join), std::move(sq), zero);
  auto report = validate(s);
  if (!report.ok()) throw InvalidStructure(std::move(report));
  return s;
}

ClosureSemilattice ClosureSemilattice::unchecked(int n, std::vector<int> join,
                                                 std::vector<int> closure,
                                                 std::optional<int> zero) {
  check_shape(n, join, closure.size(), static_cast<std::size_t>(n < 0 ? 0 : n),
              "K", zero);
  for (std::size_t i = 0; i < closure.size(); ++i) {
    if (closure[i] < 0 || closure[i] >= n) {
      throw StructuralError("K entry " + std::to_string(i) +
                            " out of range: " + std::to_string(closure[i]));
    }
  }
  ClosureSemilattice c;
  c.n_ = n;
  c.join_ = std::move(join);
  c.k_ = std::move(closure);
  c.zero_ = zero;
  return c;
}

ClosureSemilattice ClosureSemilattice::create(int n, std::vector<int> join,
                                              std::vector<int> closure,
                                              std::optional<int> zero) {
  auto c = unchecked(n, std::move(join), std::move(closure), zero);
  auto report = validate(c);
  if (!report.ok()) throw InvalidStructure(std::move(report));
  return c;
}

ValidationReport validate(const SpecSemilattice& s) {
  ValidationReport r;
  const int n = s.size();
  auto join = [&](int a, int b) { return s.join(a, b); };
  check_join_laws(n, join, r);
  check_zero_neutral(n, join, s.zero(), r);

  if (auto z = s.zero()) {
    for (int a = 0; a < n; ++a) {
      if (s.sq(a, *z) && a != *z) {
        r.violations.push_back({axiom::kS0, {a}});
        break;
      }
    }
  }
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (s.leq(a, b) && !s.sq(a, b)) {
          r.violations.push_back({axiom::kS1, {a, b}});
          return;
        }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!s.sq(a, b)) continue;
        for (int c = 0; c < n; ++c)
          if (s.sq(b, c) && !s.sq(a, c)) {
            r.violations.push_back({axiom::kS2, {a, b, c}});
            return;
          }
      }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int a1 = 0; a1 < n; ++a1)
        for (int b = 0; b < n; ++b)
          if (s.sq(a, b) && s.sq(a1, b) && !s.sq(s.join(a, a1), b)) {
            r.violations.push_back({axiom::kS3, {a, a1, b}});
            return;
          }
  }();
  for (int a = 0; a < n; ++a) {
    if (!s.sq(a, a)) {
      r.violations.push_back({axiom::kS4, {a}});
      break;
    }
  }
  return r;
}

ValidationReport validate(const ClosureSemilattice& c) {
  ValidationReport r;
  const int n = c.size();
  auto join = [&](int a, int b) { return c.join(a, b); };
  check_join_laws(n, join, r);
  check_zero_neutral(n, join, c.zero(), r);
  for (int a = 0; a < n; ++a) {
    if (!c.leq(a, c.closure(a))) {
      r.violations.push_back({axiom::kExtensive, {a}});
      break;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (c.closure(c.closure(a)) != c.closure(a)) {
      r.violations.push_back({axiom::kIdempotent, {a}});
      break;
    }
  }
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!c.leq(c.join(c.closure(a), c.closure(b)),
                   c.closure(c.join(a, b)))) {
          r.violations.push_back({axiom::kIsotone, {a, b}});
          return;
        }
  }();
  if (auto z = c.zero(); z && c.closure(*z) != *z) {
    r.violations.push_back({axiom::kZeroClosed, {*z}});
  }
  return r;
}

bool replay(const SpecSemilattice& s, const Violation& v) {
  const int n = s.size();
  const auto& w = v.witness;
  const std::string& ax = v.axiom;
  if (ax == axiom::kJoinIdempotent)
    return witness_in_range(n, v, 1) && s.join(w[0], w[0]) != w[0];
  if (ax == axiom::kJoinCommutative)
    return witness_in_range(n, v, 2) && s.join(w[0], w[1]) != s.join(w[1], w[0]);
  if (ax == axiom::kJoinAssociative)
    return witness_in_range(n, v, 3) &&
           s.join(s.join(w[0], w[1]), w[2]) != s.join(w[0], s.join(w[1], w[2]));
  if (ax == axiom::kZeroNeutral)
    return s.zero() && witness_in_range(n, v, 1) &&
           s.join(*s.zero(), w[0]) != w[0];
  if (ax == axiom::kS0)
    return s.zero() && witness_in_range(n, v, 1) && s.sq(w[0], *s.zero()) &&
           w[0] != *s.zero();
  if (ax == axiom::kS1)
    return witness_in_range(n, v, 2) && s.leq(w[0], w[1]) && !s.sq(w[0], w[1]);
  if (ax == axiom::kS2)
    return witness_in_range(n, v, 3) && s.sq(w[0], w[1]) && s.sq(w[1], w[2]) &&
           !s.sq(w[0], w[2]);
  if (ax == axiom::kS3)
    return witness_in_range(n, v, 3) && s.sq(w[0], w[2]) && s.sq(w[1], w[2]) &&
           !s.sq(s.join(w[0], w[1]), w[2]);
  if (ax == axiom::kS4) return witness_in_range(n, v, 1) && !s.sq(w[0], w[0]);
  if (ax == axiom::kS7)
    return witness_in_range(n, v, 4) && s.sq(w[0], w[2]) && s.sq(w[1], w[3]) &&
           !s.sq(s.join(w[0], w[1]), s.join(w[2], w[3]));
  return false;
}

bool replay(const ClosureSemilattice& c, const Violation& v) {
  const int n = c.size();
  const auto& w = v.witness;
  const std::string& ax = v.axiom;
  if (ax == axiom::kJoinIdempotent)
    return witness_in_range(n, v, 1) && c.join(w[0], w[0]) != w[0];
  if (ax == axiom::kJoinCommutative)
    return witness_in_range(n, v, 2) && c.join(w[0], w[1]) != c.join(w[1], w[0]);
  if (ax == axiom::kJoinAssociative)
    return witness_in_range(n, v, 3) &&
           c.join(c.join(w[0], w[1]), w[2]) != c.join(w[0], c.join(w[1], w[2]));
  if (ax == axiom::kZeroNeutral)
    return c.zero() && witness_in_range(n, v, 1) &&
           c.join(*c.zero(), w[0]) != w[0];
  if (ax == axiom::kExtensive)
    return witness_in_range(n, v, 1) && !c.leq(w[0], c.closure(w[0]));
  if (ax == axiom::kIdempotent)
    return witness_in_range(n, v, 1) &&
           c.closure(c.closure(w[0])) != c.closure(w[0]);
  if (ax == axiom::kIsotone)
    return witness_in_range(n, v, 2) &&
           !c.leq(c.join(c.closure(w[0]), c.closure(w[1])),
                  c.closure(c.join(w[0], w[1])));
  if (ax == axiom::kZeroClosed)
    return c.zero() && witness_in_range(n, v, 1) && w[0] == *c.zero() &&
           c.closure(w[0]) != w[0];
  return false;
}

Relation induced_order(const SpecSemilattice& s) {
  const int n = s.size();
  Relation r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r[a][b] = s.leq(a, b);
  return r;
}

ValidationReport check_s7(const SpecSemilattice& s) {
  ValidationReport r;
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int a1 = 0; a1 < n; ++a1)
      for (int b = 0; b < n; ++b) {
        if (!s.sq(a, b)) continue;
        for (int b1 = 0; b1 < n; ++b1) {
          if (s.sq(a1, b1) && !s.sq(s.join(a, a1), s.join(b, b1))) {
            r.violations.push_back({axiom::kS7, {a, a1, b, b1}});
            return r;
          }
        }
      }
  return r;
}

std::optional<int> closure_of(const SpecSemilattice& s, int a) {
  if (a < 0 || a >= s.size())
    throw StructuralError("element index out of range: " + std::to_string(a));
  std::optional<int> acc;
  for (int b = 0; b < s.size(); ++b) {
    if (!s.sq(b, a)) continue;
    acc = acc ? s.join(*acc, b) : b;
  }
  if (!acc || !s.sq(*acc, a)) return std::nullopt;
  return acc;
}

bool is_principal(const SpecSemilattice& s) {
  for (int a = 0; a < s.size(); ++a)
    if (!closure_of(s, a)) return false;
  return true;
}

bool is_additive(const SpecSemilattice& s) {
  std::vector<int> k(static_cast<std::size_t>(s.size()));
  for (int a = 0; a < s.size(); ++a) {
    auto ka = closure_of(s, a);
    if (!ka) {
      throw PreconditionError("is_additive: closure of element " +
                              std::to_string(a) + " does not exist");
    }
    k[a] = *ka;
  }
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (k[s.join(a, b)] != s.join(k[a], k[b])) return false;
  return true;
}

bool is_additive(const ClosureSemilattice& c) {
  for (int a = 0; a < c.size(); ++a)
    for (int b = 0; b < c.size(); ++b)
      if (c.closure(c.join(a, b)) != c.join(c.closure(a), c.closure(b)))
        return false;
  return true;
}

ClosureSemilattice to_closure_semilattice(const SpecSemilattice& s) {
  if (auto r = validate(s); !r.ok()) throw InvalidStructure(std::move(r));
  std::vector<int> k(static_cast<std::size_t>(s.size()));
  for (int a = 0; a < s.size(); ++a) {
    auto ka = closure_of(s, a);
    if (!ka) {
      throw PreconditionError("to_closure_semilattice: element " +
                              std::to_string(a) + " has no closure");
    }
    k[a] = *ka;
  }
  return ClosureSemilattice::create(s.size(), s.join_table(), std::move(k),
                                    s.zero());
}

SpecSemilattice specialization_of(const ClosureSemilattice& c) {
  const int n = c.size();
  std::vector<std::uint8_t> sq(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      sq[static_cast<std::size_t>(a) * n + b] = c.leq(a, c.closure(b)) ? 1 : 0;
  return SpecSemilattice::unchecked(n, c.join_table(), std::move(sq), c.zero());
}

SpecSemilattice from_closure_semilattice(const ClosureSemilattice& c) {
  if (auto r = validate(c); !r.ok()) throw InvalidStructure(std::move(r));
  auto s = specialization_of(c);
  if (auto r = validate(s); !r.ok()) {
    throw InvariantViolation("closure semilattice induced an invalid "
                             "specialization: " + r.summary());
  }
  return s;
}

}  // namespace specsl
