#include "specsl/extension.hpp"

#include <string>

#include "specsl/constructions.hpp"
#include "specsl/disjoint_set.hpp"
#include "specsl/kernels.hpp"

namespace specsl {

namespace {

std::string pair_str(int pairs_per_row, int p) {
  return "(" + std::to_string(p / pairs_per_row) + "," +
         std::to_string(p % pairs_per_row) + ")";
}

[[noreturn]] void fail(const std::string& what) {
  throw InvariantViolation("extension: " + what);
}

// The relation must already be an equivalence and be compatible with K and
// with the componentwise join; nothing is closed up here.
void check_relation(const SpecSemilattice& s, const std::vector<std::uint8_t>& rel,
                    bool parallel) {
  const int n = s.size();
  const int pairs = n * n;
  auto related = [&](int p, int q) {
    return rel[static_cast<std::size_t>(p) * pairs + q] != 0;
  };
  auto pair_index = [n](int a, int b) { return a * n + b; };

  for (int p = 0; p < pairs; ++p) {
    if (!related(p, p)) fail("~ is not reflexive at " + pair_str(n, p));
    for (int q = p + 1; q < pairs; ++q)
      if (related(p, q) != related(q, p))
        fail("~ is not symmetric at " + pair_str(n, p) + ", " + pair_str(n, q));
  }
  auto broken = parallel ? kernels::find_intransitive_parallel(rel, pairs)
                         : kernels::find_intransitive_serial(rel, pairs);
  if (broken) {
    fail("~ is not transitive at " + pair_str(n, (*broken)[0]) + ", " +
         pair_str(n, (*broken)[1]) + ", " + pair_str(n, (*broken)[2]));
  }

  for (int p = 0; p < pairs; ++p)
    for (int q = 0; q < pairs; ++q) {
      if (!related(p, q)) continue;
      const int a = p / n, b = p % n, c = q / n, d = q % n;
      if (!related(pair_index(a, s.join(a, b)), pair_index(c, s.join(c, d))))
        fail("K is not well defined at " + pair_str(n, p) + ", " + pair_str(n, q));
      for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f)
          if (!related(pair_index(s.join(a, e), s.join(b, f)),
                       pair_index(s.join(c, e), s.join(d, f))))
            fail("~ is not a congruence at " + pair_str(n, p) + ", " +
                 pair_str(n, q) + " joined with (" + std::to_string(e) + "," +
                 std::to_string(f) + ")");
    }
}

void check_result(const ExtensionResult& ext) {
  const auto& base = ext.base;
  const auto& tilde = ext.tilde;
  const int n = base.size();
  const int z = *base.zero();
  const int m = tilde.size();

  if (m > n * n) fail("carrier larger than |S|^2");
  if (!is_additive(tilde)) fail("K is not additive");
  if (tilde.zero() != ext.pair_class(z, z)) fail("zero is not [0,0]");
  if (auto r = validate(ext.tilde_spec); !r.ok())
    fail("specialization structure invalid: " + r.summary());
  for (int x = 0; x < m; ++x) {
    auto kx = closure_of(ext.tilde_spec, x);
    if (!kx || *kx != tilde.closure(x))
      fail("K is not the maximum of {y : y [= x} at class " + std::to_string(x));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int cls = ext.pair_class(a, b);
      const int ab = base.join(a, b);
      if (tilde.closure(cls) != ext.pair_class(z, ab) ||
          tilde.closure(cls) != ext.pair_class(a, ab))
        fail("K[a,b] differs from [0,a v b] or [a,a v b] at (" +
             std::to_string(a) + "," + std::to_string(b) + ")");
      if (cls != tilde.join(ext.upsilon[a], tilde.closure(ext.upsilon[b])))
        fail("[a,b] differs from upsilon(a) v K upsilon(b)");
    }
  if (auto v = embedding_defect(base, ext.tilde_spec, Morphism{ext.upsilon}, true))
    fail("upsilon is not an embedding (" + v->axiom + ")");
}

}  // namespace

bool sim_related(const SpecSemilattice& s, ElementPair p, ElementPair q) {
  const int n = s.size();
  for (int x : {p.first, p.second, q.first, q.second})
    if (x < 0 || x >= n)
      throw StructuralError("sim_related: element index out of range");
  if (!s.zero()) throw PreconditionError("sim_related: structure needs a zero");
  return kernels::sim_pair(s, p.first, p.second, q.first, q.second);
}

ExtensionResult build_extension(const SpecSemilattice& s,
                                const ExtensionOptions& options) {
  if (auto r = validate(s); !r.ok()) throw InvalidStructure(std::move(r));

  ExtensionResult ext;
  ext.source = s;
  ext.adjoined_zero = !s.zero().has_value();
  ext.base = ext.adjoined_zero ? adjoin_zero(s) : s;
  const auto& base = ext.base;
  const int n = base.size();
  if (n > options.max_size) {
    throw BudgetExceeded("build_extension: |S| = " + std::to_string(n) +
                         " exceeds the size guard of " +
                         std::to_string(options.max_size));
  }
  const int pairs = n * n;
  const int z = *base.zero();

  const auto rel = options.parallel ? kernels::sim_matrix_parallel(base)
                                    : kernels::sim_matrix_serial(base);
  if (options.verify) check_relation(base, rel, options.parallel);

  DisjointSet dsu(pairs);
  for (int p = 0; p < pairs; ++p)
    for (int q = p + 1; q < pairs; ++q)
      if (rel[static_cast<std::size_t>(p) * pairs + q]) dsu.unite(p, q);

  std::vector<int> root_class(static_cast<std::size_t>(pairs), -1);
  ext.class_of.resize(static_cast<std::size_t>(pairs));
  for (int p = 0; p < pairs; ++p) {
    int& cls = root_class[dsu.find(p)];
    if (cls < 0) {
      cls = static_cast<int>(ext.reps.size());
      ext.reps.push_back({p / n, p % n});
    }
    ext.class_of[p] = cls;
  }

  const int m = static_cast<int>(ext.reps.size());
  std::vector<int> join(static_cast<std::size_t>(m) * m);
  std::vector<int> k(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    const auto [a, b] = ext.reps[x];
    k[x] = ext.pair_class(a, base.join(a, b));
    for (int y = 0; y < m; ++y) {
      const auto [c, d] = ext.reps[y];
      join[static_cast<std::size_t>(x) * m + y] =
          ext.pair_class(base.join(a, c), base.join(b, d));
    }
  }
  try {
    ext.tilde = ClosureSemilattice::create(m, std::move(join), std::move(k),
                                           ext.pair_class(z, z));
  } catch (const InvalidStructure& e) {
    fail(std::string("quotient is not a closure semilattice: ") + e.what());
  }
  ext.tilde_spec = specialization_of(ext.tilde);
  ext.upsilon.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) ext.upsilon[a] = ext.pair_class(a, z);

  if (options.verify) check_result(ext);
  return ext;
}

ZeroFreeExtension zero_free_view(const ExtensionResult& ext) {
  if (!ext.adjoined_zero)
    throw PreconditionError("zero_free_view: extension was built on a structure with zero");
  const int z = *ext.base.zero();
  const int m = ext.tilde.size() - 1;
  if (ext.pair_class(z, z) != m)
    throw StructuralError("zero_free_view: [0,0] is not the last class");

  std::vector<int> join(static_cast<std::size_t>(m) * m);
  std::vector<int> k(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    k[x] = ext.tilde.closure(x);
    for (int y = 0; y < m; ++y) join[static_cast<std::size_t>(x) * m + y] = ext.tilde.join(x, y);
  }
  ZeroFreeExtension view;
  view.tilde = ClosureSemilattice::unchecked(m, std::move(join), std::move(k), std::nullopt);
  view.tilde_spec = specialization_of(view.tilde);
  const int n = ext.source.size();
  view.upsilon.assign(ext.upsilon.begin(), ext.upsilon.begin() + n);
  view.class_of.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) view.class_of[static_cast<std::size_t>(a) * n + b] = ext.pair_class(a, b);
  return view;
}

namespace {

void require_additive_target(const ClosureSemilattice& t, const char* who) {
  if (auto r = validate(t); !r.ok())
    throw PreconditionError(std::string(who) + ": target is not a closure semilattice: " +
                            r.summary());
  if (!is_additive(t))
    throw PreconditionError(std::string(who) + ": target closure is not additive");
}

// eta(a) v K eta(b) on every class representative.
std::vector<int> closed_form(const ExtensionResult& ext, const ClosureSemilattice& t,
                             const std::vector<int>& eta) {
  std::vector<int> g(ext.reps.size());
  for (std::size_t x = 0; x < ext.reps.size(); ++x) {
    const auto [a, b] = ext.reps[x];
    g[x] = t.join(eta[a], t.closure(eta[b]));
  }
  return g;
}

}  // namespace

Morphism lift_homomorphism(const ExtensionResult& ext, const ClosureSemilattice& t,
                           const Morphism& eta) {
  require_additive_target(t, "lift_homomorphism");
  const auto t_spec = specialization_of(t);
  if (auto v = homomorphism_defect(ext.source, t_spec, eta)) {
    throw NotAHomomorphism("lift_homomorphism: eta is not a homomorphism (" +
                               v->axiom + ")",
                           v->witness);
  }

  if (!ext.adjoined_zero) {
    const int ez = eta(*ext.base.zero());
    if (t.closure(ez) != ez) {
      throw PreconditionError(
          "lift_homomorphism: the image of zero is not closed in the target, "
          "so no K-homomorphism can restrict to eta");
    }
    return Morphism{closed_form(ext, t, eta.map)};
  }

  const auto t0 = adjoin_zero(t);
  auto eta0 = eta.map;
  eta0.push_back(*t0.zero());
  auto g = closed_form(ext, t0, eta0);
  if (g.back() != *t0.zero()) fail("[0,0] not sent to the adjoined zero");
  g.pop_back();
  for (int v : g)
    if (v == *t0.zero()) fail("nonzero class sent to the adjoined zero");
  return Morphism{std::move(g)};
}

Morphism lift_functorial(const ExtensionResult& ext_s, const ExtensionResult& ext_u,
                         const Morphism& psi) {
  if (ext_s.adjoined_zero || ext_u.adjoined_zero)
    throw PreconditionError("lift_functorial: both structures need a zero");
  if (auto v = homomorphism_defect(ext_s.source, ext_u.source, psi, true)) {
    throw NotAHomomorphism("lift_functorial: psi is not a 0-preserving homomorphism (" +
                               v->axiom + ")",
                           v->witness);
  }
  const Morphism eta = compose(psi, Morphism{ext_u.upsilon});
  return lift_homomorphism(ext_s, ext_u.tilde, eta);
}

UniversalityReport check_universal_property(const ExtensionResult& ext,
                                            const ClosureSemilattice& t,
                                            const HomSearchOptions& search) {
  require_additive_target(t, "check_universal_property");
  const auto t_spec = specialization_of(t);

  SpecSemilattice carrier;
  std::vector<int> ups;
  if (ext.adjoined_zero) {
    auto view = zero_free_view(ext);
    carrier = std::move(view.tilde_spec);
    ups = std::move(view.upsilon);
  } else {
    carrier = specialization_of(ext.tilde);
    ups = ext.upsilon;
  }

  HomSearchOptions outer = search;
  outer.fixed.clear();
  outer.zero_preserving = false;
  const auto homs = enumerate_homomorphisms(ext.source, t_spec, outer);

  UniversalityReport report;
  report.homomorphisms = static_cast<int>(homs.size());
  auto reject = [&](const Morphism& eta, int count, std::string why) {
    report.holds = false;
    report.counterexample = eta;
    report.counterexample_factorizations = count;
    report.reason = std::move(why);
  };

  for (const auto& eta : homs) {
    const bool liftable =
        ext.adjoined_zero || t.closure(eta(*ext.base.zero())) == eta(*ext.base.zero());
    if (liftable) ++report.liftable;

    HomSearchOptions inner = search;
    inner.zero_preserving = false;
    inner.fixed.assign(static_cast<std::size_t>(carrier.size()), -1);
    bool pins_conflict = false;
    for (int a = 0; a < ext.source.size(); ++a) {
      int& pin = inner.fixed[ups[a]];
      if (pin >= 0 && pin != eta(a)) pins_conflict = true;
      pin = eta(a);
    }

    std::vector<Morphism> factorizations;
    if (!pins_conflict) {
      try {
        factorizations = enumerate_K_homomorphisms(carrier, t_spec, inner);
      } catch (const PreconditionError& e) {
        reject(eta, 0, std::string("extension is not principal: ") + e.what());
        return report;
      }
    }
    const int expected = liftable ? 1 : 0;
    const int found = static_cast<int>(factorizations.size());
    if (found != expected) {
      reject(eta, found,
             "expected " + std::to_string(expected) +
                 " K-homomorphic factorization(s), found " + std::to_string(found));
      return report;
    }
    if (found == 1 && factorizations.front() != lift_homomorphism(ext, t, eta)) {
      reject(eta, 1, "the unique factorization differs from the closed-form lift");
      return report;
    }
  }
  return report;
}

}  // namespace specsl
