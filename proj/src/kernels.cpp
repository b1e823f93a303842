#include "specsl/kernels.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specsl::kernels {

bool sim_pair(const SpecSemilattice& s, int a, int b, int c, int d) {
  if (!s.sq(b, d) || !s.sq(d, b)) return false;
  const int n = s.size();
  bool c_witness = false;
  for (int c1 = 0; c1 < n && !c_witness; ++c1)
    c_witness = s.sq(c1, d) && s.leq(a, s.join(c, c1));
  if (!c_witness) return false;
  for (int a1 = 0; a1 < n; ++a1)
    if (s.sq(a1, b) && s.leq(c, s.join(a, a1))) return true;
  return false;
}

namespace {

inline void fill_row(const SpecSemilattice& s, int p,
                     std::vector<std::uint8_t>& rel) {
  const int n = s.size();
  const int pairs = n * n;
  const int a = p / n, b = p % n;
  for (int q = 0; q < pairs; ++q) {
    rel[static_cast<std::size_t>(p) * pairs + q] =
        sim_pair(s, a, b, q / n, q % n) ? 1 : 0;
  }
}

inline std::optional<std::array<int, 3>> first_break_from(
    const std::vector<std::uint8_t>& rel, int size, int p) {
  const auto row = [&](int x) { return rel.data() + static_cast<std::size_t>(x) * size; };
  const auto* rp = row(p);
  for (int q = 0; q < size; ++q) {
    if (!rp[q]) continue;
    const auto* rq = row(q);
    for (int r = 0; r < size; ++r)
      if (rq[r] && !rp[r]) return std::array<int, 3>{p, q, r};
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::uint8_t> sim_matrix_serial(const SpecSemilattice& s) {
  const int pairs = s.size() * s.size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(pairs) * pairs);
  for (int p = 0; p < pairs; ++p) fill_row(s, p, rel);
  return rel;
}

std::vector<std::uint8_t> sim_matrix_parallel(const SpecSemilattice& s) {
  const int pairs = s.size() * s.size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(pairs) * pairs);
#pragma omp parallel for schedule(dynamic, 4)
  for (int p = 0; p < pairs; ++p) fill_row(s, p, rel);
  return rel;
}

std::optional<std::array<int, 3>> find_intransitive_serial(
    const std::vector<std::uint8_t>& rel, int size) {
  for (int p = 0; p < size; ++p)
    if (auto w = first_break_from(rel, size, p)) return w;
  return std::nullopt;
}

std::optional<std::array<int, 3>> find_intransitive_parallel(
    const std::vector<std::uint8_t>& rel, int size) {
  std::vector<std::optional<std::array<int, 3>>> per_row(
      static_cast<std::size_t>(size));
#pragma omp parallel for schedule(dynamic, 4)
  for (int p = 0; p < size; ++p) per_row[p] = first_break_from(rel, size, p);
  for (auto& w : per_row)
    if (w) return w;
  return std::nullopt;
}

namespace {

class MapSearch {
 public:
  MapSearch(const MapProblem& problem, std::uint64_t budget,
            std::atomic<std::uint64_t>& nodes, std::atomic<bool>& aborted)
      : pr_(problem), budget_(budget), nodes_(nodes), aborted_(aborted) {}

  bool consistent(const std::vector<int>& f, int i) const {
    const int m = pr_.target_size;
    for (const auto& c : pr_.join_checks[i])
      if (f[c.z] != pr_.target_join[static_cast<std::size_t>(f[c.x]) * m + f[c.y]])
        return false;
    for (const auto& c : pr_.sq_checks[i])
      if (!pr_.target_sq[static_cast<std::size_t>(f[c.x]) * m + f[c.y]]) return false;
    for (const auto& c : pr_.closure_checks[i])
      if (f[c.kx] != pr_.target_closure[f[c.x]]) return false;
    return true;
  }

  // Counts one node; false once the budget is gone.
  bool tick() {
    if (aborted_.load(std::memory_order_relaxed)) return false;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      aborted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void dfs(std::vector<int>& f, int i, std::vector<std::vector<int>>& out) {
    if (i == pr_.source_size) {
      out.push_back(f);
      return;
    }
    for (int v : pr_.domain[i]) {
      if (!tick()) return;
      f[i] = v;
      if (consistent(f, i)) dfs(f, i + 1, out);
    }
    f[i] = -1;
  }

 private:
  const MapProblem& pr_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& aborted_;
};

[[noreturn]] void throw_budget(std::uint64_t budget) {
  throw BudgetExceeded("map search exceeded its budget of " +
                       std::to_string(budget) + " candidate assignments");
}

}  // namespace

std::vector<std::vector<int>> search_maps_serial(const MapProblem& problem,
                                                 std::uint64_t budget) {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  MapSearch search(problem, budget, nodes, aborted);
  std::vector<int> f(static_cast<std::size_t>(problem.source_size), -1);
  std::vector<std::vector<int>> out;
  search.dfs(f, 0, out);
  if (aborted) throw_budget(budget);
  return out;
}

std::vector<std::vector<int>> search_maps_parallel(const MapProblem& problem,
                                                   std::uint64_t budget) {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  MapSearch search(problem, budget, nodes, aborted);
  const int n = problem.source_size;

  // Expand consistent prefixes breadth-first until there is enough work to
  // spread; the expansion visits exactly the nodes the serial DFS would.
  std::vector<std::vector<int>> frontier{std::vector<int>(static_cast<std::size_t>(n), -1)};
  int depth = 0;
  while (depth < n && frontier.size() < 256) {
    std::vector<std::vector<int>> next;
    for (auto& f : frontier) {
      for (int v : problem.domain[depth]) {
        if (!search.tick()) throw_budget(budget);
        f[depth] = v;
        if (search.consistent(f, depth)) next.push_back(f);
      }
    }
    frontier = std::move(next);
    ++depth;
  }

  std::vector<std::vector<std::vector<int>>> results(frontier.size());
  const int count = static_cast<int>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    std::vector<int> f = frontier[i];
    MapSearch local(problem, budget, nodes, aborted);
    local.dfs(f, depth, results[i]);
  }
  if (aborted) throw_budget(budget);

  std::vector<std::vector<int>> out;
  for (auto& r : results)
    for (auto& f : r) out.push_back(std::move(f));
  return out;
}

}  // namespace specsl::kernels
