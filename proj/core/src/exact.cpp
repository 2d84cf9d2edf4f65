#include "minvc/exact.hpp"

#include <algorithm>
#include <cassert>

#include "minvc/lp.hpp"

namespace minvc {

namespace {

// Max-degree greedy cover with redundancy cleanup; the starting incumbent.
std::vector<int> greedy_cover(const Graph& g) {
  const int n = g.num_vertices();
  auto adj = g.adjacency();
  std::vector<int> degree = g.degrees();
  std::vector<char> in_cover(n, 0);
  long uncovered = static_cast<long>(g.num_edges());
  while (uncovered > 0) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!in_cover[v] && degree[v] > 0 && (best == -1 || degree[v] > degree[best]))
        best = v;
    }
    in_cover[best] = 1;
    for (int w : adj[best]) {
      if (!in_cover[w]) {
        --degree[w];
        --uncovered;
      }
    }
    degree[best] = 0;
  }
  // drop vertices whose edges are all covered by others
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!in_cover[v]) continue;
      bool redundant = true;
      for (int w : adj[v]) {
        if (!in_cover[w]) {
          redundant = false;
          break;
        }
      }
      if (redundant) {
        in_cover[v] = 0;
        changed = true;
      }
    }
  }
  std::vector<int> cover;
  for (int v = 0; v < n; ++v)
    if (in_cover[v]) cover.push_back(v);
  return cover;
}

struct Search {
  const ExactOptions& opts;
  long nodes = 0;
  bool budget_hit = false;
  int best_size;
  std::vector<int> best_cover;  // original vertex ids
  std::vector<int> chosen;      // in-cover vertices along the current path

  explicit Search(const ExactOptions& o, std::vector<int> initial)
      : opts(o), best_size(static_cast<int>(initial.size())),
        best_cover(std::move(initial)) {}

  void accept_candidate(int size) {
    if (size < best_size) {
      best_size = size;
      best_cover = chosen;
    }
  }

  // sub is the residual graph; orig_of maps its vertices back to g.
  void dfs(const Graph& sub, const std::vector<int>& orig_of, int base) {
    if (opts.node_budget > 0 && nodes >= opts.node_budget) {
      budget_hit = true;
      return;
    }
    ++nodes;

    LpSolution lp = solve_lp_relaxation(sub);
    const int bound = base + (lp.doubled_total() + 1) / 2;
    if (bound >= best_size) return;

    const std::size_t mark = chosen.size();
    Graph work;
    std::vector<int> work_orig;
    int fixed = base;
    if (opts.nt_fixing || lp.half_set.empty()) {
      for (int v : lp.ones_set) chosen.push_back(orig_of[v]);
      fixed += static_cast<int>(lp.ones_set.size());
      if (lp.half_set.empty()) {
        accept_candidate(fixed);
        chosen.resize(mark);
        return;
      }
      work = sub.induced_subgraph(lp.half_set);
      work_orig.reserve(lp.half_set.size());
      for (int v : lp.half_set) work_orig.push_back(orig_of[v]);
    } else {
      work = sub;
      work_orig = orig_of;
    }

    // branch vertex: maximum degree inside the half set, lowest index first
    std::vector<int> degree = work.degrees();
    int v = -1;
    if (opts.nt_fixing) {
      for (int u = 0; u < work.num_vertices(); ++u) {
        if (v == -1 || degree[u] > degree[v]) v = u;
      }
    } else {
      for (int u : lp.half_set) {  // work == sub here
        if (v == -1 || degree[u] > degree[v]) v = u;
      }
    }
    assert(v >= 0);

    auto adj = work.adjacency();
    const int nw = work.num_vertices();

    // branch 1: v joins the cover
    {
      std::vector<int> keep;
      keep.reserve(nw - 1);
      for (int u = 0; u < nw; ++u)
        if (u != v) keep.push_back(u);
      Graph next = work.induced_subgraph(keep);
      std::vector<int> next_orig;
      next_orig.reserve(keep.size());
      for (int u : keep) next_orig.push_back(work_orig[u]);
      chosen.push_back(work_orig[v]);
      dfs(next, next_orig, fixed + 1);
      chosen.pop_back();
    }

    // branch 2: v stays out, so its whole neighborhood joins the cover
    if (!budget_hit) {
      std::vector<char> drop(nw, 0);
      drop[v] = 1;
      int added = 0;
      for (int u : adj[v]) {
        drop[u] = 1;
        chosen.push_back(work_orig[u]);
        ++added;
      }
      std::vector<int> keep;
      keep.reserve(nw);
      for (int u = 0; u < nw; ++u)
        if (!drop[u]) keep.push_back(u);
      Graph next = work.induced_subgraph(keep);
      std::vector<int> next_orig;
      next_orig.reserve(keep.size());
      for (int u : keep) next_orig.push_back(work_orig[u]);
      dfs(next, next_orig, fixed + added);
      chosen.resize(chosen.size() - added);
    }

    chosen.resize(mark);
  }
};

}  // namespace

ExactResult solve_exact(const Graph& g, const ExactOptions& opts) {
  const int n = g.num_vertices();
  ExactResult result;
  result.cover.assign(n, 0);
  if (n == 0) {
    result.proven_optimal = true;
    return result;
  }

  Search search(opts, greedy_cover(g));
  std::vector<int> identity(n);
  for (int v = 0; v < n; ++v) identity[v] = v;
  search.dfs(g, identity, 0);

  result.size = search.best_size;
  for (int v : search.best_cover) result.cover[v] = 1;
  result.proven_optimal = !search.budget_hit;
  result.nodes_explored = search.nodes;
  return result;
}

}  // namespace minvc
