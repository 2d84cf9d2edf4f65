#include "minvc/lp.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace minvc {

int LpSolution::doubled_total() const {
  return std::accumulate(doubled.begin(), doubled.end(), 0);
}

double LpSolution::half_ratio() const {
  if (doubled.empty()) return 0.0;
  return static_cast<double>(half_set.size()) / static_cast<double>(doubled.size());
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Maximum matching on the bipartite double cover of a graph: left copy i and
// right copy i per vertex, edges (i_L, j_R) and (j_L, i_R) per original
// edge. Left adjacency therefore equals the original adjacency. Greedy
// initialization in index order, then Hopcroft-Karp phases; deterministic.
struct DoubleCoverMatching {
  const std::vector<std::vector<int>>& adj;
  int n;
  std::vector<int> match_l, match_r, dist;

  explicit DoubleCoverMatching(const std::vector<std::vector<int>>& adjacency)
      : adj(adjacency), n(static_cast<int>(adjacency.size())),
        match_l(n, -1), match_r(n, -1), dist(n) {
    for (int l = 0; l < n; ++l) {
      for (int r : adj[l]) {
        if (match_r[r] == -1) {
          match_l[l] = r;
          match_r[r] = l;
          break;
        }
      }
    }
    while (bfs()) {
      for (int l = 0; l < n; ++l) {
        if (match_l[l] == -1) dfs(l);
      }
    }
  }

  bool bfs() {
    std::queue<int> q;
    bool reachable_free = false;
    for (int l = 0; l < n; ++l) {
      if (match_l[l] == -1) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : adj[l]) {
        int l2 = match_r[r];
        if (l2 == -1) {
          reachable_free = true;
        } else if (dist[l2] == kInf) {
          dist[l2] = dist[l] + 1;
          q.push(l2);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int l) {
    for (int r : adj[l]) {
      int l2 = match_r[r];
      if (l2 == -1 || (dist[l2] == dist[l] + 1 && dfs(l2))) {
        match_l[l] = r;
        match_r[r] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  }
};

// Dulmage-Mendelsohn style classification of the double cover. Vertices
// whose copies are avoidable by some maximum matching get 0, their forced
// neighbors get 1, the perfectly matched core stays undecided. The two
// copies of a vertex always classify identically (the copy swap is an
// automorphism of the double cover).
enum class DmClass { zero, one, core };

std::vector<DmClass> dm_classes(const std::vector<std::vector<int>>& adj) {
  DoubleCoverMatching m(adj);
  const int n = m.n;
  // alternating reachability from unmatched left copies
  std::vector<char> visit_l(n, 0), visit_r(n, 0);
  std::queue<int> q;
  for (int l = 0; l < n; ++l) {
    if (m.match_l[l] == -1) {
      visit_l[l] = 1;
      q.push(l);
    }
  }
  while (!q.empty()) {
    int l = q.front();
    q.pop();
    for (int r : adj[l]) {
      if (visit_r[r]) continue;
      visit_r[r] = 1;
      int l2 = m.match_r[r];
      assert(l2 != -1);  // otherwise an augmenting path survived
      if (l2 != -1 && !visit_l[l2]) {
        visit_l[l2] = 1;
        q.push(l2);
      }
    }
  }
  // mirror pass from unmatched right copies
  std::vector<char> wvisit_l(n, 0), wvisit_r(n, 0);
  for (int r = 0; r < n; ++r) {
    if (m.match_r[r] == -1) {
      wvisit_r[r] = 1;
      q.push(r);
    }
  }
  while (!q.empty()) {
    int r = q.front();
    q.pop();
    for (int l : adj[r]) {  // right adjacency mirrors left adjacency
      if (wvisit_l[l]) continue;
      wvisit_l[l] = 1;
      int r2 = m.match_l[l];
      assert(r2 != -1);
      if (r2 != -1 && !wvisit_r[r2]) {
        wvisit_r[r2] = 1;
        q.push(r2);
      }
    }
  }
  std::vector<DmClass> cls(n, DmClass::core);
  for (int v = 0; v < n; ++v) {
    assert(!(visit_l[v] && wvisit_l[v]));
    assert(visit_l[v] == wvisit_r[v]);
    assert(wvisit_l[v] == visit_r[v]);
    if (visit_l[v])
      cls[v] = DmClass::zero;
    else if (wvisit_l[v])
      cls[v] = DmClass::one;
  }
  return cls;
}

}  // namespace

LpSolution solve_lp_relaxation(const Graph& g) {
  const int n = g.num_vertices();
  LpSolution sol;
  sol.doubled.assign(n, -1);

  std::vector<std::vector<int>> adj = g.adjacency();
  std::vector<char> alive(n, 1);
  std::vector<int> degree = g.degrees();
  int alive_count = n;

  auto remove_vertex = [&](int u) {
    alive[u] = 0;
    --alive_count;
    for (int w : adj[u]) {
      if (alive[w]) --degree[w];
    }
  };
  auto fix_zero = [&](int u) {
    sol.doubled[u] = 0;
    remove_vertex(u);
  };
  auto fix_one = [&](int u) {
    sol.doubled[u] = 2;
    remove_vertex(u);
  };

  bool progress = true;
  while (progress && alive_count > 0) {
    progress = false;

    // Isolated vertices leave the cover; a pendant vertex is dominated by
    // its neighbor, which some optimum takes fully.
    std::set<int> work;
    for (int v = 0; v < n; ++v) {
      if (alive[v] && degree[v] <= 1) work.insert(v);
    }
    while (!work.empty()) {
      int v = *work.begin();
      work.erase(work.begin());
      if (!alive[v]) continue;
      if (degree[v] == 0) {
        fix_zero(v);
        progress = true;
      } else if (degree[v] == 1) {
        int u = -1;
        for (int w : adj[v]) {
          if (alive[w]) {
            u = w;
            break;
          }
        }
        fix_one(u);
        progress = true;
        work.insert(v);
        for (int w : adj[u]) {
          if (alive[w] && degree[w] <= 1) work.insert(w);
        }
      }
    }
    if (alive_count == 0) break;

    // Matching-based classification of the residual graph.
    std::vector<int> residual;
    std::vector<int> pos(n, -1);
    for (int v = 0; v < n; ++v) {
      if (alive[v]) {
        pos[v] = static_cast<int>(residual.size());
        residual.push_back(v);
      }
    }
    std::vector<std::vector<int>> radj(residual.size());
    for (std::size_t k = 0; k < residual.size(); ++k) {
      for (int w : adj[residual[k]]) {
        if (alive[w]) radj[k].push_back(pos[w]);
      }
    }
    std::vector<DmClass> cls = dm_classes(radj);
    for (std::size_t k = 0; k < residual.size(); ++k) {
      if (cls[k] == DmClass::zero) {
        fix_zero(residual[k]);
        progress = true;
      } else if (cls[k] == DmClass::one) {
        fix_one(residual[k]);
        progress = true;
      }
    }
  }

  // Even cycle components of the remainder have an alternating integral
  // optimum; odd cycles and everything else stay at 1/2, which is optimal
  // because the remainder's double cover has a perfect matching.
  std::vector<char> visited(n, 0);
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || visited[s]) continue;
    // collect the component and check all degrees are 2
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    visited[s] = 1;
    bool all_deg2 = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      if (degree[v] != 2) all_deg2 = false;
      for (int w : adj[v]) {
        if (alive[w] && !visited[w]) {
          visited[w] = 1;
          q.push(w);
        }
      }
    }
    if (!all_deg2 || comp.size() % 2 != 0) continue;
    // trace the cycle from its smallest vertex toward its smaller neighbor
    int start = *std::min_element(comp.begin(), comp.end());
    std::vector<int> ring{start};
    int prev = -1, cur = start;
    do {
      int next = -1;
      for (int w : adj[cur]) {
        if (alive[w] && w != prev && (next == -1 || w < next)) next = w;
      }
      prev = cur;
      cur = next;
      if (cur != start) ring.push_back(cur);
    } while (cur != start);
    for (std::size_t k = 0; k < ring.size(); ++k) {
      sol.doubled[ring[k]] = (k % 2 == 0) ? 2 : 0;
      alive[ring[k]] = 0;
      --alive_count;
    }
  }

  for (int v = 0; v < n; ++v) {
    if (sol.doubled[v] == -1) sol.doubled[v] = 1;
  }

  for (int v = 0; v < n; ++v) {
    switch (sol.doubled[v]) {
      case 0: sol.zeros_set.push_back(v); break;
      case 1: sol.half_set.push_back(v); break;
      default: sol.ones_set.push_back(v); break;
    }
  }
  sol.objective = sol.doubled_total() / 2.0;
  return sol;
}

}  // namespace minvc
