#include "plsc/bug.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "plsc/error.hpp"

namespace plsc {

bool is_mcs(const Plsc& board) {
  for (const FileId& f : rook_free_files(board))
    if (board.dots_in(f) != 2) return false;
  return true;
}

int DotGraph::index_of(const Cell& c) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), c);
  if (it == vertices.end() || *it != c) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::vector<std::pair<int, int>> DotGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(adj.size()); ++a)
    for (int b : adj[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

bool DotGraph::regular(int degree) const {
  return std::all_of(adj.begin(), adj.end(),
                     [degree](const auto& nb) { return static_cast<int>(nb.size()) == degree; });
}

namespace {

DotGraph build(const Plsc& board, bool eligible_only) {
  DotGraph g;
  g.n = board.order();
  for (const Cell& c : board.dots()) {
    bool ok = true;
    if (eligible_only)
      for (const FileId& f : files_through(c)) ok = ok && board.dots_in(f) == 2;
    if (ok) g.vertices.push_back(c);
  }
  g.adj.assign(g.vertices.size(), {});
  // Two distinct cells share at most one file, so the graph has no parallel
  // edges.
  for (int a = 0; a < static_cast<int>(g.vertices.size()); ++a)
    for (const FileId& f : files_through(g.vertices[a]))
      for (int v = 1; v <= g.n; ++v) {
        Cell d = f.cell_at(v);
        if (d == g.vertices[a] || !board.is_dot(d)) continue;
        int b = g.index_of(d);
        if (b >= 0) g.adj[a].push_back(b);
      }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());

  g.component.assign(g.vertices.size(), -1);
  for (int s = 0; s < static_cast<int>(g.vertices.size()); ++s) {
    if (g.component[s] >= 0) continue;
    std::deque<int> q{s};
    g.component[s] = g.component_count;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : g.adj[x])
        if (g.component[y] < 0) {
          g.component[y] = g.component_count;
          q.push_back(y);
        }
    }
    ++g.component_count;
  }
  return g;
}

}  // namespace

DotGraph dot_graph(const Plsc& board) {
  if (!is_mcs(board)) throw InvalidInput("dot_graph: board is not a minimum candidate structure");
  return build(board, false);
}

DotGraph eligible_dot_graph(const Plsc& board) { return build(board, true); }

std::vector<std::vector<int>> bugs(const DotGraph& g) {
  std::vector<std::vector<int>> out(g.component_count);
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) out[g.component[v]].push_back(v);
  return out;
}

std::optional<std::vector<Cell>> shortest_odd_cycle(const DotGraph& g, const std::vector<int>& bug) {
  const int V = static_cast<int>(g.vertices.size());
  std::vector<int> dist(V), parent(V);
  int best = -1;
  std::vector<int> best_cycle;
  for (int root : bug) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::deque<int> q{root};
    int found_len = -1, fu = -1, fv = -1;
    while (!q.empty() && found_len < 0) {
      int x = q.front();
      q.pop_front();
      for (int y : g.adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push_back(y);
        } else if (dist[y] == dist[x] && found_len < 0) {
          // BFS order makes the first such edge the shortest odd closed walk
          // through this root.
          found_len = 2 * dist[x] + 1;
          fu = x;
          fv = y;
        }
      }
    }
    if (found_len < 0 || (best >= 0 && found_len >= best)) continue;
    best = found_len;
    std::vector<int> left, right;
    for (int x = fu; x >= 0; x = parent[x]) left.push_back(x);
    for (int x = fv; x >= 0; x = parent[x]) right.push_back(x);
    // left runs fu..root, right fv..root; both end at the root.
    std::vector<int> cyc(left.rbegin(), left.rend());  // root..fu
    cyc.insert(cyc.end(), right.begin(), right.end() - 1);  // fv..(child of root)
    best_cycle = cyc;
  }
  if (best < 0) return std::nullopt;
  std::vector<Cell> out;
  for (int v : best_cycle) out.push_back(g.vertices[v]);
  return out;
}

BugSolutionSet solve_bug(const DotGraph& g, const std::vector<int>& bug) {
  BugSolutionSet res;
  if (bug.empty()) return res;
  std::vector<int> color(g.vertices.size(), -1);
  bool ok = true;
  std::deque<int> q{bug.front()};
  color[bug.front()] = 0;
  while (!q.empty() && ok) {
    int x = q.front();
    q.pop_front();
    for (int y : g.adj[x]) {
      if (color[y] < 0) {
        color[y] = 1 - color[x];
        q.push_back(y);
      } else if (color[y] == color[x]) {
        ok = false;
        break;
      }
    }
  }
  if (!ok) {
    res.odd_cycle = shortest_odd_cycle(g, bug);
    return res;
  }
  std::vector<Cell> a, b;
  for (int v : bug) (color[v] == 0 ? a : b).push_back(g.vertices[v]);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (b < a) std::swap(a, b);
  res.solutions = {a, b};
  return res;
}

bool is_cycle(const DotGraph& g, const std::vector<Cell>& cycle) {
  if (cycle.size() < 3) return false;
  std::vector<int> idx;
  for (const Cell& c : cycle) {
    int v = g.index_of(c);
    if (v < 0) return false;
    idx.push_back(v);
  }
  auto sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    int a = idx[t], b = idx[(t + 1) % idx.size()];
    if (!std::binary_search(g.adj[a].begin(), g.adj[a].end(), b)) return false;
  }
  return true;
}

BugVerdict bug_condition(const Plsc& board) {
  BugVerdict v;
  v.mcs = is_mcs(board);
  DotGraph g = eligible_dot_graph(board);
  v.ineligible_dots = board.dot_count() - static_cast<int>(g.vertices.size());
  for (const auto& comp : bugs(g)) {
    bool cubic = std::all_of(comp.begin(), comp.end(),
                             [&](int x) { return g.adj[x].size() == 3; });
    if (!cubic) {
      v.skipped_vertices += static_cast<int>(comp.size());
      continue;
    }
    ++v.bug_count;
    if (!v.pass) continue;
    BugSolutionSet s = solve_bug(g, comp);
    if (!s.solvable()) {
      v.pass = false;
      std::vector<Cell> cells;
      for (int x : comp) cells.push_back(g.vertices[x]);
      v.failing_bug = cells;
      v.odd_cycle = s.odd_cycle;
    }
  }
  std::ostringstream os;
  if (v.mcs)
    os << "whole board is an mCS";
  else
    os << "partial: " << v.ineligible_dots << " dots in files without exactly two dots, "
       << v.skipped_vertices << " dots in components that are not 3-regular";
  v.scope = os.str();
  return v;
}

std::string BugVerdict::summary() const {
  std::ostringstream os;
  os << (pass ? "pass" : "fail") << ": " << bug_count << " BUG(s) examined (" << scope << ")";
  if (odd_cycle) os << "; unsolvable BUG with " << failing_bug->size()
                    << " dots, odd cycle length " << odd_cycle->size();
  return os.str();
}

}  // namespace plsc
