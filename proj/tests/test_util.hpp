#pragma once

// Random instance generators and independent checkers shared by the tests.
// Nothing here calls the algorithms under test.

#include <algorithm>
#include <array>
#include <functional>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "plsc/board.hpp"
#include "plsc/compact_brick.hpp"

namespace plsc::testkit {

using Rng = std::mt19937_64;

inline bool latin_square(const Grid& g) {
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(g[i].size()) != n) return false;
    std::set<int> row, col;
    for (int j = 0; j < n; ++j) {
      if (g[i][j] < 1 || g[i][j] > n || g[j][i] < 1 || g[j][i] > n) return false;
      row.insert(g[i][j]);
      col.insert(g[j][i]);
    }
    if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n) return false;
  }
  return true;
}

// Every filled cell of `part` appears in `full` at the same position.
inline bool contains(const Grid& full, const Grid& part) {
  for (std::size_t i = 0; i < part.size(); ++i)
    for (std::size_t j = 0; j < part[i].size(); ++j)
      if (part[i][j] && full[i][j] != part[i][j]) return false;
  return true;
}

// Random Latin square by randomised backtracking, cell by cell.
inline Grid random_latin_square(int n, Rng& rng) {
  Grid g(n, std::vector<int>(n, 0));
  std::function<bool(int)> fill = [&](int c) -> bool {
    if (c == n * n) return true;
    int i = c / n, j = c % n;
    std::vector<int> syms(n);
    std::iota(syms.begin(), syms.end(), 1);
    std::shuffle(syms.begin(), syms.end(), rng);
    for (int s : syms) {
      bool ok = true;
      for (int x = 0; x < j && ok; ++x) ok = g[i][x] != s;
      for (int x = 0; x < i && ok; ++x) ok = g[x][j] != s;
      if (!ok) continue;
      g[i][j] = s;
      if (fill(c + 1)) return true;
      g[i][j] = 0;
    }
    return false;
  };
  fill(0);
  // Randomise further by permuting rows, columns and symbols.
  std::vector<int> pr(n), pc(n), ps(n);
  std::iota(pr.begin(), pr.end(), 0);
  std::iota(pc.begin(), pc.end(), 0);
  std::iota(ps.begin(), ps.end(), 1);
  std::shuffle(pr.begin(), pr.end(), rng);
  std::shuffle(pc.begin(), pc.end(), rng);
  std::shuffle(ps.begin(), ps.end(), rng);
  Grid out(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[pr[i]][pc[j]] = ps[g[i][j] - 1];
  return out;
}

// Keeps each cell of `g` with probability p.
inline Grid thin(const Grid& g, double p, Rng& rng) {
  std::bernoulli_distribution keep(p);
  Grid out = g;
  for (auto& row : out)
    for (int& v : row)
      if (!keep(rng)) v = 0;
  return out;
}

// Random partial Latin square built by greedy placement of up to m symbols;
// usually not completable once m is large.
inline Grid greedy_partial(int n, int m, Rng& rng) {
  Grid g(n, std::vector<int>(n, 0));
  std::uniform_int_distribution<int> d(0, n - 1);
  for (int tries = 0, placed = 0; placed < m && tries < 50 * m + 50; ++tries) {
    int i = d(rng), j = d(rng), s = d(rng) + 1;
    if (g[i][j]) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g[i][x] != s && g[x][j] != s;
    if (!ok) continue;
    g[i][j] = s;
    ++placed;
  }
  return g;
}

// Partial Latin square confined to rows < r, columns < s, symbols <= t.
inline Grid random_brick_fill(int n, int r, int s, int t, int m, Rng& rng) {
  Grid g(n, std::vector<int>(n, 0));
  std::uniform_int_distribution<int> di(0, r - 1), dj(0, s - 1), dk(1, t);
  for (int tries = 0, placed = 0; placed < m && tries < 50 * m + 50; ++tries) {
    int i = di(rng), j = dj(rng), k = dk(rng);
    if (g[i][j]) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g[i][x] != k && g[x][j] != k;
    if (!ok) continue;
    g[i][j] = k;
    ++placed;
  }
  return g;
}

// Count of ways to pick dots so that every file through any of the given
// dots holds exactly one picked dot, by plain backtracking.
inline std::uint64_t count_exact_covers(const std::vector<Cell>& dots, int limit = 1000) {
  std::vector<std::array<FileId, 3>> files;
  std::set<FileId> all;
  for (const Cell& c : dots) {
    files.push_back(files_through(c));
    for (const FileId& f : files.back()) all.insert(f);
  }
  std::vector<FileId> fl(all.begin(), all.end());
  auto idx = [&](const FileId& f) {
    return static_cast<int>(std::lower_bound(fl.begin(), fl.end(), f) - fl.begin());
  };
  std::vector<std::array<int, 3>> cover(dots.size());
  std::vector<std::vector<int>> by_file(fl.size());
  for (std::size_t d = 0; d < dots.size(); ++d)
    for (int a = 0; a < 3; ++a) {
      cover[d][a] = idx(files[d][a]);
      by_file[cover[d][a]].push_back(static_cast<int>(d));
    }
  std::vector<int> covered(fl.size(), 0);
  std::uint64_t count = 0;
  std::function<void()> rec = [&]() {
    if (count >= static_cast<std::uint64_t>(limit)) return;
    int best = -1, options = 1 << 30;
    for (std::size_t f = 0; f < fl.size(); ++f) {
      if (covered[f]) continue;
      int o = 0;
      for (int d : by_file[f]) {
        bool free = true;
        for (int a = 0; a < 3; ++a) free = free && !covered[cover[d][a]];
        o += free;
      }
      if (o < options) {
        options = o;
        best = static_cast<int>(f);
      }
    }
    if (best < 0) {
      ++count;
      return;
    }
    for (int d : by_file[best]) {
      bool free = true;
      for (int a = 0; a < 3; ++a) free = free && !covered[cover[d][a]];
      if (!free) continue;
      for (int a = 0; a < 3; ++a) covered[cover[d][a]] = 1;
      rec();
      for (int a = 0; a < 3; ++a) covered[cover[d][a]] = 0;
    }
  };
  rec();
  return count;
}

// Random r x s Latin rectangle on symbols 1..n (r, s <= n).
inline Grid random_latin_rectangle(int r, int s, int n, Rng& rng) {
  Grid g(r, std::vector<int>(s, 0));
  std::function<bool(int)> fill = [&](int c) -> bool {
    if (c == r * s) return true;
    int i = c / s, j = c % s;
    std::vector<int> syms(n);
    std::iota(syms.begin(), syms.end(), 1);
    std::shuffle(syms.begin(), syms.end(), rng);
    for (int v : syms) {
      bool ok = true;
      for (int x = 0; x < j && ok; ++x) ok = g[i][x] != v;
      for (int x = 0; x < i && ok; ++x) ok = g[x][j] != v;
      if (!ok) continue;
      g[i][j] = v;
      if (fill(c + 1)) return true;
      g[i][j] = 0;
    }
    return false;
  };
  fill(0);
  return g;
}

// The rectangle in the top-left corner of an otherwise empty n x n grid.
inline Grid pad(const Grid& rect, int n) {
  Grid g(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < rect.size(); ++i)
    for (std::size_t j = 0; j < rect[i].size(); ++j) g[i][j] = rect[i][j];
  return g;
}

// Symbol counts of a rectangle, indexed 1..n.
inline std::vector<int> symbol_counts(const Grid& rect, int n) {
  std::vector<int> c(n + 1, 0);
  for (const auto& row : rect)
    for (int v : row)
      if (v) ++c[v];
  return c;
}

// Mechanical postconditions of a full extension of `brick` (placed at the
// origin) in `out`: the brick is copied verbatim, files of the brick holding
// rooks or dots carry no rook outside it, n^2 - p0 rooks lie outside, the
// only dots are the brick's, and the board is consistent.
inline bool full_extension_ok(const CompactBrick& brick, int p0, const Plsc& out) {
  const int n = out.order();
  const auto& d = brick.dims();
  auto inside = [&](const Cell& c) { return c.i <= d[0] && c.j <= d[1] && c.k <= d[2]; };
  if (!satisfies_invariants(out)) return false;
  int outside_rooks = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Cell c{i, j, k};
        if (inside(c)) {
          if (out.at(c) != brick.at(c)) return false;
          continue;
        }
        if (out.is_dot(c)) return false;
        if (!out.is_rook(c)) continue;
        ++outside_rooks;
        for (int a = 0; a < 3; ++a) {
          // The file through c along axis a meets the brick iff the two
          // other coordinates lie in it.
          Cell base = c;
          base[a] = 1;
          bool meets = true;
          for (int b = 0; b < 3; ++b)
            if (b != a && base[b] > d[b]) meets = false;
          if (meets && brick.file_occupied(base, a)) return false;
        }
      }
  if (outside_rooks != n * n - p0) return false;
  // Rooks never attack: each file at most one.
  for (int a = 0; a < 3; ++a)
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        int rooks = 0;
        for (int v = 1; v <= n; ++v) {
          Cell c;
          c[a] = v;
          c[(a + 1) % 3] = x;
          c[(a + 2) % 3] = y;
          rooks += out.is_rook(c);
        }
        if (rooks > 1) return false;
      }
  return true;
}

// Brick with rooks where two Latin squares of order a agree and dots of both
// where they differ; always compact with potential a^2.
inline CompactBrick overlay_brick(const Grid& A, const Grid& B) {
  const int a = static_cast<int>(A.size());
  CompactBrick t(a, a, a);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) {
      if (A[i][j] == B[i][j]) {
        t.set({i + 1, j + 1, A[i][j]}, CellState::Rook);
      } else {
        t.set({i + 1, j + 1, A[i][j]}, CellState::Dot);
        t.set({i + 1, j + 1, B[i][j]}, CellState::Dot);
      }
    }
  return t;
}

// Mixture used by the property tests: thinned Latin squares (completable),
// greedy partial squares (often not), and corner bricks (exercise couples).
inline Grid random_board(int n, Rng& rng) {
  switch (rng() % 3) {
    case 0: {
      std::uniform_real_distribution<double> p(0.2, 0.7);
      return thin(random_latin_square(n, rng), p(rng), rng);
    }
    case 1:
      return greedy_partial(n, static_cast<int>(rng() % (n * n / 2 + 2)), rng);
    default: {
      int r = 1 + static_cast<int>(rng() % n), s = 1 + static_cast<int>(rng() % n),
          t = 1 + static_cast<int>(rng() % n);
      return random_brick_fill(n, r, s, t, static_cast<int>(rng() % (r * s + 1)), rng);
    }
  }
}

}  // namespace plsc::testkit
