#include "plsc/compact_brick.hpp"

#include <algorithm>
#include <sstream>

#include "plsc/completion.hpp"
#include "plsc/error.hpp"
#include "plsc/matching.hpp"

namespace plsc {

CompactBrick::CompactBrick(int a, int b, int c) : dims_{a, b, c} {
  for (int d : dims_)
    if (d < 1 || d > kMaxOrder) throw InvalidInput("brick dimensions must lie in 1..32");
  cells_.assign(static_cast<std::size_t>(a) * b * c, CellState::Empty);
}

CompactBrick CompactBrick::extract(const Plsc& board, const Box& box) {
  auto rows = mask_to_indices(box.rows()), cols = mask_to_indices(box.cols()),
       syms = mask_to_indices(box.syms());
  CompactBrick out(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                   static_cast<int>(syms.size()));
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (std::size_t y = 0; y < cols.size(); ++y)
      for (std::size_t z = 0; z < syms.size(); ++z)
        out.set({int(x) + 1, int(y) + 1, int(z) + 1}, board.at({rows[x], cols[y], syms[z]}));
  return out;
}

bool CompactBrick::file_occupied(const Cell& c, int axis) const {
  Cell x = c;
  for (int v = 1; v <= dims_[axis]; ++v) {
    x[axis] = v;
    if (occupied(x)) return true;
  }
  return false;
}

std::vector<Cell> CompactBrick::rooks() const {
  std::vector<Cell> out;
  for (int i = 1; i <= dims_[0]; ++i)
    for (int j = 1; j <= dims_[1]; ++j)
      for (int k = 1; k <= dims_[2]; ++k)
        if (at({i, j, k}) == CellState::Rook) out.push_back({i, j, k});
  return out;
}

std::vector<Cell> CompactBrick::dots() const {
  std::vector<Cell> out;
  for (int i = 1; i <= dims_[0]; ++i)
    for (int j = 1; j <= dims_[1]; ++j)
      for (int k = 1; k <= dims_[2]; ++k)
        if (at({i, j, k}) == CellState::Dot) out.push_back({i, j, k});
  return out;
}

bool CompactBrick::well_formed() const {
  for (const Cell& r : rooks()) {
    for (int axis = 0; axis < 3; ++axis) {
      Cell x = r;
      for (int v = 1; v <= dims_[axis]; ++v) {
        x[axis] = v;
        if (v == r[axis]) continue;
        if (at(x) != CellState::Empty) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

LayerPotentials potentials(const CompactBrick& brick) {
  LayerPotentials out;
  const auto& d = brick.dims();
  for (int axis = 0; axis < 3; ++axis) {
    const int u = axis == 0 ? 1 : 0;
    const int w = axis == 2 ? 1 : 2;
    for (int layer = 1; layer <= d[axis]; ++layer) {
      // Files along u are indexed by the w coordinate and vice versa.
      int alongU = 0, alongW = 0;
      for (int y = 1; y <= d[w]; ++y) {
        Cell c;
        c[axis] = layer;
        c[w] = y;
        c[u] = 1;
        alongU += brick.file_occupied(c, u);
      }
      for (int x = 1; x <= d[u]; ++x) {
        Cell c;
        c[axis] = layer;
        c[u] = x;
        c[w] = 1;
        alongW += brick.file_occupied(c, w);
      }
      if (alongU != alongW) {
        if (!out.impossible) out.impossible = ImpossibleLayer{axis, layer, alongU, alongW};
        out.potential[axis].push_back(-1);
      } else {
        out.potential[axis].push_back(alongU);
      }
    }
  }
  return out;
}

Compactness is_compact(const CompactBrick& brick) {
  Compactness c;
  LayerPotentials lp = potentials(brick);
  c.impossible = lp.impossible;
  for (int axis = 0; axis < 3; ++axis)
    for (int v : lp.potential[axis]) c.axis_sums[axis] += v;
  c.compact = !lp.impossible && c.axis_sums[0] == c.axis_sums[1] && c.axis_sums[1] == c.axis_sums[2];
  c.potential = c.compact ? c.axis_sums[0] : 0;
  return c;
}

std::string CompactCruseReport::summary() const {
  std::ostringstream os;
  if (!compact) return "brick is not compact\n";
  os << "potential " << potential << ", cap " << cap << '\n';
  static const char* names[3] = {"row layers", "column layers", "symbol layers"};
  for (int a = 0; a < 3; ++a) {
    os << names[a] << ": " << (layers[a].pass ? "pass" : "FAIL");
    if (!layers[a].pass)
      os << " (layer " << layers[a].layer << " potential " << layers[a].observed << ", needs "
         << layers[a].required << ")";
    os << '\n';
  }
  os << "capacity: " << (capacity.pass ? "pass" : "FAIL") << '\n';
  return os.str();
}

CompactCruseReport compact_cruse_check(const CompactBrick& brick, int n) {
  CompactCruseReport rep;
  const auto& d = brick.dims();
  if (d[0] > n || d[1] > n || d[2] > n) throw InvalidInput("brick does not fit in order n");
  LayerPotentials lp = potentials(brick);
  Compactness cp = is_compact(brick);
  rep.compact = cp.compact;
  rep.potential = cp.potential;
  rep.cap = cap(n, d[0], d[1], d[2]);
  if (!cp.compact) return rep;
  for (int axis = 0; axis < 3; ++axis) {
    const int need = d[(axis + 1) % 3] + d[(axis + 2) % 3] - n;
    for (int layer = 1; layer <= d[axis]; ++layer) {
      int v = lp.potential[axis][layer - 1];
      if (v < need) {
        rep.layers[axis] = {false, layer, v, need};
        break;
      }
    }
  }
  if (rep.potential > rep.cap)
    rep.capacity = {false, 0, rep.potential, static_cast<int>(rep.cap)};
  return rep;
}

// ---------------------------------------------------------------------------
// Full extension. Files the brick occupies are treated as if they held a rook
// inside the brick; every step below works with the resulting "used symbol"
// sets instead of concrete rooks.

namespace {

// Rows of `m` are owners (rows or columns of the square), columns are
// symbols; m(x, s) = 1 when owner x still needs symbol s.
std::vector<BinMatrix> split_missing(const BinMatrix& owners, int k) {
  BinMatrix square = ryser_adjoin(owners, k);
  return koenig_decompose(square, k);
}

}  // namespace

Plsc embed_compact(const CompactBrick& brick, int n) {
  if (!brick.well_formed()) throw InvalidInput("brick rooks attack each other or share files with dots");
  CompactCruseReport rep = compact_cruse_check(brick, n);
  if (!rep.pass()) throw InvalidInput("brick is not embeddable:\n" + rep.summary());
  const int a = brick.dim(0), b = brick.dim(1), c = brick.dim(2);
  const int k = n - c;

  auto occXY = [&](int i, int j) { return brick.file_occupied({i, j, 1}, 2); };
  auto occXZ = [&](int i, int s) { return brick.file_occupied({i, 1, s}, 1); };
  auto occYZ = [&](int j, int s) { return brick.file_occupied({1, j, s}, 0); };

  // grid[i][j] = outside symbol placed at (i,j), 0 when none.
  Grid grid(n, std::vector<int>(n, 0));

  // Symbol layers c+1..n over the brick's footprint.
  BinMatrix sheet(a, b);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) sheet.set(i - 1, j - 1, !occXY(i, j));
  BinMatrix tall = fill_auxiliary_block(sheet, n, k);
  BinMatrix square = ryser_adjoin(tall.transposed(), k).transposed();
  std::vector<BinMatrix> layers = koenig_decompose(square, k);
  for (int idx = 0; idx < k; ++idx)
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        if (layers[idx].get(i, j)) grid[i][j] = c + 1 + idx;

  // Columns b+1..n of rows 1..a.
  if (b < n) {
    BinMatrix missing(a, n);
    for (int i = 1; i <= a; ++i) {
      IndexMask used = 0;
      for (int s = 1; s <= c; ++s)
        if (occXZ(i, s)) used |= bit(s);
      for (int j = 1; j <= b; ++j)
        if (grid[i - 1][j - 1]) used |= bit(grid[i - 1][j - 1]);
      for (int s = 1; s <= n; ++s) missing.set(i - 1, s - 1, !(used & bit(s)));
    }
    std::vector<BinMatrix> cols = split_missing(missing, n - b);
    for (int idx = 0; idx < n - b; ++idx)
      for (int i = 0; i < a; ++i)
        for (int s = 0; s < n; ++s)
          if (cols[idx].get(i, s)) grid[i][b + idx] = s + 1;
  }

  // Rows a+1..n.
  if (a < n) {
    BinMatrix missing(n, n);
    for (int j = 1; j <= n; ++j) {
      IndexMask used = 0;
      if (j <= b)
        for (int s = 1; s <= c; ++s)
          if (occYZ(j, s)) used |= bit(s);
      for (int i = 1; i <= a; ++i)
        if (grid[i - 1][j - 1]) used |= bit(grid[i - 1][j - 1]);
      for (int s = 1; s <= n; ++s) missing.set(j - 1, s - 1, !(used & bit(s)));
    }
    std::vector<BinMatrix> rows = koenig_decompose(missing, n - a);
    for (int idx = 0; idx < n - a; ++idx)
      for (int j = 0; j < n; ++j)
        for (int s = 0; s < n; ++s)
          if (rows[idx].get(j, s)) grid[a + idx][j] = s + 1;
  }

  Plsc out = new_empty(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s = 1; s <= n; ++s) {
        Cell x{i, j, s};
        bool inside = i <= a && j <= b && s <= c;
        if (inside) {
          detail::BoardEditor::set(out, x, brick.at(x));
          continue;
        }
        bool touches = (i <= a && j <= b && occXY(i, j)) || (i <= a && s <= c && occXZ(i, s)) ||
                       (j <= b && s <= c && occYZ(j, s));
        if (touches) detail::BoardEditor::set(out, x, CellState::Empty);
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (int s = grid[i - 1][j - 1]) detail::BoardEditor::place_rook(out, {i, j, s});
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct CoverSearch {
  const CompactBrick& brick;
  std::vector<Cell> dots;
  // covered[axis] indexed by the two fixed coordinates of the file.
  std::array<std::vector<char>, 3> covered;
  std::array<std::vector<int>, 3> available;  // remaining candidate dots per file
  std::vector<Cell> chosen;
  int need = 0;

  std::size_t fileIndex(const Cell& c, int axis) const {
    const auto& d = brick.dims();
    int u = axis == 0 ? 1 : 0, w = axis == 2 ? 1 : 2;
    return static_cast<std::size_t>(c[u] - 1) * d[w] + (c[w] - 1);
  }

  bool dfs(std::size_t pos) {
    if (static_cast<int>(chosen.size()) == need) return true;
    if (pos == dots.size()) return false;
    const Cell& x = dots[pos];
    bool free = true;
    for (int a = 0; a < 3; ++a) free = free && !covered[a][fileIndex(x, a)];
    if (free) {
      for (int a = 0; a < 3; ++a) covered[a][fileIndex(x, a)] = 1;
      for (int a = 0; a < 3; ++a) --available[a][fileIndex(x, a)];
      chosen.push_back(x);
      if (dfs(pos + 1)) return true;
      chosen.pop_back();
      for (int a = 0; a < 3; ++a) ++available[a][fileIndex(x, a)];
      for (int a = 0; a < 3; ++a) covered[a][fileIndex(x, a)] = 0;
    }
    // Skip x: each uncovered file through x must keep another candidate.
    bool viable = true;
    for (int a = 0; a < 3; ++a) {
      auto f = fileIndex(x, a);
      if (!covered[a][f] && --available[a][f] == 0) viable = false;
    }
    bool ok = viable && dfs(pos + 1);
    for (int a = 0; a < 3; ++a) {
      auto f = fileIndex(x, a);
      if (!covered[a][f]) ++available[a][f];
    }
    return ok;
  }
};

}  // namespace

std::optional<std::vector<Cell>> solve_compact(const CompactBrick& brick) {
  Compactness cp = is_compact(brick);
  if (!cp.compact) return std::nullopt;
  const auto& d = brick.dims();
  CoverSearch s{brick, brick.dots(), {}, {}, {}, 0};
  for (int a = 0; a < 3; ++a) {
    int u = a == 0 ? 1 : 0, w = a == 2 ? 1 : 2;
    s.covered[a].assign(static_cast<std::size_t>(d[u]) * d[w], 0);
    s.available[a].assign(static_cast<std::size_t>(d[u]) * d[w], 0);
  }
  const auto rooks = brick.rooks();
  for (const Cell& r : rooks)
    for (int a = 0; a < 3; ++a) s.covered[a][s.fileIndex(r, a)] = 1;
  for (const Cell& x : s.dots)
    for (int a = 0; a < 3; ++a) ++s.available[a][s.fileIndex(x, a)];
  s.need = cp.potential - static_cast<int>(rooks.size());
  if (s.need < 0) return std::nullopt;
  if (!s.dfs(0)) return std::nullopt;

  // Every occupied file must now be covered exactly once.
  std::vector<Cell> all = rooks;
  all.insert(all.end(), s.chosen.begin(), s.chosen.end());
  for (int a = 0; a < 3; ++a) {
    std::vector<int> hits(s.covered[a].size(), 0);
    for (const Cell& x : all) ++hits[s.fileIndex(x, a)];
    for (int i = 1; i <= d[0]; ++i)
      for (int j = 1; j <= d[1]; ++j)
        for (int k = 1; k <= d[2]; ++k) {
          Cell x{i, j, k};
          if (x[a] != 1) continue;
          if (brick.file_occupied(x, a) != (hits[s.fileIndex(x, a)] == 1)) return std::nullopt;
        }
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::optional<Box> closure_hull(const Plsc& board, bool dots_only) {
  std::array<IndexMask, 3> m{};
  const int n = board.order();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        CellState s = board.at({i, j, k});
        if (s == CellState::Dot || (!dots_only && s == CellState::Rook)) {
          m[0] |= bit(i);
          m[1] |= bit(j);
          m[2] |= bit(k);
        }
      }
  if (!m[0]) return std::nullopt;
  return Box(n, m[0], m[1], m[2]);
}

int diameter(const CompactBrick& brick) { return brick.dim(0) + brick.dim(1) + brick.dim(2); }

}  // namespace plsc
