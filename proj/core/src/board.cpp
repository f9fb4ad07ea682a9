#include "plsc/board.hpp"

#include <bit>
#include <set>

#include "plsc/error.hpp"

namespace plsc {

int popcount(IndexMask m) { return std::popcount(m); }

std::vector<int> mask_to_indices(IndexMask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

IndexMask indices_to_mask(const std::vector<int>& v) {
  IndexMask m = 0;
  for (int x : v) m |= bit(x);
  return m;
}

int hamming_distance(const Cell& a, const Cell& b) {
  return (a.i != b.i) + (a.j != b.j) + (a.k != b.k);
}

Cell FileId::cell_at(int free) const {
  switch (axis) {
    case Axis::X: return {free, a, b};
    case Axis::Y: return {a, free, b};
    case Axis::Z: return {a, b, free};
  }
  return {};
}

std::array<FileId, 3> files_through(const Cell& c) {
  return {FileId{Axis::X, c.j, c.k}, FileId{Axis::Y, c.i, c.k},
          FileId{Axis::Z, c.i, c.j}};
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Completed: return "completed";
    case Status::Open: return "open";
    case Status::Dead: return "dead";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// RolePerm

RolePerm RolePerm::parse(std::string_view name) {
  if (name.size() != 3) throw InvalidInput("role permutation must have 3 letters");
  RolePerm p;
  int seen = 0;
  for (int t = 0; t < 3; ++t) {
    int src = name[t] == 'i' ? 0 : name[t] == 'j' ? 1 : name[t] == 'k' ? 2 : -1;
    if (src < 0 || (seen & (1 << src)))
      throw InvalidInput("bad role permutation '" + std::string(name) + "'");
    seen |= 1 << src;
    p.source[t] = src;
  }
  return p;
}

std::array<RolePerm, 6> RolePerm::all() {
  return {parse("ijk"), parse("ikj"), parse("jik"), parse("jki"), parse("kij"),
          parse("kji")};
}

RolePerm RolePerm::inverse() const {
  RolePerm inv;
  for (int t = 0; t < 3; ++t) inv.source[source[t]] = t;
  return inv;
}

Cell RolePerm::apply(const Cell& c) const {
  return {c[source[0]], c[source[1]], c[source[2]]};
}

std::string RolePerm::name() const {
  std::string s;
  for (int t = 0; t < 3; ++t) s.push_back("ijk"[source[t]]);
  return s;
}

// ---------------------------------------------------------------------------
// Box

Box::Box(int n, IndexMask rows, IndexMask cols, IndexMask syms)
    : n_(n), masks_{rows, cols, syms} {
  if (n < 1 || n > kMaxOrder) throw InvalidInput("box order out of range");
  for (IndexMask m : masks_) {
    if (m == 0) throw InvalidInput("box subsets must be non-empty");
    if (m & ~full_mask(n)) throw InvalidInput("box index outside 1..n");
  }
}

Box::Box(int n, const std::vector<int>& rows, const std::vector<int>& cols,
         const std::vector<int>& syms) : n_(n), masks_{} {
  const std::vector<int>* parts[3] = {&rows, &cols, &syms};
  for (int a = 0; a < 3; ++a) {
    for (int v : *parts[a]) {
      if (v < 1 || v > n) throw InvalidInput("box index outside 1..n");
      masks_[a] |= bit(v);
    }
  }
  *this = Box(n, masks_[0], masks_[1], masks_[2]);
}

Box Box::corner(int n, int r, int s, int t) {
  if (r < 1 || s < 1 || t < 1 || r > n || s > n || t > n)
    throw InvalidInput("corner box dimensions must lie in 1..n");
  return Box(n, full_mask(r), full_mask(s), full_mask(t));
}

bool Box::contains(const Cell& c) const {
  return (masks_[0] & bit(c.i)) && (masks_[1] & bit(c.j)) && (masks_[2] & bit(c.k));
}

std::optional<Box> Box::remote_mate() const {
  IndexMask all = full_mask(n_);
  IndexMask r = all & ~masks_[0], c = all & ~masks_[1], s = all & ~masks_[2];
  if (!r || !c || !s) return std::nullopt;
  return Box(n_, r, c, s);
}

// ---------------------------------------------------------------------------
// Plsc

Plsc::Plsc(int n, CellState fill) : n_(n) {
  if (n < 1 || n > kMaxOrder) throw InvalidInput("order must lie in 1.." + std::to_string(kMaxOrder));
  cells_.assign(static_cast<std::size_t>(n) * n * n, fill);
}

bool Plsc::in_range(const Cell& c) const {
  return c.i >= 1 && c.i <= n_ && c.j >= 1 && c.j <= n_ && c.k >= 1 && c.k <= n_;
}

int Plsc::rook_count() const {
  int r = 0;
  for (CellState s : cells_) r += s == CellState::Rook;
  return r;
}

int Plsc::dot_count() const {
  int d = 0;
  for (CellState s : cells_) d += s == CellState::Dot;
  return d;
}

std::vector<Cell> Plsc::rooks() const {
  std::vector<Cell> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k <= n_; ++k)
        if (is_rook({i, j, k})) out.push_back({i, j, k});
  return out;
}

std::vector<Cell> Plsc::dots() const {
  std::vector<Cell> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k <= n_; ++k)
        if (is_dot({i, j, k})) out.push_back({i, j, k});
  return out;
}

int Plsc::dots_in(const FileId& f) const {
  int d = 0;
  for (int v = 1; v <= n_; ++v) d += is_dot(f.cell_at(v));
  return d;
}

std::optional<Cell> Plsc::rook_in(const FileId& f) const {
  for (int v = 1; v <= n_; ++v)
    if (is_rook(f.cell_at(v))) return f.cell_at(v);
  return std::nullopt;
}

IndexMask Plsc::dot_mask(int i, int j) const {
  IndexMask m = 0;
  for (int k = 1; k <= n_; ++k)
    if (is_dot({i, j, k})) m |= bit(k);
  return m;
}

void detail::BoardEditor::place_rook(Plsc& b, const Cell& c) {
  for (const FileId& f : files_through(c)) {
    for (int v = 1; v <= b.n_; ++v) {
      Cell x = f.cell_at(v);
      if (b.at(x) == CellState::Dot) set(b, x, CellState::Empty);
    }
  }
  set(b, c, CellState::Rook);
}

// ---------------------------------------------------------------------------
// Operations

Plsc new_empty(int n) {
  if (n < 1) throw InvalidInput("order must be at least 1");
  return detail::BoardEditor::make(n, CellState::Dot);
}

Plsc from_pls(const Grid& grid) {
  const int n = static_cast<int>(grid.size());
  if (n < 1) throw InvalidInput("empty grid");
  for (const auto& row : grid)
    if (static_cast<int>(row.size()) != n) throw InvalidInput("grid must be square");
  Plsc b = new_empty(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int k = grid[i - 1][j - 1];
      if (k == 0) continue;
      if (k < 1 || k > n)
        throw InvalidInput("symbol " + std::to_string(k) + " outside 1..n at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
      if (!b.is_dot({i, j, k}))
        throw InvalidInput("symbol " + std::to_string(k) + " repeats in row " +
                           std::to_string(i) + " or column " + std::to_string(j));
      detail::BoardEditor::place_rook(b, {i, j, k});
    }
  }
  return b;
}

Plsc place_rook(const Plsc& board, const Cell& c) {
  if (!board.in_range(c)) throw InvalidMove("cell outside the board");
  if (!board.is_dot(c))
    throw InvalidMove(board.is_rook(c) ? "cell already holds a rook"
                                       : "cell holds no dot");
  Plsc out = board;
  detail::BoardEditor::place_rook(out, c);
  return out;
}

Plsc conjugate(const Plsc& board, const RolePerm& perm) {
  const int n = board.order();
  Plsc out = detail::BoardEditor::make(n, CellState::Empty);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Cell c{i, j, k};
        detail::BoardEditor::set(out, perm.apply(c), board.at(c));
      }
  return out;
}

std::optional<std::vector<int>> candidate_set(const Plsc& board, int i, int j) {
  const int n = board.order();
  if (i < 1 || i > n || j < 1 || j > n) throw InvalidInput("cell outside the board");
  if (board.rook_in({Axis::Z, i, j})) return std::nullopt;
  return mask_to_indices(board.dot_mask(i, j));
}

std::vector<FileId> rook_free_files(const Plsc& board) {
  std::vector<FileId> out;
  const int n = board.order();
  for (Axis ax : {Axis::X, Axis::Y, Axis::Z})
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        FileId f{ax, a, b};
        if (!board.rook_in(f)) out.push_back(f);
      }
  return out;
}

bool has_eliminated_file(const Plsc& board) {
  for (const FileId& f : rook_free_files(board))
    if (board.dots_in(f) == 0) return true;
  return false;
}

Status status(const Plsc& board) {
  const int n = board.order();
  if (board.rook_count() == n * n) return Status::Completed;
  return has_eliminated_file(board) ? Status::Dead : Status::Open;
}

BoxCensus box_census(const Plsc& board, const Box& box) {
  if (box.order() != board.order()) throw InvalidInput("box order differs from board order");
  BoxCensus c;
  for (int i : mask_to_indices(box.rows()))
    for (int j : mask_to_indices(box.cols()))
      for (int k : mask_to_indices(box.syms())) {
        CellState s = board.at({i, j, k});
        c.rooks += s == CellState::Rook;
        c.dots += s == CellState::Dot;
      }
  return c;
}

Pls to_pls(const Plsc& board) {
  const int n = board.order();
  Pls p;
  p.n = n;
  p.grid.assign(n, std::vector<int>(n, 0));
  p.candidates.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (auto r = board.rook_in({Axis::Z, i, j})) {
        p.grid[i - 1][j - 1] = r->k;
      } else {
        p.candidates[i - 1][j - 1] = mask_to_indices(board.dot_mask(i, j));
      }
    }
  return p;
}

bool satisfies_invariants(const Plsc& board) {
  const int n = board.order();
  for (Axis ax : {Axis::X, Axis::Y, Axis::Z})
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        FileId f{ax, a, b};
        int rooks = 0, dots = 0;
        for (int v = 1; v <= n; ++v) {
          rooks += board.is_rook(f.cell_at(v));
          dots += board.is_dot(f.cell_at(v));
        }
        if (rooks > 1 || (rooks == 1 && dots > 0)) return false;
      }
  return true;
}

bool is_partial_latin(const Grid& grid) {
  const std::size_t n = grid.size();
  for (const auto& row : grid)
    if (row.size() != n) return false;
  for (std::size_t a = 0; a < n; ++a) {
    std::set<int> inRow, inCol;
    for (std::size_t b = 0; b < n; ++b) {
      int r = grid[a][b], c = grid[b][a];
      if (r < 0 || r > static_cast<int>(n) || c < 0 || c > static_cast<int>(n)) return false;
      if (r && !inRow.insert(r).second) return false;
      if (c && !inCol.insert(c).second) return false;
    }
  }
  return true;
}

bool is_latin_square(const Grid& grid) {
  if (grid.empty() || !is_partial_latin(grid)) return false;
  for (const auto& row : grid)
    for (int v : row)
      if (v == 0) return false;
  return true;
}

}  // namespace plsc
