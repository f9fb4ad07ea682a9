#include "plsc/completion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "corner_view.hpp"
#include "plsc/error.hpp"

namespace plsc {

long cap(int n, int r, int s, int t) {
  const long N = n, R = r, S = s, T = t;
  return R * S + R * T + S * T - N * (R + S + T) + N * N;
}
long cap_form_rs(int n, int r, int s, int t) {
  return static_cast<long>(r) * s - static_cast<long>(n - t) * (r + s - n);
}
long cap_form_st(int n, int r, int s, int t) {
  return static_cast<long>(s) * t - static_cast<long>(n - r) * (s + t - n);
}
long cap_form_rt(int n, int r, int s, int t) {
  return static_cast<long>(r) * t - static_cast<long>(n - s) * (r + t - n);
}
long effective_cap(int n, int r, int s, int t) {
  return std::min({static_cast<long>(r) * s, static_cast<long>(r) * t,
                   static_cast<long>(s) * t, cap(n, r, s, t)});
}

int CoverSheet::ones() const {
  int c = 0;
  for (std::size_t u = 0; u < value.size(); ++u)
    for (std::size_t v = 0; v < value[u].size(); ++v) c += defined[u][v] && value[u][v] == 1;
  return c;
}

int CoverSheet::defined_count() const {
  int c = 0;
  for (const auto& row : defined)
    for (bool d : row) c += d;
  return c;
}

namespace {

void require_rooks_inside(const Plsc& board, const Box& box) {
  for (const Cell& c : board.rooks())
    if (!box.contains(c))
      throw InvalidInput("rook (" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                         std::to_string(c.k) + ") lies outside the brick");
}

// Validates an r x s Latin rectangle on symbols 1..n and embeds it in the
// top-left corner of an order-n grid.
Grid embed_rectangle(const Grid& rect, int n) {
  if (rect.empty()) throw InvalidInput("empty rectangle");
  const std::size_t s = rect[0].size();
  if (rect.size() > static_cast<std::size_t>(n) || s == 0 || s > static_cast<std::size_t>(n))
    throw InvalidInput("rectangle does not fit in order " + std::to_string(n));
  Grid g(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < rect.size(); ++i) {
    if (rect[i].size() != s) throw InvalidInput("ragged rectangle rows");
    for (std::size_t j = 0; j < s; ++j) {
      int v = rect[i][j];
      if (v < 1 || v > n) throw InvalidInput("rectangle symbol outside 1..n");
      g[i][j] = v;
    }
  }
  if (!is_partial_latin(g)) throw InvalidInput("not a Latin rectangle");
  return g;
}

BinMatrix sheet_to_matrix(const CoverSheet& sheet, int rowsU, int colsV) {
  BinMatrix m(rowsU, colsV);
  for (int u = 0; u < rowsU; ++u)
    for (int v = 0; v < colsV; ++v) m.set(u, v, sheet.value[u][v] == 1);
  return m;
}

}  // namespace

CoverSheet cover_sheet(const Plsc& board, const Box& box, Axis depth) {
  const int n = board.order();
  if (box.order() != n) throw InvalidInput("box order differs from board order");
  require_rooks_inside(board, box);
  const int d = static_cast<int>(depth);
  const int au = d == 0 ? 1 : 0;
  const int av = d == 2 ? 1 : 2;
  CoverSheet sheet;
  sheet.n = n;
  sheet.depth = depth;
  sheet.defined.assign(n, std::vector<bool>(n, false));
  sheet.value.assign(n, std::vector<int>(n, 0));
  const auto depthIdx = mask_to_indices(box.mask(d));
  for (int u = 1; u <= n; ++u) {
    if (!(box.mask(au) & bit(u))) continue;
    for (int v = 1; v <= n; ++v) {
      if (!(box.mask(av) & bit(v))) continue;
      bool free = true;
      for (int w : depthIdx) {
        Cell c;
        c[au] = u;
        c[av] = v;
        c[d] = w;
        if (board.is_rook(c)) free = false;
      }
      sheet.defined[u - 1][v - 1] = true;
      sheet.value[u - 1][v - 1] = free ? 1 : 0;
    }
  }
  return sheet;
}

Grid to_grid(const Plsc& completed) {
  if (status(completed) != Status::Completed) throw InvalidInput("board is not completed");
  return to_pls(completed).grid;
}

Plsc brick_embedding_board(const Plsc& board, const Box& box) {
  const int n = board.order();
  Plsc out = new_empty(n);
  for (const Cell& c : board.rooks())
    if (box.contains(c)) detail::BoardEditor::place_rook(out, c);
  for (int i : mask_to_indices(box.rows()))
    for (int j : mask_to_indices(box.cols()))
      for (int k : mask_to_indices(box.syms()))
        if (out.is_dot({i, j, k})) detail::BoardEditor::set(out, {i, j, k}, CellState::Empty);
  return out;
}

// ---------------------------------------------------------------------------
// M. Hall: conjugate so the rectangle's rows become complete symbol layers,
// then fill the remaining layers from a decomposition of the cover sheet.

Grid hall_complete(const Grid& rectangle) {
  if (rectangle.empty()) throw InvalidInput("empty rectangle");
  const int n = static_cast<int>(rectangle[0].size());
  const int r = static_cast<int>(rectangle.size());
  if (r >= n) throw InvalidInput("need 1 <= r < n");
  Grid g = embed_rectangle(rectangle, n);

  const RolePerm toLayers = RolePerm::parse("jki");
  Plsc layered = conjugate(from_pls(g), toLayers);
  const Box filled(n, full_mask(n), full_mask(n), full_mask(r));
  CoverSheet sheet = cover_sheet(layered, filled, Axis::Z);
  BinMatrix m = sheet_to_matrix(sheet, n, n);
  std::vector<BinMatrix> layers = koenig_decompose(m, n - r);
  for (int idx = 0; idx < n - r; ++idx)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (layers[idx].get(a, b)) layered = place_rook(layered, {a + 1, b + 1, r + 1 + idx});
  return to_grid(conjugate(layered, toLayers.inverse()));
}

std::optional<RyserWitness> ryser_violation(const Grid& rectangle, int n) {
  Grid g = embed_rectangle(rectangle, n);
  const int r = static_cast<int>(rectangle.size());
  const int s = static_cast<int>(rectangle[0].size());
  std::vector<int> count(n + 1, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) ++count[g[i][j]];
  for (int v = 1; v <= n; ++v)
    if (count[v] < r + s - n) return RyserWitness{v, count[v], r + s - n};
  return std::nullopt;
}

// Ryser: conjugate so symbols index rows, fill the cover sheet's missing
// columns, decompose, keep only the new rooks above the rectangle's rows and
// finish the resulting r x n rectangle with M. Hall.
Grid ryser_extend(const Grid& rectangle, int n) {
  Grid g = embed_rectangle(rectangle, n);
  const int r = static_cast<int>(rectangle.size());
  const int s = static_cast<int>(rectangle[0].size());
  if (auto w = ryser_violation(rectangle, n))
    throw InvalidInput("symbol " + std::to_string(w->symbol) + " occurs " +
                       std::to_string(w->occurrences) + " times, needs at least " +
                       std::to_string(w->required));

  if (s < n) {
    const RolePerm bySymbol = RolePerm::parse("kij");
    Plsc conj = conjugate(from_pls(g), bySymbol);
    const Box brick(n, full_mask(n), full_mask(r), full_mask(s));
    CoverSheet sheet = cover_sheet(conj, brick, Axis::Z);
    const int k = n - s;
    // Rows of `a` are the rectangle's rows; columns are symbols.
    BinMatrix a(r, n);
    for (int sym = 0; sym < n; ++sym)
      for (int row = 0; row < r; ++row) a.set(row, sym, sheet.value[sym][row] == 1);
    BinMatrix full = ryser_adjoin(a, k).transposed();
    std::vector<BinMatrix> layers = koenig_decompose(full, k);
    for (int idx = 0; idx < k; ++idx)
      for (int sym = 0; sym < n; ++sym)
        for (int row = 0; row < r; ++row)
          if (layers[idx].get(sym, row))
            conj = place_rook(conj, {sym + 1, row + 1, s + 1 + idx});
    Plsc back = conjugate(conj, bySymbol.inverse());
    Pls p = to_pls(back);
    for (int i = 0; i < r; ++i) g[i] = p.grid[i];
  }
  if (r == n) return g;
  Grid top(g.begin(), g.begin() + r);
  return hall_complete(top);
}

// ---------------------------------------------------------------------------
// Cruse

std::string CruseReport::summary() const {
  std::ostringstream os;
  auto line = [&](const char* name, const ConditionResult& c) {
    os << name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass) os << " (layer " << c.layer << " has " << c.observed << ", needs " << c.required << ")";
    os << '\n';
  };
  os << "brick " << dims[0] << "x" << dims[1] << "x" << dims[2] << ", c0 = " << c0
     << ", cap = " << cap << '\n';
  line("row layers", row_layers);
  line("column layers", column_layers);
  line("symbol layers", symbol_layers);
  os << "capacity: " << (capacity.pass ? "pass" : "FAIL") << " (c0 " << c0 << " vs cap " << cap
     << ")\n";
  return os.str();
}

CruseReport cruse_check(const Plsc& board, const Box& box) {
  const int n = board.order();
  if (box.order() != n) throw InvalidInput("box order differs from board order");
  require_rooks_inside(board, box);
  CruseReport rep;
  for (int a = 0; a < 3; ++a) {
    rep.dims[a] = box.size(a);
    if (rep.dims[a] >= n) throw InvalidInput("brick dimensions must be smaller than n");
  }
  const auto rooks = board.rooks();
  rep.c0 = static_cast<int>(rooks.size());
  rep.cap = cap(n, rep.dims[0], rep.dims[1], rep.dims[2]);

  ConditionResult* results[3] = {&rep.row_layers, &rep.column_layers, &rep.symbol_layers};
  for (int a = 0; a < 3; ++a) {
    const int other1 = rep.dims[(a + 1) % 3], other2 = rep.dims[(a + 2) % 3];
    const int need = other1 + other2 - n;
    for (int layer : mask_to_indices(box.mask(a))) {
      int cnt = 0;
      for (const Cell& c : rooks) cnt += c[a] == layer;
      if (cnt < need) {
        *results[a] = {false, layer, cnt, need};
        break;
      }
    }
  }
  if (rep.c0 > rep.cap) rep.capacity = {false, 0, rep.c0, static_cast<int>(rep.cap)};
  return rep;
}

Grid cruse_embed(const Plsc& board, const Box& box) {
  CruseReport rep = cruse_check(board, box);
  if (!rep.pass()) throw InvalidInput("embedding conditions fail:\n" + rep.summary());
  const int n = board.order();

  // Rotate so the box dimensions are non-increasing along (X, Y, Z).
  const detail::Rotation rot = detail::rotation_for(rep.dims);
  const Plsc rotated = conjugate(board, rot.perm);
  const Box rbox = rot.apply(box);
  const detail::CornerView view(rbox);
  const int r = rbox.size(0), s = rbox.size(1), t = rbox.size(2);
  const int k = n - t;

  // Cover sheet of the brick on its r x s footprint, in corner coordinates.
  CoverSheet sheet = cover_sheet(rotated, rbox, Axis::Z);
  BinMatrix a(r, s);
  for (int x = 1; x <= r; ++x)
    for (int y = 1; y <= s; ++y)
      a.set(x - 1, y - 1, sheet.value[view.global(0, x) - 1][view.global(1, y) - 1] == 1);

  // Extend the sheet to a k-regular n x n matrix and split it into the
  // symbol layers t+1..n.
  BinMatrix tall = fill_auxiliary_block(a, n, k);
  BinMatrix square = ryser_adjoin(tall.transposed(), k).transposed();
  std::vector<BinMatrix> layers = koenig_decompose(square, k);

  // Brick plus its vertical auxiliary brick: an r x s Latin rectangle over
  // corner symbols 1..n.
  Grid rect(r, std::vector<int>(s, 0));
  for (int x = 1; x <= r; ++x)
    for (int y = 1; y <= s; ++y) {
      for (int z = 1; z <= t; ++z)
        if (rotated.is_rook({view.global(0, x), view.global(1, y), view.global(2, z)}))
          rect[x - 1][y - 1] = z;
      for (int idx = 0; idx < k; ++idx)
        if (layers[idx].get(x - 1, y - 1)) rect[x - 1][y - 1] = t + 1 + idx;
    }
  Grid local = ryser_extend(rect, n);

  Grid rotatedGrid(n, std::vector<int>(n, 0));
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      rotatedGrid[view.global(0, x) - 1][view.global(1, y) - 1] = view.global(2, local[x - 1][y - 1]);
  return to_grid(conjugate(from_pls(rotatedGrid), rot.perm.inverse()));
}

}  // namespace plsc
