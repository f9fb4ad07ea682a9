#include "plsc/oracle.hpp"

#include <algorithm>
#include <bit>

#include "plsc/error.hpp"

namespace plsc {

namespace {

using Mask = std::uint32_t;

inline int pc(Mask m) { return std::popcount(m); }

// Latin-square completion search. Cells either hold a symbol or list the
// symbols they may still take. Branches on the most constrained constraint
// among cells, (row, symbol) pairs and (column, symbol) pairs; ties go to the
// first one scanned, so the search is deterministic.
class Solver {
 public:
  explicit Solver(int n) : n_(n), grid_(n * n, 0), allowed_(n * n, full()), row_(n, 0), col_(n, 0) {}

  Mask full() const { return n_ >= 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  // Symbol s (1-based) at (i,j) (0-based). Returns false on a clash.
  bool fix(int i, int j, int s) {
    Mask b = Mask{1} << (s - 1);
    if (grid_[i * n_ + j] != 0 || (row_[i] & b) || (col_[j] & b)) return false;
    grid_[i * n_ + j] = s;
    row_[i] |= b;
    col_[j] |= b;
    return true;
  }
  void restrict(int i, int j, Mask allowed) { allowed_[i * n_ + j] &= allowed; }

  std::uint64_t run(std::uint64_t limit, bool enumerate) {
    limit_ = limit;
    enumerate_ = enumerate;
    count_ = 0;
    if (!consistent_) return 0;
    search();
    return count_;
  }
  bool limit_reached() const { return limit_ > 0 && count_ >= limit_; }
  std::vector<Grid>& solutions() { return sols_; }

  void mark_inconsistent() { consistent_ = false; }

 private:
  void search() {
    const int n = n_;
    std::vector<Mask> opts(n * n, 0);
    bool any_empty = false;
    int best = n + 1, kind = -1, a = -1, b = -1;
    Mask best_mask = 0;
    for (int c = 0; c < n * n; ++c) {
      if (grid_[c]) continue;
      any_empty = true;
      Mask o = allowed_[c] & ~row_[c / n] & ~col_[c % n];
      opts[c] = o;
      int p = pc(o);
      if (p == 0) return;
      if (p < best) {
        best = p;
        kind = 0;
        a = c;
        best_mask = o;
      }
    }
    if (!any_empty) {
      ++count_;
      if (enumerate_) {
        Grid g(n, std::vector<int>(n));
        for (int c = 0; c < n * n; ++c) g[c / n][c % n] = grid_[c];
        sols_.push_back(std::move(g));
      }
      return;
    }
    for (int line = 0; line < 2; ++line)
      for (int x = 0; x < n; ++x) {
        Mask used = line == 0 ? row_[x] : col_[x];
        for (int s = 0; s < n; ++s) {
          if (used & (Mask{1} << s)) continue;
          Mask pos = 0;
          for (int y = 0; y < n; ++y) {
            int c = line == 0 ? x * n + y : y * n + x;
            if (!grid_[c] && (opts[c] >> s & 1)) pos |= Mask{1} << y;
          }
          int p = pc(pos);
          if (p == 0) return;
          if (p < best) {
            best = p;
            kind = 1 + line;
            a = x;
            b = s;
            best_mask = pos;
          }
        }
      }
    for (Mask m = best_mask; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int i, j, s;
      if (kind == 0) {
        i = a / n;
        j = a % n;
        s = v + 1;
      } else if (kind == 1) {
        i = a;
        j = v;
        s = b + 1;
      } else {
        i = v;
        j = a;
        s = b + 1;
      }
      Mask bit = Mask{1} << (s - 1);
      grid_[i * n + j] = s;
      row_[i] |= bit;
      col_[j] |= bit;
      search();
      grid_[i * n + j] = 0;
      row_[i] &= ~bit;
      col_[j] &= ~bit;
      if (limit_reached()) return;
    }
  }

  int n_;
  std::vector<int> grid_;
  std::vector<Mask> allowed_;
  std::vector<Mask> row_, col_;
  std::uint64_t limit_ = 0, count_ = 0;
  bool enumerate_ = false;
  bool consistent_ = true;
  std::vector<Grid> sols_;
};

Solver solver_for(const Plsc& board) {
  const int n = board.order();
  Solver s(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int sym = 0;
      Mask dots = 0;
      for (int k = 1; k <= n; ++k) {
        CellState st = board.at(Cell{i, j, k});
        if (st == CellState::Rook) {
          if (sym) s.mark_inconsistent();
          sym = k;
        } else if (st == CellState::Dot) {
          dots |= Mask{1} << (k - 1);
        }
      }
      if (sym) {
        if (!s.fix(i - 1, j - 1, sym)) s.mark_inconsistent();
      } else {
        s.restrict(i - 1, j - 1, dots);
      }
    }
  return s;
}

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) throw InvalidInput("oracle: order out of range");
}

// Branch and bound over the pattern of a Latin square with respect to the
// symbols 1..t: the 0/1 matrix marking cells whose symbol is at most t. Every
// Latin square has such a pattern with all line sums t, and the number of
// rooks in the corner box (and its remote mate) depends only on the pattern.
// Patterns are enumerated row by row; one that beats the incumbent is kept
// only after an exact completion search realises it.
class PatternSearch {
 public:
  PatternSearch(int n, int r, int s, int t, bool with_mate)
      : n_(n), r_(r), s_(s), t_(t), with_mate_(with_mate), col_(n, 0), rows_(n, 0) {
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (pc(m) == t) masks_.push_back(m);
    // Try high-scoring rows first so that the incumbent rises quickly.
    for (int kind = 0; kind < 2; ++kind) {
      auto& v = ordered_[kind];
      v = masks_;
      std::stable_sort(v.begin(), v.end(), [&](Mask x, Mask y) {
        return row_score(kind == 0, x) > row_score(kind == 0, y);
      });
    }
  }

  int run() {
    best_ = -1;
    dfs(0, 0);
    return best_;
  }

 private:
  int row_score(bool in_r, Mask m) const {
    const Mask colsC = (Mask{1} << s_) - 1;
    const Mask all = (Mask{1} << n_) - 1;
    if (in_r) return pc(m & colsC);
    if (!with_mate_) return 0;
    return pc(~m & all & ~colsC);  // cells of the mate: symbol above t
  }

  int bound(int i) const {
    // Remaining rows: each contributes at most its own best score, and each
    // column can still take t - col_ ones.
    int rest = 0;
    for (int x = i; x < n_; ++x) {
      if (x < r_)
        rest += std::min(s_, t_);
      else if (with_mate_)
        rest += std::min(n_ - s_, n_ - t_);
    }
    int box_cols = 0, mate_cols = 0;
    int rows_r = std::max(0, r_ - i), rows_rc = n_ - std::max(i, r_);
    for (int j = 0; j < n_; ++j) {
      if (j < s_) box_cols += std::min(t_ - col_[j], rows_r);
      else mate_cols += std::min(rows_rc, rows_rc - std::max(0, (t_ - col_[j]) - rows_r));
    }
    int by_cols = box_cols + (with_mate_ ? mate_cols : 0);
    return std::min(rest, by_cols);
  }

  bool realisable() const {
    Solver sv(n_);
    const Mask low = (Mask{1} << t_) - 1;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) sv.restrict(i, j, (rows_[i] >> j & 1) ? low : ~low);
    return sv.run(1, false) > 0;
  }

  void dfs(int i, int score) {
    if (score + bound(i) <= best_) return;
    if (i == n_) {
      if (realisable()) best_ = score;
      return;
    }
    const int left_after = n_ - i - 1;
    for (Mask m : ordered_[i < r_ ? 0 : 1]) {
      bool ok = true;
      for (int j = 0; j < n_ && ok; ++j) {
        int c = col_[j] + (m >> j & 1);
        ok = c <= t_ && t_ - c <= left_after;
      }
      if (!ok) continue;
      for (int j = 0; j < n_; ++j) col_[j] += m >> j & 1;
      rows_[i] = m;
      dfs(i + 1, score + row_score(i < r_, m));
      for (int j = 0; j < n_; ++j) col_[j] -= m >> j & 1;
    }
  }

  int n_, r_, s_, t_;
  bool with_mate_;
  std::vector<int> col_;
  std::vector<Mask> rows_;
  std::vector<Mask> masks_;
  std::vector<Mask> ordered_[2];
  int best_ = -1;
};

void check_shape(int n, int r, int s, int t) {
  check_order(n);
  if (n > kOracleMaxOrder) throw InvalidInput("oracle: box maximisation limited to small orders");
  if (r < 1 || s < 1 || t < 1 || r > n || s > n || t > n)
    throw InvalidInput("oracle: need 1 <= r,s,t <= n");
}

}  // namespace

OracleResult count_completions(const Plsc& board, std::uint64_t limit, bool enumerate) {
  check_order(board.order());
  if (board.order() > kOracleMaxOrder && limit == 0)
    throw InvalidInput("oracle: exhaustive counting above order 7 needs a limit");
  Solver s = solver_for(board);
  OracleResult res;
  res.count = s.run(limit, enumerate);
  res.limit_reached = s.limit_reached();
  if (enumerate) {
    res.completions = std::move(s.solutions());
    std::sort(res.completions.begin(), res.completions.end());
  }
  return res;
}

int max_box_rooks(int n, int r, int s, int t) {
  check_shape(n, r, s, t);
  return PatternSearch(n, r, s, t, false).run();
}

int max_rbc_rooks(int n, int r, int s, int t) {
  check_shape(n, r, s, t);
  return PatternSearch(n, r, s, t, true).run();
}

bool elimination_safe(const Plsc& board, const Cell& dot) {
  check_order(board.order());
  if (!board.in_range(dot) || !board.is_dot(dot))
    throw InvalidInput("elimination_safe: cell does not hold a dot");
  Solver s = solver_for(board);
  s.restrict(dot.i - 1, dot.j - 1, Mask{1} << (dot.k - 1));
  return s.run(1, false) == 0;
}

}  // namespace plsc
