#include "plsc/matching.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "plsc/error.hpp"

namespace plsc {

BinMatrix BinMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  BinMatrix m(r, c);
  for (int a = 0; a < r; ++a) {
    if (static_cast<int>(rows[a].size()) != c) throw InvalidInput("ragged matrix rows");
    for (int b = 0; b < c; ++b) {
      if (rows[a][b] != 0 && rows[a][b] != 1) throw InvalidInput("matrix entries must be 0 or 1");
      m.set(a, b, rows[a][b] == 1);
    }
  }
  return m;
}

BinMatrix BinMatrix::identity(int n) {
  BinMatrix m(n, n);
  for (int a = 0; a < n; ++a) m.set(a, a, true);
  return m;
}

BinMatrix BinMatrix::ones(int rows, int cols) {
  BinMatrix m(rows, cols);
  std::fill(m.v_.begin(), m.v_.end(), 1);
  return m;
}

int BinMatrix::row_sum(int r) const {
  int s = 0;
  for (int c = 0; c < cols_; ++c) s += get(r, c);
  return s;
}

int BinMatrix::col_sum(int c) const {
  int s = 0;
  for (int r = 0; r < rows_; ++r) s += get(r, c);
  return s;
}

int BinMatrix::total() const { return static_cast<int>(std::count(v_.begin(), v_.end(), 1)); }

BinMatrix BinMatrix::transposed() const {
  BinMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.set(c, r, get(r, c));
  return t;
}

bool BinMatrix::is_permutation_matrix() const {
  if (rows_ != cols_) return false;
  for (int a = 0; a < rows_; ++a)
    if (row_sum(a) != 1 || col_sum(a) != 1) return false;
  return true;
}

std::string BinMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

bool augment(const BinMatrix& m, int row, std::vector<int>& colOwner,
             std::vector<char>& visited) {
  for (int c = 0; c < m.cols(); ++c) {
    if (!m.get(row, c) || visited[c]) continue;
    visited[c] = 1;
    if (colOwner[c] < 0 || augment(m, colOwner[c], colOwner, visited)) {
      colOwner[c] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Permutation> perfect_matching(const BinMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("perfect matching needs a square matrix");
  const int n = m.rows();
  std::vector<int> colOwner(n, -1);
  for (int r = 0; r < n; ++r) {
    std::vector<char> visited(n, 0);
    if (!augment(m, r, colOwner, visited)) return std::nullopt;
  }
  Permutation p(n);
  for (int c = 0; c < n; ++c) p[colOwner[c]] = c;
  return p;
}

std::vector<BinMatrix> koenig_decompose(const BinMatrix& m, int k) {
  if (m.rows() != m.cols()) throw InvalidInput("decomposition needs a square matrix");
  const int n = m.rows();
  for (int a = 0; a < n; ++a)
    if (m.row_sum(a) != k || m.col_sum(a) != k)
      throw InvalidInput("matrix is not " + std::to_string(k) + "-regular (line " +
                         std::to_string(a) + ")");
  BinMatrix rest = m;
  std::vector<BinMatrix> out;
  for (int round = 0; round < k; ++round) {
    auto p = perfect_matching(rest);
    // A regular bipartite graph always has a perfect matching.
    if (!p) throw std::logic_error("regular matrix without a perfect matching");
    BinMatrix layer(n, n);
    for (int r = 0; r < n; ++r) {
      layer.set(r, (*p)[r], true);
      rest.set(r, (*p)[r], false);
    }
    out.push_back(std::move(layer));
  }
  return out;
}

// ---------------------------------------------------------------------------

BinMatrix staircase_fill(int p, int q, const std::vector<int>& c, int m, int M,
                         std::vector<StaircaseStep>* trace) {
  if (p < 0 || q < 0) throw InvalidInput("negative matrix dimensions");
  if (static_cast<int>(c.size()) != p) throw InvalidInput("need one target per column");
  for (int cj : c)
    if (cj < 0 || cj > q) throw InvalidInput("column target outside 0..q");
  if (m < 0 || M < 0 || m > p || M > p) throw InvalidInput("row bounds must lie in 0..p");
  const long total = std::accumulate(c.begin(), c.end(), 0L);
  if (static_cast<long>(m) * q > total || total > static_cast<long>(M) * q)
    throw InvalidInput("need m*q <= sum(c) <= M*q");

  BinMatrix t(q, p);
  if (q == 0) return t;

  // Phase 1: stack each column's ones from the bottom, then settle the bottom
  // row of the active subsystem at exactly M ones by pushing the surplus
  // columns up by one cell.
  for (int j = 0; j < p; ++j)
    for (int h = 0; h < c[j]; ++h) t.set(q - 1 - h, j, true);

  auto height = [&](int j, int bottom) {
    int h = 0;
    while (h <= bottom && t.get(bottom - h, j)) ++h;
    return h;
  };

  for (int bottom = q - 1; bottom >= 0; --bottom) {
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> hs(p);
    for (int j = 0; j < p; ++j) hs[j] = height(j, bottom);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return hs[x] > hs[y]; });
    if (trace) trace->push_back({t, bottom, order});

    int inBottom = 0;
    for (int j = 0; j < p; ++j) inBottom += hs[j] > 0;
    if (inBottom <= M) break;

    for (int pos = M; pos < p; ++pos) {
      int j = order[pos];
      int h = hs[j];
      if (h == 0) continue;
      if (bottom - h < 0) throw std::logic_error("staircase push left the matrix");
      t.set(bottom, j, false);
      t.set(bottom - h, j, true);
    }
  }

  // Phase 2: lift single ones from the fullest row into the emptiest one until
  // every row reaches m.
  for (;;) {
    int lo = 0, hi = 0;
    for (int r = 0; r < q; ++r) {
      int s = t.row_sum(r);
      if (s < t.row_sum(lo)) lo = r;
      if (s >= t.row_sum(hi)) hi = r;
    }
    if (t.row_sum(lo) >= m) break;
    int pick = -1;
    for (int j = p - 1; j >= 0 && pick < 0; --j)
      if (t.get(hi, j) && !t.get(lo, j)) pick = j;
    if (pick < 0) throw std::logic_error("staircase lift found no movable one");
    t.set(hi, pick, false);
    t.set(lo, pick, true);
  }
  return t;
}

BinMatrix ryser_adjoin(const BinMatrix& a, int k) {
  const int r = a.rows(), n = a.cols();
  if (r > n) throw InvalidInput("matrix has more rows than columns");
  if (k < 0 || k > n) throw InvalidInput("regularity outside 0..n");
  for (int i = 0; i < r; ++i)
    if (a.row_sum(i) != k)
      throw InvalidInput("row " + std::to_string(i) + " does not hold exactly k ones");
  std::vector<int> deficit(n);
  for (int j = 0; j < n; ++j) {
    int nj = a.col_sum(j);
    if (nj < k - (n - r) || nj > k)
      throw InvalidInput("column " + std::to_string(j) + " count " + std::to_string(nj) +
                         " outside [k-(n-r), k]");
    deficit[j] = k - nj;
  }
  BinMatrix extra = staircase_fill(n, n - r, deficit, k, k);
  BinMatrix out(n, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) out.set(i, j, a.get(i, j));
  for (int i = 0; i < n - r; ++i)
    for (int j = 0; j < n; ++j) out.set(r + i, j, extra.get(i, j));
  return out;
}

BinMatrix fill_auxiliary_block(const BinMatrix& a, int n, int k) {
  const int r = a.rows(), s = a.cols();
  if (r < 0 || s < 1 || r > n || s > n) throw InvalidInput("region does not fit the frame");
  if (k < 0 || k > n) throw InvalidInput("regularity outside 0..n");
  for (int i = 0; i < r; ++i) {
    int v = a.row_sum(i);
    if (v < s + k - n || v > k)
      throw InvalidInput("row bound violated: row " + std::to_string(i) + " holds " +
                         std::to_string(v) + " ones");
  }
  std::vector<int> target(s);
  for (int j = 0; j < s; ++j) {
    int v = a.col_sum(j);
    if (v < r + k - n || v > k)
      throw InvalidInput("column bound violated: column " + std::to_string(j) + " holds " +
                         std::to_string(v) + " ones");
    target[j] = k - v;
  }
  const int a0 = a.total();
  if ((r + s - n) * k > a0)
    throw InvalidInput("lower count condition violated: (r+s-n)k = " +
                       std::to_string((r + s - n) * k) + " > a0 = " + std::to_string(a0));
  if (a0 > r * s - (n - k) * (r + s - n))
    throw InvalidInput("upper count condition violated: a0 = " + std::to_string(a0) +
                       " > rs-(n-k)(r+s-n) = " +
                       std::to_string(r * s - (n - k) * (r + s - n)));

  // Row bounds for the block; the clamps only matter when s + k < n or k > s.
  const int lo = std::max(0, s + k - n);
  const int hi = std::min(k, s);
  BinMatrix block = staircase_fill(s, n - r, target, lo, hi);
  BinMatrix out(n, s);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) out.set(i, j, a.get(i, j));
  for (int i = 0; i < n - r; ++i)
    for (int j = 0; j < s; ++j) out.set(r + i, j, block.get(i, j));
  return out;
}

}  // namespace plsc
