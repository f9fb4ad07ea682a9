#pragma once

// 0/1 matrix machinery: perfect matchings, decomposition of k-regular
// matrices into permutation matrices, and the constructive fills used by the
// completion pipelines. Matrix indices are 0-based.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plsc {

class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, 0) {}
  static BinMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static BinMatrix identity(int n);
  static BinMatrix ones(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return v_[idx(r, c)] != 0; }
  void set(int r, int c, bool on) { v_[idx(r, c)] = on ? 1 : 0; }

  int row_sum(int r) const;
  int col_sum(int c) const;
  int total() const;
  BinMatrix transposed() const;
  bool is_permutation_matrix() const;
  std::string to_string() const;

  bool operator==(const BinMatrix&) const = default;

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> v_;
};

// Row -> column assignment.
using Permutation = std::vector<int>;

// A system of distinct representatives for a square matrix, found by
// augmenting paths in fixed (lowest index first) scan order.
std::optional<Permutation> perfect_matching(const BinMatrix& m);

// Splits a matrix with exactly k ones in every row and column into k
// permutation matrices whose entrywise sum is the input.
std::vector<BinMatrix> koenig_decompose(const BinMatrix& m, int k);

// Snapshot of the push-up procedure, recorded after each column reordering.
struct StaircaseStep {
  BinMatrix matrix;
  int bottom = 0;                 // lowest row still in the active subsystem
  std::vector<int> column_order;  // columns by non-increasing ones in the subsystem
};

// Places c[j] ones in column j of a q x p matrix so that every row holds
// between m and M ones. Requires 0 <= c[j] <= q, 0 <= m, M <= p and
// m*q <= sum(c) <= M*q. The optional trace receives every intermediate
// staircase configuration of the first phase.
BinMatrix staircase_fill(int p, int q, const std::vector<int>& c, int m, int M,
                         std::vector<StaircaseStep>* trace = nullptr);

// Adjoins n - r rows to an r x n matrix with k ones per row, giving a square
// matrix with k ones in every row and column. Requires
// k - (n - r) <= N(i) <= k for every column count N(i).
BinMatrix ryser_adjoin(const BinMatrix& a, int k);

// Given the top-left r x s region A of an order-n matrix, fills the
// (n - r) x s block under it so every one of the s columns holds exactly k
// ones and every row holds between s + k - n and k ones. Returns the n x s
// matrix A over B. Throws InvalidInput naming the violated condition.
BinMatrix fill_auxiliary_block(const BinMatrix& a, int n, int k);

}  // namespace plsc
