#pragma once

// The 3-D rook-board model of a partial Latin square.
//
// A board of order n is an n x n x n cube. Cell (i,j,k) holds a Rook when
// symbol k is placed at row i, column j; a Dot when k is still a candidate for
// (i,j); and is Empty otherwise. All public coordinates are 1-based.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plsc {

inline constexpr int kMaxOrder = 32;

// A set of indices in 1..n stored as a bit mask (bit v-1 <-> index v).
using IndexMask = std::uint64_t;

constexpr IndexMask bit(int v) { return IndexMask{1} << (v - 1); }
constexpr IndexMask full_mask(int n) {
  return n >= 64 ? ~IndexMask{0} : (IndexMask{1} << n) - 1;
}
int popcount(IndexMask m);
std::vector<int> mask_to_indices(IndexMask m);
IndexMask indices_to_mask(const std::vector<int>& v);

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };  // row, column, symbol

struct Cell {
  int i = 0;  // row
  int j = 0;  // column
  int k = 0;  // symbol

  int operator[](int axis) const { return axis == 0 ? i : axis == 1 ? j : k; }
  int& operator[](int axis) { return axis == 0 ? i : axis == 1 ? j : k; }
  auto operator<=>(const Cell&) const = default;
};

// Number of coordinates in which two cells differ.
int hamming_distance(const Cell& a, const Cell& b);

// An axis-parallel line of n cells. `axis` is the free coordinate; `a` and `b`
// are the two fixed coordinates in increasing axis order.
struct FileId {
  Axis axis = Axis::X;
  int a = 0;
  int b = 0;

  Cell cell_at(int free) const;
  auto operator<=>(const FileId&) const = default;
};

// The three files through a cell, ordered X, Y, Z.
std::array<FileId, 3> files_through(const Cell& c);

enum class CellState : std::uint8_t { Empty = 0, Dot = 1, Rook = 2 };

enum class Status { Completed, Open, Dead };
std::string_view to_string(Status s);

// Partial square as an n x n grid; 0 marks an empty cell.
using Grid = std::vector<std::vector<int>>;

// Permutation of coordinate roles. The conjugate board has, as its coordinate
// t, the source coordinate `source[t]`. For example "jki" maps (i,j,k) to
// (j,k,i).
struct RolePerm {
  std::array<int, 3> source{0, 1, 2};

  static RolePerm identity() { return {}; }
  // Accepts the six spellings "ijk", "ikj", "jik", "jki", "kij", "kji".
  static RolePerm parse(std::string_view name);
  static std::array<RolePerm, 6> all();

  RolePerm inverse() const;
  Cell apply(const Cell& c) const;
  std::string name() const;
  auto operator<=>(const RolePerm&) const = default;
};

// A triple of non-empty index subsets of 1..n. The subsets need not be
// contiguous; a corner box is just the special case of prefixes.
class Box {
 public:
  Box(int n, IndexMask rows, IndexMask cols, IndexMask syms);
  Box(int n, const std::vector<int>& rows, const std::vector<int>& cols,
      const std::vector<int>& syms);
  static Box corner(int n, int r, int s, int t);
  static Box full(int n) { return corner(n, n, n, n); }

  int order() const { return n_; }
  IndexMask mask(int axis) const { return masks_[axis]; }
  IndexMask rows() const { return masks_[0]; }
  IndexMask cols() const { return masks_[1]; }
  IndexMask syms() const { return masks_[2]; }
  int size(int axis) const { return popcount(masks_[axis]); }
  bool contains(const Cell& c) const;

  // Complement in every axis; nullopt when some component would be empty.
  std::optional<Box> remote_mate() const;

  bool operator==(const Box&) const = default;

 private:
  int n_;
  std::array<IndexMask, 3> masks_;
};

namespace detail {
class BoardEditor;
}

class Plsc {
 public:
  int order() const { return n_; }

  CellState at(const Cell& c) const { return cells_[index(c)]; }
  bool is_rook(const Cell& c) const { return at(c) == CellState::Rook; }
  bool is_dot(const Cell& c) const { return at(c) == CellState::Dot; }
  bool in_range(const Cell& c) const;

  int rook_count() const;
  int dot_count() const;
  std::vector<Cell> rooks() const;  // lexicographic order
  std::vector<Cell> dots() const;   // lexicographic order

  int dots_in(const FileId& f) const;
  std::optional<Cell> rook_in(const FileId& f) const;
  // Symbols k with (i,j,k) a Dot, as a mask.
  IndexMask dot_mask(int i, int j) const;

  bool operator==(const Plsc&) const = default;

 private:
  friend class detail::BoardEditor;
  Plsc(int n, CellState fill);

  std::size_t index(const Cell& c) const {
    return (static_cast<std::size_t>(c.i - 1) * n_ + (c.j - 1)) * n_ + (c.k - 1);
  }

  int n_;
  std::vector<CellState> cells_;
};

// Candidate-annotated projection of a board.
struct Pls {
  int n = 0;
  Grid grid;
  // candidates[i-1][j-1] lists the dot symbols of an empty cell (empty list for
  // filled cells).
  std::vector<std::vector<std::vector<int>>> candidates;
};

struct BoxCensus {
  int rooks = 0;
  int dots = 0;
  bool operator==(const BoxCensus&) const = default;
};

Plsc new_empty(int n);
// Rooks at the filled cells; dots at every cell not attacked by a rook.
Plsc from_pls(const Grid& grid);
Plsc place_rook(const Plsc& board, const Cell& c);
Plsc conjugate(const Plsc& board, const RolePerm& perm);
// nullopt when (i,j) already holds a rook, otherwise the dot symbols (an empty
// vector marks an eliminated file).
std::optional<std::vector<int>> candidate_set(const Plsc& board, int i, int j);
Status status(const Plsc& board);
BoxCensus box_census(const Plsc& board, const Box& box);
Pls to_pls(const Plsc& board);

// Checks the two board invariants: at most one rook per file, and no dot in a
// file that holds a rook.
bool satisfies_invariants(const Plsc& board);

// Every rook-free file, in (axis, a, b) order.
std::vector<FileId> rook_free_files(const Plsc& board);
// True when some rook-free file has no dots.
bool has_eliminated_file(const Plsc& board);

// Square order and partial-Latin validity of a grid.
bool is_partial_latin(const Grid& grid);
bool is_latin_square(const Grid& grid);

namespace detail {

// In-place access used by the library's own algorithms. Callers outside the
// library work with the value-returning functions above.
class BoardEditor {
 public:
  static Plsc make(int n, CellState fill) { return Plsc(n, fill); }
  static void set(Plsc& b, const Cell& c, CellState s) { b.cells_[b.index(c)] = s; }
  // Places a rook on a dot and clears every dot in the three files through it.
  static void place_rook(Plsc& b, const Cell& c);
};

}  // namespace detail

}  // namespace plsc
