#pragma once

// Free-standing bricks of rooks and dots: layer potentials, compactness,
// the embedding conditions, full extensions and brick solutions.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "plsc/board.hpp"

namespace plsc {

// An a x b x c block of cell states, addressed with 1-based local
// coordinates. Rooks are non-attacking and files holding a rook hold no dot.
class CompactBrick {
 public:
  CompactBrick(int a, int b, int c);
  // Copies the cells of `box` out of `board`, in increasing index order.
  static CompactBrick extract(const Plsc& board, const Box& box);

  int dim(int axis) const { return dims_[axis]; }
  const std::array<int, 3>& dims() const { return dims_; }
  CellState at(const Cell& c) const { return cells_[index(c)]; }
  void set(const Cell& c, CellState s) { cells_[index(c)] = s; }
  bool occupied(const Cell& c) const { return at(c) != CellState::Empty; }

  // True when the file through `c` along `axis`, restricted to the brick,
  // holds a rook or a dot.
  bool file_occupied(const Cell& c, int axis) const;

  std::vector<Cell> rooks() const;
  std::vector<Cell> dots() const;
  // Non-attacking rooks and dot-free rook files.
  bool well_formed() const;

  bool operator==(const CompactBrick&) const = default;

 private:
  std::size_t index(const Cell& c) const {
    return (static_cast<std::size_t>(c.i - 1) * dims_[1] + (c.j - 1)) * dims_[2] + (c.k - 1);
  }
  std::array<int, 3> dims_;
  std::vector<CellState> cells_;
};

// A layer whose two directions disagree on how many occupied files it has.
struct ImpossibleLayer {
  int axis = 0;
  int layer = 0;
  int first_direction = 0;   // occupied files along the lower remaining axis
  int second_direction = 0;  // occupied files along the higher remaining axis
};

struct LayerPotentials {
  // potential[axis][layer-1]; valid only when `impossible` is empty.
  std::array<std::vector<int>, 3> potential;
  std::optional<ImpossibleLayer> impossible;
};

LayerPotentials potentials(const CompactBrick& brick);

struct Compactness {
  bool compact = false;
  int potential = 0;
  std::array<int, 3> axis_sums{};
  std::optional<ImpossibleLayer> impossible;
};

Compactness is_compact(const CompactBrick& brick);

struct CompactConditionResult {
  bool pass = true;
  int layer = 0;
  int observed = 0;
  int required = 0;
};

struct CompactCruseReport {
  bool compact = false;
  int potential = 0;
  long cap = 0;
  std::array<CompactConditionResult, 3> layers;  // per axis: N(i) >= other dims - n
  CompactConditionResult capacity;               // p0 <= cap(n,a,b,c)

  bool pass() const {
    return compact && layers[0].pass && layers[1].pass && layers[2].pass && capacity.pass;
  }
  std::string summary() const;
};

CompactCruseReport compact_cruse_check(const CompactBrick& brick, int n);

// Places the brick at the origin of an order-n board and adds a full
// extension: n^2 - p0 non-attacking rooks outside the brick, none of them in
// a file that the brick occupies. Throws InvalidInput if the conditions fail.
Plsc embed_compact(const CompactBrick& brick, int n);

// Lexicographically least set of p0 non-attacking rooks (existing rooks
// included) on the brick's rooks and dots covering every occupied file once.
std::optional<std::vector<Cell>> solve_compact(const CompactBrick& brick);

// Smallest box containing every dot (and, unless `dots_only`, every rook).
std::optional<Box> closure_hull(const Plsc& board, bool dots_only = false);

// Upper bound on the extent of a brick, used as the order above which the
// embedding conditions always hold.
int diameter(const CompactBrick& brick);

}  // namespace plsc
