#pragma once

// Cover sheets and the constructive completion pipelines for Latin
// rectangles (M. Hall, Ryser) and rook-only bricks (Cruse).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "plsc/board.hpp"
#include "plsc/matching.hpp"

namespace plsc {

// cap(n,r,s,t) = rs + rt + st - n(r+s+t) + n^2.
long cap(int n, int r, int s, int t);
// The three factored forms of cap; all equal the symmetric polynomial above.
long cap_form_rs(int n, int r, int s, int t);  // rs - (n-t)(r+s-n)
long cap_form_st(int n, int r, int s, int t);  // st - (n-r)(s+t-n)
long cap_form_rt(int n, int r, int s, int t);  // rt - (n-s)(r+t-n)
// min(rs, rt, st, cap): the largest rook count any completion can put in an
// r x s x t box.
long effective_cap(int n, int r, int s, int t);

// A partly defined n x n 0/1 matrix over the plane perpendicular to `depth`.
struct CoverSheet {
  int n = 0;
  Axis depth = Axis::Z;
  // Indexed [u-1][v-1] with (u,v) the two plane coordinates in axis order.
  std::vector<std::vector<bool>> defined;
  std::vector<std::vector<int>> value;

  int ones() const;
  int defined_count() const;
};

// Cell (u,v) of the sheet is defined on the projection of `box` and equals 1
// exactly when the file segment through (u,v) inside `box` holds no rook.
// Throws InvalidInput if the board has a rook outside `box`.
CoverSheet cover_sheet(const Plsc& board, const Box& box, Axis depth);

// Completes an r x n Latin rectangle (1 <= r < n) to a Latin square.
Grid hall_complete(const Grid& rectangle);

// Where a Ryser extension is impossible, the first symbol that occurs too
// rarely.
struct RyserWitness {
  int symbol = 0;
  int occurrences = 0;
  int required = 0;
};

// Checks N(i) >= r + s - n for the r x s rectangle; nullopt when it holds.
std::optional<RyserWitness> ryser_violation(const Grid& rectangle, int n);

// Extends an r x s Latin rectangle on symbols 1..n to an order-n Latin square
// with the rectangle in its top-left corner. Throws InvalidInput (naming the
// witness symbol) if the Ryser condition fails.
Grid ryser_extend(const Grid& rectangle, int n);

struct ConditionResult {
  bool pass = true;
  int layer = 0;     // failing layer (1-based index within its axis), 0 if none
  int observed = 0;  // rook count (or c0) seen at the witness
  int required = 0;  // layer minimum (or cap) that was violated
};

struct CruseReport {
  std::array<int, 3> dims{};  // r, s, t
  int c0 = 0;                 // rooks in the brick
  long cap = 0;
  ConditionResult row_layers;     // each row layer holds >= s+t-n rooks
  ConditionResult column_layers;  // each column layer holds >= r+t-n rooks
  ConditionResult symbol_layers;  // each symbol layer holds >= r+s-n rooks
  ConditionResult capacity;       // c0 <= cap

  bool pass() const {
    return row_layers.pass && column_layers.pass && symbol_layers.pass && capacity.pass;
  }
  std::string summary() const;
};

// Evaluates the four embedding conditions for the rooks of `board`, all of
// which must lie in `box`; each box dimension must be < n.
CruseReport cruse_check(const Plsc& board, const Box& box);

// Embeds the box's rooks in a Latin square of order n that places no other
// rook inside the box. Throws InvalidInput if cruse_check fails.
Grid cruse_embed(const Plsc& board, const Box& box);

// Latin-square grid of a completed board.
Grid to_grid(const Plsc& completed);
// Board holding exactly the rooks of `board` that lie in `box`, with every
// other cell of `box` Empty and every unattacked cell outside it a Dot.
Plsc brick_embedding_board(const Plsc& board, const Box& box);

}  // namespace plsc
