#pragma once

// Exact backtracking over Latin-square completions, used as ground truth for
// the constructive and elimination algorithms. It reads boards only through
// their cell states and shares no code with the algorithms it checks.

#include <cstdint>
#include <optional>
#include <vector>

#include "plsc/board.hpp"

namespace plsc {

// Exhaustive counting is refused above this order unless a limit is given.
inline constexpr int kOracleMaxOrder = 7;

struct OracleResult {
  std::uint64_t count = 0;
  bool limit_reached = false;
  std::vector<Grid> completions;  // lexicographic, when requested
};

// Latin squares that keep P's rooks and put every other symbol on a dot of P.
// `limit` = 0 means no limit. Throws InvalidInput for n > kOracleMaxOrder
// without a limit.
OracleResult count_completions(const Plsc& board, std::uint64_t limit = 0,
                               bool enumerate = false);

// Largest number of rooks an order-n Latin square puts in the corner box
// r x s x t.
int max_box_rooks(int n, int r, int s, int t);

// Same, counting rooks in the corner box together with its remote mate
// (rows r+1..n, columns s+1..n, symbols t+1..n).
int max_rbc_rooks(int n, int r, int s, int t);

// True when no completion of the board puts a rook on `dot`.
bool elimination_safe(const Plsc& board, const Cell& dot);

}  // namespace plsc
