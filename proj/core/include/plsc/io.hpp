#pragma once

// Text formats and shipped example boards.
//
// PLS:  n lines of n whitespace-separated tokens; a token is a symbol 1..n or
//       "." for an empty cell. Blank lines and lines starting with '#' are
//       ignored. Parsing applies automatic elimination (every unattacked cell
//       becomes a dot).
// PLSC: a header line "PLSC <n>" followed by lines "rook i j k" or
//       "dot i j k". Cells not mentioned are empty.
// Graph export: "GRAPH <v> <e>", then one "v i j k" line per vertex and one
//       "e a b" line per edge, with 0-based vertex indices.

#include <string>
#include <string_view>

#include "plsc/board.hpp"
#include "plsc/bug.hpp"

namespace plsc {

Grid parse_pls_grid(std::string_view text);
Plsc parse_pls(std::string_view text);
std::string serialize_pls(const Grid& grid);
// The rooks of the board as a PLS.
std::string serialize_pls(const Plsc& board);

Plsc parse_plsc(std::string_view text);
std::string serialize_plsc(const Plsc& board);

// PLSC when the first significant line starts with "PLSC", PLS otherwise.
Plsc parse_board(std::string_view text);
Plsc read_board_file(const std::string& path);
std::string read_text_file(const std::string& path);

// The square with each empty cell showing its candidates, e.g. "(35)";
// candidates are comma separated for n >= 10 and an eliminated cell shows "()".
std::string render_candidates(const Plsc& board);

std::string export_graph(const DotGraph& g);

namespace fixtures {

// Order-6 partial square whose candidate structure is a single unsolvable
// BUG with odd girth 9.
Grid gw6();
// Order-6 partial square with a 4x4x4 corner brick holding 10 rooks and two
// more rooks on the diagonal of the opposite 2x2 corner.
Grid cruse();

}  // namespace fixtures

}  // namespace plsc
