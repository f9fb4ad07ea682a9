#pragma once

// Minimum candidate structures and their dot graphs. Every rook-free file of
// an mCS holds two dots, so joining dots that share a file gives a 3-regular
// graph; its components are the BUGs, each solvable exactly when bipartite.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plsc/board.hpp"

namespace plsc {

// True when every rook-free file contains exactly two dots.
bool is_mcs(const Plsc& board);

struct DotGraph {
  int n = 0;
  std::vector<Cell> vertices;            // dots in lexicographic order
  std::vector<std::vector<int>> adj;     // sorted neighbour lists
  std::vector<int> component;            // component label per vertex
  int component_count = 0;

  int index_of(const Cell& c) const;     // -1 when absent
  std::vector<std::pair<int, int>> edges() const;  // (a,b) with a < b, sorted
  bool regular(int degree) const;
};

// Graph on all dots of an mCS. Throws InvalidInput when the board is not one.
DotGraph dot_graph(const Plsc& board);

// Graph restricted to dots whose three files each hold exactly two dots.
// Equals dot_graph on an mCS.
DotGraph eligible_dot_graph(const Plsc& board);

// Vertex indices of each connected component, ascending; components ordered
// by their lowest vertex.
std::vector<std::vector<int>> bugs(const DotGraph& g);

struct BugSolutionSet {
  // Zero or two solutions, each one dot per file of the BUG (lexicographic).
  std::vector<std::vector<Cell>> solutions;
  // Shortest odd cycle when unsolvable.
  std::optional<std::vector<Cell>> odd_cycle;

  bool solvable() const { return !solutions.empty(); }
};

BugSolutionSet solve_bug(const DotGraph& g, const std::vector<int>& bug);

// A shortest odd cycle in the component, as consecutive vertices; nullopt when
// the component is bipartite.
std::optional<std::vector<Cell>> shortest_odd_cycle(const DotGraph& g, const std::vector<int>& bug);

// True when the cells are distinct vertices of `g` and consecutive cells
// (cyclically) are adjacent.
bool is_cycle(const DotGraph& g, const std::vector<Cell>& cycle);

struct BugVerdict {
  bool pass = true;
  bool mcs = false;               // the whole board is an mCS
  int bug_count = 0;              // components examined
  int skipped_vertices = 0;       // eligible dots left out of non-3-regular components
  int ineligible_dots = 0;        // dots in a file with a number of dots other than two
  std::optional<std::vector<Cell>> failing_bug;  // dots of the first unsolvable BUG
  std::optional<std::vector<Cell>> odd_cycle;
  std::string scope;              // description of what was examined

  std::string summary() const;
};

// Examines every BUG of the board (meant to be applied to a secondary
// extension). On a board that is not an mCS only the 3-regular components of
// the eligible dot graph are examined; the verdict records the scope.
BugVerdict bug_condition(const Plsc& board);

}  // namespace plsc
