#pragma once

// Completion-preserving extension of a board: treating desolate dots
// (primary extension) and eliminating deceptive dots found through remote
// brick couples (secondary extension), plus the capacity checks and
// fractional certificates that accompany them.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plsc/board.hpp"

namespace plsc {

// Largest order for which every subset box is enumerated.
inline constexpr int kExhaustiveBoxOrder = 8;

enum class ExtensionOutcome { Completed, Extended, NotCompletable };
std::string_view to_string(ExtensionOutcome o);

enum class WitnessRule {
  StuffedCouple,      // rooks(b) + rooks(mate) reached the couple capacity
  BalancedLayer,      // layer rectangle with rooks(A) - rooks(mate) = |R|+|C|-n
  BoxCapacity,        // rooks(b) above min(rs, rt, st, cap)
  CoupleCapacity,     // rooks(b) + rooks(mate) above the couple capacity
};
std::string_view to_string(WitnessRule r);

// A box and its remote mate (componentwise complement). For layer rules both
// masks share the single layer index on `layer_axis`. The mate may have an
// empty component, in which case it holds no cells.
struct RbcWitness {
  WitnessRule rule = WitnessRule::StuffedCouple;
  std::array<IndexMask, 3> box{};
  std::array<IndexMask, 3> mate{};
  int box_rooks = 0;
  int mate_rooks = 0;
  long capacity = 0;
  int layer_axis = -1;  // -1 for 3-D rules

  std::string describe() const;
  bool operator==(const RbcWitness&) const = default;
};

struct ExtensionReport {
  ExtensionOutcome outcome = ExtensionOutcome::Extended;
  std::vector<Cell> treated;               // desolate cells in treatment order
  std::vector<Cell> eliminated;            // dots removed by automatic elimination
  std::vector<Cell> deceptive_eliminated;  // dots removed as deceptive
  std::vector<Plsc> snapshots;             // board after each round, starting with the input
  std::optional<RbcWitness> capacity_violation;
  bool exhaustive = true;  // every box search ran over all subset boxes
  int rounds = 0;          // secondary rounds that eliminated something
};

// Cells holding a dot that is the only dot of at least one of its files.
std::vector<Cell> desolate_cells(const Plsc& board);

// Chooses which desolate cell to treat next; returns an index into the list.
using DesolatePicker = std::function<std::size_t(const std::vector<Cell>& desolate)>;

// Treats desolate cells until none remain, the board is completed, or a
// rook-free file runs out of dots. Default picker takes the lowest cell.
std::pair<Plsc, ExtensionReport> primary_extend(const Plsc& board,
                                                const DesolatePicker& pick = {});

// (rst + (n-r)(n-s)(n-t)) / n, floored.
long rbc_capacity(int n, int r, int s, int t);

struct DeceptiveDot {
  Cell dot;
  RbcWitness witness;
};

struct DeceptiveSearch {
  std::vector<DeceptiveDot> dots;  // lexicographic by cell
  bool exhaustive = true;
};

// Dots that no completion can turn into rooks: dots inside a stuffed couple,
// and dots of a layer rectangle whose balanced mate is dot-free.
DeceptiveSearch deceptive_dots(const Plsc& board);

enum class CapacityVerdict { Pass, Violated, BoundExceeded };

struct CapacityResult {
  CapacityVerdict verdict = CapacityVerdict::Pass;
  std::optional<RbcWitness> witness;
};

CapacityResult capacity_check(const Plsc& board);

// Weights forming a triply stochastic array: 1 on rooks, 1/k on each dot of a
// component in which every file holds exactly k dots.
struct FractionalCertificate {
  int n = 0;
  // denominator per cell in (i,j,k) order; 0 means weight 0.
  std::vector<int> denominator;
  std::vector<int> component_k;  // k of each dot component

  int weight_denominator(const Cell& c) const {
    return denominator[(static_cast<std::size_t>(c.i - 1) * n + (c.j - 1)) * n + (c.k - 1)];
  }
  // Exact check that every file sums to one.
  bool verify() const;
};

std::optional<FractionalCertificate> fractional_certificate(const Plsc& board);

// Alternates capacity checks, deceptive-dot elimination and primary
// extension until nothing changes.
std::pair<Plsc, ExtensionReport> secondary_extend(const Plsc& board);

// True when `fine` keeps every rook of `coarse` and has no dot that `coarse`
// lacks.
bool refines(const Plsc& coarse, const Plsc& fine);

// Connected components of the dots, two dots adjacent when they share a file.
std::vector<std::vector<Cell>> dot_components(const Plsc& board);

}  // namespace plsc
