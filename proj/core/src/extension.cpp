#include "plsc/extension.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "plsc/completion.hpp"
#include "plsc/error.hpp"

namespace plsc {

std::string_view to_string(ExtensionOutcome o) {
  switch (o) {
    case ExtensionOutcome::Completed: return "Completed";
    case ExtensionOutcome::Extended: return "Extended";
    case ExtensionOutcome::NotCompletable: return "NotCompletable";
  }
  return "?";
}

std::string_view to_string(WitnessRule r) {
  switch (r) {
    case WitnessRule::StuffedCouple: return "stuffed couple";
    case WitnessRule::BalancedLayer: return "balanced layer";
    case WitnessRule::BoxCapacity: return "box capacity";
    case WitnessRule::CoupleCapacity: return "couple capacity";
  }
  return "?";
}

namespace {

std::string mask_str(IndexMask m) {
  std::string s = "{";
  bool first = true;
  for (int v : mask_to_indices(m)) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

std::string masks_str(const std::array<IndexMask, 3>& m) {
  return mask_str(m[0]) + "x" + mask_str(m[1]) + "x" + mask_str(m[2]);
}

// Rook symbol and dot symbols per (row, column), 0-based.
struct Footprint {
  int n;
  std::vector<int> rook;         // symbol or 0
  std::vector<IndexMask> dots;   // dot symbols

  explicit Footprint(const Plsc& b) : n(b.order()), rook(n * n, 0), dots(n * n, 0) {
    for (const Cell& c : b.rooks()) rook[(c.i - 1) * n + (c.j - 1)] = c.k;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) dots[(i - 1) * n + (j - 1)] = b.dot_mask(i, j);
  }
};

// A layer of the board perpendicular to `axis`, as rows over the lower
// remaining axis with column masks over the higher one.
struct LayerRows {
  std::vector<IndexMask> rooks, dots;
};

LayerRows layer_rows(const Plsc& b, int axis, int v) {
  int n = b.order();
  int u = axis == 0 ? 1 : 0;
  int w = axis == 2 ? 1 : 2;
  LayerRows out{std::vector<IndexMask>(n, 0), std::vector<IndexMask>(n, 0)};
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      Cell c;
      c[axis] = v;
      c[u] = x;
      c[w] = y;
      CellState s = b.at(c);
      if (s == CellState::Rook) out.rooks[x - 1] |= bit(y);
      if (s == CellState::Dot) out.dots[x - 1] |= bit(y);
    }
  return out;
}

// Candidate masks per axis for boards too large for full enumeration:
// projections of dot components and of all dots, with complements.
std::array<std::vector<IndexMask>, 3> heuristic_families(const Plsc& b) {
  int n = b.order();
  IndexMask full = full_mask(n);
  std::array<std::vector<IndexMask>, 3> fam;
  auto comps = dot_components(b);
  std::array<IndexMask, 3> all{};
  for (const auto& comp : comps) {
    std::array<IndexMask, 3> p{};
    for (const Cell& c : comp)
      for (int a = 0; a < 3; ++a) p[a] |= bit(c[a]);
    for (int a = 0; a < 3; ++a) {
      fam[a].push_back(p[a]);
      fam[a].push_back(full & ~p[a]);
      all[a] |= p[a];
    }
  }
  for (int a = 0; a < 3; ++a) {
    fam[a].push_back(all[a]);
    fam[a].push_back(full & ~all[a]);
    fam[a].push_back(full);
    for (int v = 1; v <= n; ++v) {
      fam[a].push_back(bit(v));
      fam[a].push_back(full & ~bit(v));
    }
    std::erase(fam[a], IndexMask{0});
    std::sort(fam[a].begin(), fam[a].end());
    fam[a].erase(std::unique(fam[a].begin(), fam[a].end()), fam[a].end());
  }
  return fam;
}

std::vector<IndexMask> all_nonempty(int n) {
  std::vector<IndexMask> v;
  for (IndexMask m = 1; m <= full_mask(n); ++m) v.push_back(m);
  return v;
}

// Per-(R,C) symbol counts for a couple: box cells R x C, mate cells
// complement(R) x complement(C).
struct CoupleCounts {
  std::vector<int> box, mate;  // indexed by symbol-1
  IndexMask box_dots = 0, mate_dots = 0;
};

CoupleCounts couple_counts(const Footprint& f, IndexMask R, IndexMask C) {
  int n = f.n;
  CoupleCounts cc{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (int i = 0; i < n; ++i) {
    bool in_r = (R >> i) & 1;
    for (int j = 0; j < n; ++j) {
      bool in_c = (C >> j) & 1;
      if (in_r != in_c) continue;
      int s = f.rook[i * n + j];
      IndexMask d = f.dots[i * n + j];
      if (in_r) {
        if (s) ++cc.box[s - 1];
        cc.box_dots |= d;
      } else {
        if (s) ++cc.mate[s - 1];
        cc.mate_dots |= d;
      }
    }
  }
  return cc;
}

// Sums of per-symbol counts over every subset of symbols.
std::vector<int> subset_sums(const std::vector<int>& w, int n) {
  std::vector<int> out(std::size_t{1} << n, 0);
  for (std::size_t s = 1; s < out.size(); ++s) {
    int low = std::countr_zero(s);
    out[s] = out[s & (s - 1)] + w[low];
  }
  return out;
}

int sum_over(const std::vector<int>& w, IndexMask S) {
  int t = 0;
  for (int v : mask_to_indices(S)) t += w[v - 1];
  return t;
}

class DeceptiveCollector {
 public:
  explicit DeceptiveCollector(const Plsc& b) : b_(b), n_(b.order()), mark_(n_ * n_ * n_, false) {}

  void add_region(const std::array<IndexMask, 3>& region, const RbcWitness& w) {
    for (int i : mask_to_indices(region[0]))
      for (int j : mask_to_indices(region[1])) {
        IndexMask d = b_.dot_mask(i, j) & region[2];
        for (int k : mask_to_indices(d)) {
          std::size_t idx = (static_cast<std::size_t>(i - 1) * n_ + (j - 1)) * n_ + (k - 1);
          if (mark_[idx]) continue;
          mark_[idx] = true;
          found_.push_back({Cell{i, j, k}, w});
        }
      }
  }

  std::vector<DeceptiveDot> take() {
    std::sort(found_.begin(), found_.end(),
              [](const DeceptiveDot& a, const DeceptiveDot& b) { return a.dot < b.dot; });
    return std::move(found_);
  }

 private:
  const Plsc& b_;
  int n_;
  std::vector<bool> mark_;
  std::vector<DeceptiveDot> found_;
};

}  // namespace

std::vector<Cell> desolate_cells(const Plsc& board) {
  std::vector<Cell> out;
  for (const Cell& c : board.dots()) {
    for (const FileId& f : files_through(c))
      if (board.dots_in(f) == 1) {
        out.push_back(c);
        break;
      }
  }
  return out;
}

std::pair<Plsc, ExtensionReport> primary_extend(const Plsc& board, const DesolatePicker& pick) {
  Plsc cur = board;
  ExtensionReport rep;
  rep.snapshots.push_back(cur);
  for (;;) {
    if (status(cur) == Status::Completed) {
      rep.outcome = ExtensionOutcome::Completed;
      break;
    }
    if (has_eliminated_file(cur)) {
      rep.outcome = ExtensionOutcome::NotCompletable;
      break;
    }
    auto des = desolate_cells(cur);
    if (des.empty()) {
      rep.outcome = ExtensionOutcome::Extended;
      break;
    }
    std::size_t idx = pick ? pick(des) : 0;
    if (idx >= des.size()) throw InvalidInput("desolate picker returned an out-of-range index");
    const Cell c = des[idx];
    for (const FileId& f : files_through(c))
      for (int v = 1; v <= cur.order(); ++v) {
        Cell d = f.cell_at(v);
        if (d != c && cur.is_dot(d)) rep.eliminated.push_back(d);
      }
    detail::BoardEditor::place_rook(cur, c);
    rep.treated.push_back(c);
    rep.snapshots.push_back(cur);
  }
  std::sort(rep.eliminated.begin(), rep.eliminated.end());
  rep.eliminated.erase(std::unique(rep.eliminated.begin(), rep.eliminated.end()),
                       rep.eliminated.end());
  return {cur, rep};
}

long rbc_capacity(int n, int r, int s, int t) {
  if (n < 1 || r < 1 || s < 1 || t < 1 || r > n || s > n || t > n)
    throw InvalidInput("rbc_capacity: need 1 <= r,s,t <= n");
  long num = static_cast<long>(r) * s * t + static_cast<long>(n - r) * (n - s) * (n - t);
  return num / n;
}

DeceptiveSearch deceptive_dots(const Plsc& board) {
  const int n = board.order();
  const IndexMask full = full_mask(n);
  DeceptiveSearch out;
  DeceptiveCollector col(board);
  Footprint f(board);

  const bool exhaustive = n <= kExhaustiveBoxOrder;
  out.exhaustive = exhaustive;
  std::array<std::vector<IndexMask>, 3> fam;
  if (exhaustive) {
    auto all = all_nonempty(n);
    fam = {all, all, all};
  } else {
    fam = heuristic_families(board);
  }

  // Stuffed couples.
  for (IndexMask R : fam[0])
    for (IndexMask C : fam[1]) {
      CoupleCounts cc = couple_counts(f, R, C);
      if (!cc.box_dots && !cc.mate_dots) continue;
      int r = popcount(R), s = popcount(C);
      auto visit = [&](IndexMask S, int box_rooks, int mate_rooks) {
        long capv = rbc_capacity(n, r, s, popcount(S));
        if (box_rooks + mate_rooks != capv) return;
        IndexMask Sc = full & ~S;
        if (!(cc.box_dots & S) && !(cc.mate_dots & Sc)) return;
        RbcWitness w{WitnessRule::StuffedCouple, {R, C, S}, {full & ~R, full & ~C, Sc},
                     box_rooks, mate_rooks, capv, -1};
        col.add_region(w.box, w);
        col.add_region(w.mate, w);
      };
      if (exhaustive) {
        auto b1 = subset_sums(cc.box, n);
        auto b2 = subset_sums(cc.mate, n);
        int mate_all = b2.back();
        for (IndexMask S = 1; S <= full; ++S) visit(S, b1[S], mate_all - b2[S]);
      } else {
        for (IndexMask S : fam[2])
          visit(S, sum_over(cc.box, S), sum_over(cc.mate, full & ~S));
      }
    }

  // Balanced layer rectangles with a perfect side.
  for (int axis = 0; axis < 3; ++axis) {
    int u = axis == 0 ? 1 : 0;
    int w = axis == 2 ? 1 : 2;
    for (int v = 1; v <= n; ++v) {
      LayerRows L = layer_rows(board, axis, v);
      IndexMask any_dot = 0;
      for (IndexMask d : L.dots) any_dot |= d;
      if (!any_dot) continue;
      for (IndexMask R : fam[u])
        for (IndexMask C : fam[w]) {
          int ra = 0, rm = 0;
          bool da = false, dm = false;
          for (int x = 0; x < n; ++x) {
            if ((R >> x) & 1) {
              ra += popcount(L.rooks[x] & C);
              da = da || (L.dots[x] & C);
            } else {
              rm += popcount(L.rooks[x] & ~C & full);
              dm = dm || (L.dots[x] & ~C & full);
            }
          }
          if (da == dm) continue;  // need one perfect side and dots on the other
          int req = popcount(R) + popcount(C) - n;
          if (ra - rm != req) continue;
          RbcWitness wt;
          wt.rule = WitnessRule::BalancedLayer;
          wt.layer_axis = axis;
          wt.box[axis] = bit(v);
          wt.mate[axis] = bit(v);
          wt.box[u] = R;
          wt.box[w] = C;
          wt.mate[u] = full & ~R;
          wt.mate[w] = full & ~C;
          wt.box_rooks = ra;
          wt.mate_rooks = rm;
          wt.capacity = req;
          col.add_region(da ? wt.box : wt.mate, wt);
        }
    }
  }
  out.dots = col.take();
  return out;
}

CapacityResult capacity_check(const Plsc& board) {
  const int n = board.order();
  if (n > kExhaustiveBoxOrder) return {CapacityVerdict::BoundExceeded, std::nullopt};
  const IndexMask full = full_mask(n);
  Footprint f(board);
  for (IndexMask R = 1; R <= full; ++R)
    for (IndexMask C = 1; C <= full; ++C) {
      CoupleCounts cc = couple_counts(f, R, C);
      int r = popcount(R), s = popcount(C);
      auto b1 = subset_sums(cc.box, n);
      auto b2 = subset_sums(cc.mate, n);
      int mate_all = b2.back();
      for (IndexMask S = 1; S <= full; ++S) {
        int t = popcount(S);
        int br = b1[S], mr = mate_all - b2[S];
        long ec = effective_cap(n, r, s, t);
        std::array<IndexMask, 3> box{R, C, S};
        std::array<IndexMask, 3> mate{full & ~R, full & ~C, full & ~S};
        if (br > ec)
          return {CapacityVerdict::Violated,
                  RbcWitness{WitnessRule::BoxCapacity, box, mate, br, mr, ec, -1}};
        long rc = rbc_capacity(n, r, s, t);
        if (br + mr > rc)
          return {CapacityVerdict::Violated,
                  RbcWitness{WitnessRule::CoupleCapacity, box, mate, br, mr, rc, -1}};
      }
    }
  return {CapacityVerdict::Pass, std::nullopt};
}

std::string RbcWitness::describe() const {
  std::ostringstream os;
  os << to_string(rule) << ": box " << masks_str(box) << " (" << box_rooks << " rooks), mate "
     << masks_str(mate) << " (" << mate_rooks << " rooks), ";
  if (rule == WitnessRule::BalancedLayer)
    os << "layer axis " << "XYZ"[layer_axis] << ", required difference " << capacity;
  else
    os << "capacity " << capacity;
  return os.str();
}

std::vector<std::vector<Cell>> dot_components(const Plsc& board) {
  auto dots = board.dots();
  const int n = board.order();
  std::vector<int> parent(dots.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Index of the first dot seen in each file.
  std::vector<int> first(3 * n * n, -1);
  for (int d = 0; d < static_cast<int>(dots.size()); ++d) {
    const Cell& c = dots[d];
    int keys[3] = {((c.j - 1) * n + (c.k - 1)), n * n + (c.i - 1) * n + (c.k - 1),
                   2 * n * n + (c.i - 1) * n + (c.j - 1)};
    for (int key : keys) {
      if (first[key] < 0)
        first[key] = d;
      else
        parent[find(d)] = find(first[key]);
    }
  }
  std::vector<std::vector<Cell>> out;
  std::vector<int> label(dots.size(), -1);
  for (int d = 0; d < static_cast<int>(dots.size()); ++d) {
    int root = find(d);
    if (label[root] < 0) {
      label[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[label[root]].push_back(dots[d]);
  }
  return out;
}

std::optional<FractionalCertificate> fractional_certificate(const Plsc& board) {
  if (has_eliminated_file(board)) return std::nullopt;
  const int n = board.order();
  FractionalCertificate cert;
  cert.n = n;
  cert.denominator.assign(static_cast<std::size_t>(n) * n * n, 0);
  auto idx = [n](const Cell& c) {
    return (static_cast<std::size_t>(c.i - 1) * n + (c.j - 1)) * n + (c.k - 1);
  };
  for (const Cell& c : board.rooks()) cert.denominator[idx(c)] = 1;
  for (const auto& comp : dot_components(board)) {
    int k = -1;
    for (const Cell& c : comp)
      for (const FileId& f : files_through(c)) {
        int d = board.dots_in(f);
        if (k < 0) k = d;
        if (d != k) return std::nullopt;
      }
    for (const Cell& c : comp) cert.denominator[idx(c)] = k;
    cert.component_k.push_back(k);
  }
  return cert;
}

bool FractionalCertificate::verify() const {
  if (n < 1 || denominator.size() != static_cast<std::size_t>(n) * n * n) return false;
  long lcm = 1;
  for (int d : denominator) {
    if (d < 0) return false;
    if (d > 0) lcm = std::lcm(lcm, static_cast<long>(d));
  }
  for (int axis = 0; axis < 3; ++axis)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        FileId f{static_cast<Axis>(axis), a, b};
        long sum = 0;
        for (int v = 1; v <= n; ++v) {
          int d = weight_denominator(f.cell_at(v));
          if (d > 0) sum += lcm / d;
        }
        if (sum != lcm) return false;
      }
  return true;
}

std::pair<Plsc, ExtensionReport> secondary_extend(const Plsc& board) {
  auto [cur, first] = primary_extend(board);
  ExtensionReport rep;
  rep.outcome = first.outcome;
  rep.treated = first.treated;
  rep.eliminated = first.eliminated;
  rep.snapshots = {board, cur};
  if (rep.outcome != ExtensionOutcome::Extended) return {cur, rep};

  for (;;) {
    CapacityResult capr = capacity_check(cur);
    if (capr.verdict == CapacityVerdict::Violated) {
      rep.outcome = ExtensionOutcome::NotCompletable;
      rep.capacity_violation = capr.witness;
      break;
    }
    if (capr.verdict == CapacityVerdict::BoundExceeded) rep.exhaustive = false;

    DeceptiveSearch dec = deceptive_dots(cur);
    rep.exhaustive = rep.exhaustive && dec.exhaustive;
    if (dec.dots.empty()) break;
    for (const DeceptiveDot& d : dec.dots) {
      detail::BoardEditor::set(cur, d.dot, CellState::Empty);
      rep.deceptive_eliminated.push_back(d.dot);
    }
    ++rep.rounds;

    auto [next, pr] = primary_extend(cur);
    cur = std::move(next);
    rep.treated.insert(rep.treated.end(), pr.treated.begin(), pr.treated.end());
    rep.eliminated.insert(rep.eliminated.end(), pr.eliminated.begin(), pr.eliminated.end());
    rep.snapshots.push_back(cur);
    rep.outcome = pr.outcome;
    if (pr.outcome != ExtensionOutcome::Extended) break;
  }
  std::sort(rep.eliminated.begin(), rep.eliminated.end());
  rep.eliminated.erase(std::unique(rep.eliminated.begin(), rep.eliminated.end()),
                       rep.eliminated.end());
  return {cur, rep};
}

bool refines(const Plsc& coarse, const Plsc& fine) {
  if (coarse.order() != fine.order()) return false;
  for (const Cell& c : coarse.rooks())
    if (!fine.is_rook(c)) return false;
  for (const Cell& c : fine.dots())
    if (!coarse.is_dot(c)) return false;
  return true;
}

}  // namespace plsc
