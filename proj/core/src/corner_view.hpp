#pragma once

// Index translation that presents an arbitrary box as a corner box: along
// each axis the box members come first (ascending), then the remaining
// indices (ascending).

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "plsc/board.hpp"

namespace plsc::detail {

class CornerView {
 public:
  explicit CornerView(const Box& box) : n_(box.order()) {
    for (int a = 0; a < 3; ++a) {
      auto& g = toGlobal_[a];
      g.push_back(0);
      for (int v = 1; v <= n_; ++v)
        if (box.mask(a) & bit(v)) g.push_back(v);
      for (int v = 1; v <= n_; ++v)
        if (!(box.mask(a) & bit(v))) g.push_back(v);
      toLocal_[a].assign(n_ + 1, 0);
      for (int x = 1; x <= n_; ++x) toLocal_[a][g[x]] = x;
    }
  }

  int global(int axis, int local) const { return toGlobal_[axis][local]; }
  int local(int axis, int global) const { return toLocal_[axis][global]; }
  Cell global(const Cell& localCell) const {
    return {global(0, localCell.i), global(1, localCell.j), global(2, localCell.k)};
  }
  Cell local(const Cell& globalCell) const {
    return {local(0, globalCell.i), local(1, globalCell.j), local(2, globalCell.k)};
  }

 private:
  int n_;
  std::array<std::vector<int>, 3> toGlobal_;
  std::array<std::vector<int>, 3> toLocal_;
};

// Role permutation that orders box dimensions non-increasingly, ties kept in
// axis order.
struct Rotation {
  RolePerm perm;
  Box apply(const Box& b) const {
    return Box(b.order(), b.mask(perm.source[0]), b.mask(perm.source[1]), b.mask(perm.source[2]));
  }
};

inline Rotation rotation_for(const std::array<int, 3>& dims) {
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return dims[x] > dims[y]; });
  return {RolePerm{order}};
}

}  // namespace plsc::detail
