#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "mega/types.hpp"

namespace mega {

/// Closed-disk membership: |a - b| <= r, evaluated on squared distances so
/// every code path agrees bit for bit.
template <typename DerivedA, typename DerivedB>
bool within(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
            typename DerivedA::Scalar r) {
  return (a - b).squaredNorm() <= r * r;
}

/// Uniform bucket grid over [0, width] x [0, height]. Cells are at least
/// `reach` wide, so any pair within `reach` lies in adjacent cells.
/// Points within a cell are stored in ascending index order.
template <typename Scalar>
class UniformGrid {
 public:
  template <typename Derived>
  UniformGrid(const Eigen::MatrixBase<Derived>& points, Scalar width, Scalar height,
              Scalar reach) {
    constexpr int kMaxCellsPerAxis = 512;
    // Pad so rounding in the division never pushes a within-reach pair two cells apart.
    const Scalar cell = reach * Scalar(1.000001);
    cols_ = std::clamp(static_cast<int>(std::ceil(width / cell)), 1, kMaxCellsPerAxis);
    rows_ = std::clamp(static_cast<int>(std::ceil(height / cell)), 1, kMaxCellsPerAxis);
    cell_w_ = std::max(cell, width / Scalar(cols_));
    cell_h_ = std::max(cell, height / Scalar(rows_));

    const auto n = static_cast<int>(points.cols());
    std::vector<int> cell_of(n);
    start_.assign(static_cast<std::size_t>(cols_) * rows_ + 1, 0);
    for (int i = 0; i < n; ++i) {
      cell_of[i] = cell_index(cell_x(points(0, i)), cell_y(points(1, i)));
      ++start_[cell_of[i] + 1];
    }
    for (std::size_t c = 1; c < start_.size(); ++c) start_[c] += start_[c - 1];
    items_.resize(n);
    std::vector<int> fill(start_.begin(), start_.end() - 1);
    for (int i = 0; i < n; ++i) items_[fill[cell_of[i]]++] = i;
  }

  int cell_x(Scalar x) const {
    return std::clamp(static_cast<int>(std::floor(x / cell_w_)), 0, cols_ - 1);
  }
  int cell_y(Scalar y) const {
    return std::clamp(static_cast<int>(std::floor(y / cell_h_)), 0, rows_ - 1);
  }

  /// Calls f(index) for every stored point in the 3x3 block around (cx, cy).
  template <typename F>
  void for_each_near(int cx, int cy, F&& f) const {
    for (int y = std::max(cy - 1, 0); y <= std::min(cy + 1, rows_ - 1); ++y) {
      for (int x = std::max(cx - 1, 0); x <= std::min(cx + 1, cols_ - 1); ++x) {
        const int c = cell_index(x, y);
        for (int k = start_[c]; k < start_[c + 1]; ++k) f(items_[k]);
      }
    }
  }

 private:
  int cell_index(int x, int y) const { return y * cols_ + x; }

  int cols_ = 1;
  int rows_ = 1;
  Scalar cell_w_{};
  Scalar cell_h_{};
  std::vector<int> start_;
  std::vector<int> items_;
};

/// For each client column, the index of the nearest router within `radius`
/// (lowest index on equal distance), or -1.
template <typename DerivedC, typename DerivedR>
std::vector<int> nearest_covering(const Eigen::MatrixBase<DerivedC>& clients,
                                  const Eigen::MatrixBase<DerivedR>& routers,
                                  typename DerivedC::Scalar width,
                                  typename DerivedC::Scalar height,
                                  typename DerivedC::Scalar radius) {
  using Scalar = typename DerivedC::Scalar;
  const UniformGrid<Scalar> grid(routers, width, height, radius);
  const Scalar r2 = radius * radius;
  std::vector<int> assigned(static_cast<std::size_t>(clients.cols()), -1);
  for (Eigen::Index i = 0; i < clients.cols(); ++i) {
    const auto c = clients.col(i);
    int best = -1;
    Scalar best_d2 = r2;
    grid.for_each_near(grid.cell_x(c.x()), grid.cell_y(c.y()), [&](int j) {
      const Scalar d2 = (c - routers.col(j)).squaredNorm();
      if (d2 > r2) return;
      if (best < 0 || d2 < best_d2 || (d2 == best_d2 && j < best)) {
        best = j;
        best_d2 = d2;
      }
    });
    assigned[static_cast<std::size_t>(i)] = best;
  }
  return assigned;
}

/// Disjoint-set forest with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

/// Component label per router, where routers are linked when within
/// `link_range` of each other. Labels are dense and ordered by the lowest
/// router index in each component.
template <typename DerivedR>
std::vector<int> router_components(const Eigen::MatrixBase<DerivedR>& routers,
                                   typename DerivedR::Scalar width,
                                   typename DerivedR::Scalar height,
                                   typename DerivedR::Scalar link_range) {
  using Scalar = typename DerivedR::Scalar;
  const auto m = static_cast<int>(routers.cols());
  const UniformGrid<Scalar> grid(routers, width, height, link_range);
  DisjointSets sets(m);
  for (int i = 0; i < m; ++i) {
    const auto r = routers.col(i);
    grid.for_each_near(grid.cell_x(r.x()), grid.cell_y(r.y()), [&](int j) {
      if (j > i && within(r, routers.col(j), link_range)) sets.unite(i, j);
    });
  }
  std::vector<int> label(m, -1);
  std::vector<int> root_label(m, -1);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    const int root = sets.find(i);
    if (root_label[root] < 0) root_label[root] = next++;
    label[i] = root_label[root];
  }
  return label;
}

}  // namespace mega
