#pragma once

#include <functional>
#include <vector>

// Orthonormal indicator basis of L^2([0,T]) on a uniform grid. The i-th
// basis element is e_i = 1_{[t_{i-1},t_i)} (m/T)^{1/2}; coefficient vectors
// make every inner product an exact finite sum.

namespace aw {

class TimeGrid {
 public:
  TimeGrid(double horizon, int cells);

  double horizon() const { return horizon_; }
  int cells() const { return cells_; }
  double cell_width() const { return horizon_ / cells_; }
  double node(int i) const { return horizon_ * i / cells_; }

  // Index k with t = k T/m, or a std::invalid_argument if t is off-node.
  int node_index(double t) const;
  bool is_node(double t) const;

  friend bool operator==(const TimeGrid& a, const TimeGrid& b) {
    return a.horizon_ == b.horizon_ && a.cells_ == b.cells_;
  }

 private:
  double horizon_;
  int cells_;
};

class L2Function {
 public:
  L2Function(const TimeGrid& grid, std::vector<double> coeffs);

  const TimeGrid& grid() const { return grid_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double squared_norm() const;

 private:
  TimeGrid grid_;
  std::vector<double> coeffs_;
};

TimeGrid make_uniform_grid(double horizon, int cells);

double inner_product(const L2Function& f, const L2Function& g);

// Coefficients of 1_{[0,t]}; t must be a grid node.
L2Function indicator(const TimeGrid& grid, double t);

// Midpoint collocation; exact for functions piecewise constant on the grid.
L2Function project(const std::function<double(double)>& f, const TimeGrid& grid);

L2Function zero_function(const TimeGrid& grid);

// e_i, zero-based mode index.
L2Function basis_element(const TimeGrid& grid, int i);

L2Function operator+(const L2Function& f, const L2Function& g);
L2Function operator-(const L2Function& f, const L2Function& g);
L2Function operator*(double s, const L2Function& f);

}  // namespace aw
