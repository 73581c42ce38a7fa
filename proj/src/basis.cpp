#include "aw/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace aw {

TimeGrid::TimeGrid(double horizon, int cells) : horizon_(horizon), cells_(cells) {
  if (!(horizon > 0.0)) throw std::invalid_argument("TimeGrid: horizon must be positive");
  if (cells < 1) throw std::invalid_argument("TimeGrid: need at least one cell");
}

int TimeGrid::node_index(double t) const {
  const double scaled = t * cells_ / horizon_;
  const int k = static_cast<int>(std::lround(scaled));
  if (k < 0 || k > cells_ || std::abs(scaled - k) > 1e-9 * std::max(1.0, scaled)) {
    throw std::invalid_argument("TimeGrid: t is not a grid node");
  }
  return k;
}

bool TimeGrid::is_node(double t) const {
  const double scaled = t * cells_ / horizon_;
  const int k = static_cast<int>(std::lround(scaled));
  return k >= 0 && k <= cells_ && std::abs(scaled - k) <= 1e-9 * std::max(1.0, scaled);
}

L2Function::L2Function(const TimeGrid& grid, std::vector<double> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != grid_.cells()) {
    throw std::invalid_argument("L2Function: coefficient count must equal grid cells");
  }
}

double L2Function::squared_norm() const {
  double acc = 0.0;
  for (double c : coeffs_) acc += c * c;
  return acc;
}

TimeGrid make_uniform_grid(double horizon, int cells) { return TimeGrid(horizon, cells); }

double inner_product(const L2Function& f, const L2Function& g) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("inner_product: grid mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) acc += f.coeffs()[i] * g.coeffs()[i];
  return acc;
}

L2Function indicator(const TimeGrid& grid, double t) {
  const int k = grid.node_index(t);
  std::vector<double> coeffs(static_cast<std::size_t>(grid.cells()), 0.0);
  const double w = std::sqrt(grid.cell_width());
  for (int i = 0; i < k; ++i) coeffs[static_cast<std::size_t>(i)] = w;
  return L2Function(grid, std::move(coeffs));
}

L2Function project(const std::function<double(double)>& f, const TimeGrid& grid) {
  std::vector<double> coeffs(static_cast<std::size_t>(grid.cells()));
  const double w = std::sqrt(grid.cell_width());
  for (int i = 0; i < grid.cells(); ++i) {
    const double mid = 0.5 * (grid.node(i) + grid.node(i + 1));
    coeffs[static_cast<std::size_t>(i)] = f(mid) * w;
  }
  return L2Function(grid, std::move(coeffs));
}

L2Function zero_function(const TimeGrid& grid) {
  return L2Function(grid, std::vector<double>(static_cast<std::size_t>(grid.cells()), 0.0));
}

L2Function basis_element(const TimeGrid& grid, int i) {
  if (i < 0 || i >= grid.cells()) throw std::invalid_argument("basis_element: index out of range");
  std::vector<double> coeffs(static_cast<std::size_t>(grid.cells()), 0.0);
  coeffs[static_cast<std::size_t>(i)] = 1.0;
  return L2Function(grid, std::move(coeffs));
}

L2Function operator+(const L2Function& f, const L2Function& g) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("L2Function sum: grid mismatch");
  std::vector<double> coeffs = f.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += g.coeffs()[i];
  return L2Function(f.grid(), std::move(coeffs));
}

L2Function operator-(const L2Function& f, const L2Function& g) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("L2Function difference: grid mismatch");
  std::vector<double> coeffs = f.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= g.coeffs()[i];
  return L2Function(f.grid(), std::move(coeffs));
}

L2Function operator*(double s, const L2Function& f) {
  std::vector<double> coeffs = f.coeffs();
  for (double& c : coeffs) c *= s;
  return L2Function(f.grid(), std::move(coeffs));
}

}  // namespace aw
