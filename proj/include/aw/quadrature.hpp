#pragma once

#include <functional>
#include <vector>

namespace aw {

// Gauss-Hermite rule for weight exp(-y^2) on the real line.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermiteRule gauss_hermite(int n);

// E[f(mean + stddev Z)] for standard normal Z, by n-point Gauss-Hermite.
double gaussian_expectation(const std::function<double(double)>& f, double mean, double stddev,
                            int n);

}  // namespace aw
