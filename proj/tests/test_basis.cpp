#include <cmath>
#include <functional>

#include <stdexcept>

#include "doctest.h"

#include "aw/basis.hpp"

namespace {

// Midpoint-rule quadrature oracle on [0,T]; independent of the coefficient
// algebra under test.
double riemann_inner(const std::function<double(double)>& f, const std::function<double(double)>& g,
                     double horizon, int cells = 20000) {
  double acc = 0.0;
  const double w = horizon / cells;
  for (int i = 0; i < cells; ++i) {
    const double s = (i + 0.5) * w;
    acc += f(s) * g(s) * w;
  }
  return acc;
}

}  // namespace

TEST_CASE("uniform grid nodes") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.0, 4);
  CHECK(g.cells() == 4);
  CHECK(g.node(0) == doctest::Approx(0.0));
  CHECK(g.node(1) == doctest::Approx(0.25));
  CHECK(g.node(2) == doctest::Approx(0.5));
  CHECK(g.node(3) == doctest::Approx(0.75));
  CHECK(g.node(4) == doctest::Approx(1.0));

  const aw::TimeGrid single = aw::make_uniform_grid(1.0, 1);
  CHECK(single.node(0) == 0.0);
  CHECK(single.node(1) == 1.0);

  const aw::TimeGrid wide = aw::make_uniform_grid(2.0, 2);
  CHECK(wide.node(1) == doctest::Approx(1.0));
  CHECK(wide.node(2) == doctest::Approx(2.0));

  CHECK_THROWS_AS(aw::make_uniform_grid(0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(aw::make_uniform_grid(-1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(aw::make_uniform_grid(1.0, 0), std::invalid_argument);
}

TEST_CASE("inner product and orthonormality") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.0, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      CHECK(aw::inner_product(aw::basis_element(g, i), aw::basis_element(g, j)) == expected);
    }
  }

  // <1_{[0,0.5]}, 1_{[0,1]}> against the quadrature oracle
  const double direct = aw::inner_product(aw::indicator(g, 0.5), aw::indicator(g, 1.0));
  const double oracle = riemann_inner([](double s) { return s <= 0.5 ? 1.0 : 0.0; },
                                      [](double) { return 1.0; }, 1.0);
  CHECK(direct == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(direct == doctest::Approx(oracle).epsilon(1e-9));

  const aw::TimeGrid other = aw::make_uniform_grid(1.0, 8);
  CHECK_THROWS_AS(aw::inner_product(aw::basis_element(g, 0), aw::basis_element(other, 0)),
                  std::invalid_argument);
}

TEST_CASE("indicator coefficients") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.0, 4);

  const aw::L2Function full = aw::indicator(g, 1.0);
  for (double c : full.coeffs()) CHECK(c == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(full.squared_norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(full.squared_norm() ==
        doctest::Approx(riemann_inner([](double) { return 1.0; }, [](double) { return 1.0; }, 1.0))
            .epsilon(1e-9));

  const aw::L2Function empty = aw::indicator(g, 0.0);
  for (double c : empty.coeffs()) CHECK(c == 0.0);

  const aw::L2Function half = aw::indicator(g, 0.5);
  CHECK(half.coeffs()[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(half.coeffs()[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(half.coeffs()[2] == 0.0);
  CHECK(half.coeffs()[3] == 0.0);
  CHECK(half.squared_norm() == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(aw::indicator(g, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(aw::indicator(g, 1.25), std::invalid_argument);
  CHECK_THROWS_AS(aw::indicator(g, -0.25), std::invalid_argument);
}

TEST_CASE("indicator pairs give min(t,s)") {
  const aw::TimeGrid g = aw::make_uniform_grid(2.0, 8);
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      const double t = g.node(a);
      const double s = g.node(b);
      CHECK(aw::inner_product(aw::indicator(g, t), aw::indicator(g, s)) ==
            doctest::Approx(std::min(t, s)).epsilon(1e-13));
    }
  }
}

TEST_CASE("projection by midpoint collocation") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.0, 4);

  const aw::L2Function ones = aw::project([](double) { return 1.0; }, g);
  for (double c : ones.coeffs()) CHECK(c == doctest::Approx(0.5).epsilon(1e-15));

  const aw::L2Function half = aw::project([](double s) { return s <= 0.5 ? 1.0 : 0.0; }, g);
  const aw::L2Function expected = aw::indicator(g, 0.5);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(half.coeffs()[i] == doctest::Approx(expected.coeffs()[i]).epsilon(1e-15));
  }

  const aw::TimeGrid two = aw::make_uniform_grid(1.0, 2);
  const aw::L2Function ramp = aw::project([](double s) { return s; }, two);
  CHECK(ramp.coeffs()[0] == doctest::Approx(0.25 * std::sqrt(0.5)).epsilon(1e-15));
  CHECK(ramp.coeffs()[1] == doctest::Approx(0.75 * std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("projection left-inverts expansion for piecewise constants") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.5, 6);
  const std::vector<double> coeffs{0.3, -1.2, 0.0, 2.5, -0.7, 1.1};
  const aw::L2Function f(g, coeffs);
  const double w = std::sqrt(g.cell_width());
  const aw::L2Function back = aw::project(
      [&](double s) {
        const int cell = std::min(5, static_cast<int>(s / g.cell_width()));
        return coeffs[static_cast<std::size_t>(cell)] / w;
      },
      g);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    CHECK(back.coeffs()[i] == doctest::Approx(f.coeffs()[i]).epsilon(1e-13));
  }
}

TEST_CASE("l2 function arithmetic and validation") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.0, 3);
  CHECK_THROWS_AS(aw::L2Function(g, std::vector<double>{1.0, 2.0}), std::invalid_argument);
  const aw::L2Function a(g, {1.0, 0.0, -2.0});
  const aw::L2Function b(g, {0.5, 1.0, 1.0});
  const aw::L2Function sum = a + b;
  CHECK(sum.coeffs()[0] == 1.5);
  CHECK(sum.coeffs()[2] == -1.0);
  const aw::L2Function scaled = 2.0 * a;
  CHECK(scaled.coeffs()[2] == -4.0);
  CHECK_THROWS_AS(aw::basis_element(g, 3), std::invalid_argument);
}
