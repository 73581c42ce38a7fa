#include <cmath>

#include <stdexcept>

#include "doctest.h"

#include "aw/heat.hpp"
#include "aw/rng.hpp"
#include "aw/suites.hpp"

TEST_CASE("polynomial basics") {
  const aw::Poly1D p({1.0, -2.0, 0.0, 3.0});
  CHECK(p.degree() == 3);
  CHECK(p(2.0) == doctest::Approx(1.0 - 4.0 + 24.0));
  CHECK(p.derivative().coeffs() == std::vector<double>{-2.0, 0.0, 9.0});

  const aw::Poly1D q({0.0, 1.0});
  const aw::Poly1D prod = p * q;
  CHECK(prod.degree() == 4);
  CHECK(prod(1.5) == doctest::Approx(p(1.5) * 1.5));

  const aw::Poly1D trimmed({1.0, 0.0, 0.0});
  CHECK(trimmed.degree() == 0);
  CHECK(aw::Poly1D().degree() == -1);
}

TEST_CASE("parameter Hermite polynomials") {
  // h_{2,t} = x^2 - t, h_{3,t} = x^3 - 3 t x
  const double t = 0.7;
  const aw::Poly1D h2 = aw::hermite_with_parameter(2, t);
  CHECK(h2.coeffs() == std::vector<double>{-t, 0.0, 1.0});
  const aw::Poly1D h3 = aw::hermite_with_parameter(3, t);
  CHECK(h3.coeffs()[1] == doctest::Approx(-3.0 * t));
  CHECK(h3.coeffs()[3] == 1.0);
  // at t = 1 they match the standard monic Hermite values
  for (int n = 0; n <= 6; ++n) {
    const aw::Poly1D hn = aw::hermite_with_parameter(n, 1.0);
    for (double x : {-2.0, -0.5, 0.0, 1.3, 2.4}) {
      CHECK(hn(x) == doctest::Approx(aw::hermite_value(n, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("polynomial composition into chaos") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.0, 4);
  const aw::ChaosVector b1 = aw::gaussian_of(aw::indicator(g, 1.0), 8);

  const aw::ChaosVector square = aw::poly_of_chaos(aw::Poly1D::monomial(2), b1);
  CHECK(aw::approx_equal(square, aw::pointwise_product(b1, b1), 1e-13));
  CHECK(aw::expectation(square) == doctest::Approx(1.0).epsilon(1e-13));

  const aw::ChaosVector c = aw::poly_of_chaos(aw::Poly1D({3.5}), b1);
  CHECK(c.nnz() == 1);
  CHECK(aw::expectation(c) == 3.5);

  // evaluation oracle
  auto engine = aw::rng::block_engine(89, 0);
  const aw::Poly1D p({0.5, -1.0, 0.25, 2.0});
  const aw::ChaosVector composed = aw::poly_of_chaos(p, b1);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> xi(4);
    for (double& v : xi) v = 2.0 * (2.0 * aw::rng::uniform01(engine) - 1.0);
    const double inner = b1.eval(xi);
    CHECK(composed.eval(xi) ==
          doctest::Approx(p(inner)).epsilon(1e-11).scale(std::max(1.0, std::abs(p(inner)))));
  }
}

TEST_CASE("functional calculus on monomials") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.0, 4);
  const double t = 0.5;
  const aw::ChaosVector bt = aw::gaussian_of(aw::indicator(g, t), 8);

  // x^2: B_t^2 + t
  const aw::ChaosVector sq = aw::functional_calculus(aw::Poly1D::monomial(2), bt);
  const aw::ChaosVector sq_expected =
      aw::pointwise_product(bt, bt) + aw::constant(t, 4, 8);
  CHECK(aw::approx_equal(sq, sq_expected, 1e-12));

  // x^3: B_t^3 + 3 t B_t
  const aw::ChaosVector cube = aw::functional_calculus(aw::Poly1D::monomial(3), bt);
  const aw::ChaosVector cube_expected =
      aw::poly_of_chaos(aw::Poly1D::monomial(3), bt) + (3.0 * t) * bt;
  CHECK(aw::approx_equal(cube, cube_expected, 1e-12));

  // identity on degree one
  auto engine = aw::rng::block_engine(97, 0);
  const aw::ChaosVector x = aw::sample_chaos(engine, 4, 8, 1, 4);
  CHECK(aw::approx_equal(aw::functional_calculus(aw::Poly1D::monomial(1), x), x, 1e-12));
}

TEST_CASE("heat solutions for polynomial data") {
  const double t = 0.35;
  CHECK(aw::heat_solution_poly(aw::Poly1D::monomial(2), t).coeffs() ==
        std::vector<double>{t, 0.0, 1.0});
  const aw::Poly1D cubic = aw::heat_solution_poly(aw::Poly1D::monomial(3), t);
  CHECK(cubic.coeffs()[1] == doctest::Approx(3.0 * t));
  CHECK(cubic.coeffs()[3] == 1.0);
  const aw::Poly1D quartic = aw::heat_solution_poly(aw::Poly1D::monomial(4), t);
  CHECK(quartic.coeffs()[0] == doctest::Approx(3.0 * t * t));
  CHECK(quartic.coeffs()[2] == doctest::Approx(6.0 * t));

  const aw::Poly1D f({1.0, 2.0, -0.5, 0.25});
  const aw::Poly1D same = aw::heat_solution_poly(f, 0.0);
  CHECK(same.coeffs() == f.coeffs());

  // semigroup property
  const aw::Poly1D two_step = aw::heat_solution_poly(aw::heat_solution_poly(f, 0.2), 0.3);
  const aw::Poly1D one_step = aw::heat_solution_poly(f, 0.5);
  for (std::size_t k = 0; k < one_step.coeffs().size(); ++k) {
    CHECK(two_step.coeffs()[k] == doctest::Approx(one_step.coeffs()[k]).epsilon(1e-13));
  }

  // generator consistency: applying the semigroup commutes with 1/2 d^2/dx^2
  const aw::Poly1D lhs = aw::heat_solution_poly(0.5 * f.derivative().derivative(), t);
  const aw::Poly1D rhs = 0.5 * aw::heat_solution_poly(f, t).derivative().derivative();
  REQUIRE(lhs.coeffs().size() == rhs.coeffs().size());
  for (std::size_t k = 0; k < lhs.coeffs().size(); ++k) {
    CHECK(lhs.coeffs()[k] == doctest::Approx(rhs.coeffs()[k]).epsilon(1e-13));
  }
}

TEST_CASE("heat solution by quadrature") {
  // cos data: u(t,x) = e^{-t/2} cos x
  for (double t : {0.25, 1.0}) {
    for (double x : {-1.0, 0.0, 0.7}) {
      const double expected = std::exp(-0.5 * t) * std::cos(x);
      const double got = aw::heat_solution_quadrature([](double s) { return std::cos(s); }, t, x, 40);
      CHECK(got == doctest::Approx(expected).epsilon(1e-10));
      // doubling the nodes should not move the answer
      const double refined =
          aw::heat_solution_quadrature([](double s) { return std::cos(s); }, t, x, 80);
      CHECK(std::abs(refined - got) <= 1e-12);
    }
  }
  CHECK(aw::heat_solution_quadrature([](double) { return 1.0; }, 0.5, 0.3, 40) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(aw::heat_solution_quadrature([](double s) { return s; }, 0.5, 0.3, 40) ==
        doctest::Approx(0.3).epsilon(1e-12));
  CHECK_THROWS_AS(aw::heat_solution_quadrature([](double) { return 1.0; }, 0.0, 0.0, 40),
                  std::invalid_argument);
}

TEST_CASE("gauss-hermite rule sanity") {
  const aw::GaussHermiteRule rule = aw::gauss_hermite(20);
  double w_sum = 0.0;
  double wy2 = 0.0;
  double wy = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    w_sum += rule.weights[i];
    wy += rule.weights[i] * rule.nodes[i];
    wy2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
  }
  CHECK(w_sum == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(wy == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  CHECK(wy2 == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("heat representation residuals") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.0, 8);

  const aw::ResidualReport sq = aw::heat_representation_residual(aw::Poly1D::monomial(2), g, 0.5, 12);
  CHECK(sq.residual <= 1e-12 * (1.0 + sq.coeff_scale));

  const aw::ResidualReport flat = aw::heat_representation_residual(aw::Poly1D({2.0}), g, 0.5, 12);
  CHECK(flat.residual == 0.0);

  const aw::ResidualReport quart =
      aw::heat_representation_residual(aw::Poly1D::monomial(4), g, 0.25, 12);
  CHECK(quart.residual <= 1e-9 * (1.0 + quart.coeff_scale));

  // off-node times are rejected
  CHECK_THROWS_AS(aw::heat_representation_residual(aw::Poly1D::monomial(2), g, 0.3, 12),
                  std::invalid_argument);

  // t = 0 collapses to the initial condition
  const aw::Poly1D f({1.0, -1.0, 0.5});
  const aw::ResidualReport at_zero = aw::heat_representation_residual(f, g, 0.0, 12);
  CHECK(at_zero.residual == 0.0);
  const aw::ChaosVector composed =
      aw::functional_calculus(f, aw::gaussian_of(aw::indicator(g, 0.0), 12));
  CHECK(composed.nnz() == 1);
  CHECK(aw::expectation(composed) == doctest::Approx(f(0.0)));
}

TEST_CASE("heat product residuals") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.0, 8);
  const aw::Poly1D x1 = aw::Poly1D::monomial(1);

  const aw::ResidualReport linear = aw::heat_product_residual(x1, x1, g, 0.5, 12);
  CHECK(linear.residual <= 1e-12 * (1.0 + linear.coeff_scale));

  const aw::ResidualReport with_const =
      aw::heat_product_residual(aw::Poly1D({2.0}), aw::Poly1D({0.0, 0.0, 1.0}), g, 0.5, 12);
  CHECK(with_const.residual <= 1e-12 * (1.0 + with_const.coeff_scale));

  const aw::ResidualReport mixed =
      aw::heat_product_residual(aw::Poly1D::monomial(2), x1, g, 0.5, 12);
  CHECK(mixed.residual <= 1e-9 * (1.0 + mixed.coeff_scale));
}

// Forward side: exp°{I1(h)} = exp{int h dB + 1/2 int h^2 ds}. The exponent
// carries the squared integrand; the Wick companion flips its sign back to
// the plain stochastic exponential.
TEST_CASE("exponential functional calculus") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.0, 4);

  const aw::ExpFunctionalResult zero = aw::exp_functional_check(aw::zero_function(g), 12);
  CHECK(zero.residual == 0.0);
  CHECK(zero.wick_residual == 0.0);

  for (double c : {0.25, 0.5, 1.0}) {
    const aw::ExpFunctionalResult r =
        aw::exp_functional_check(c * aw::basis_element(g, 0), 16);
    CHECK(r.residual <= 1.01 * r.tail_bound + 1e-12);
    CHECK(r.wick_residual <= 1e-12);
  }

  // multi-mode direction with slack on the dominant-mode bound
  const aw::ExpFunctionalResult multi =
      aw::exp_functional_check(0.4 * aw::basis_element(g, 0) + 0.3 * aw::basis_element(g, 1), 16);
  CHECK(multi.residual <= 10.0 * multi.tail_bound + 1e-12);
  CHECK(multi.wick_residual <= 1e-12);
}

TEST_CASE("pairing checks by Monte Carlo") {
  const aw::TimeGrid g = aw::make_uniform_grid(1.0, 8);

  // constant datum: both sides are exactly one
  aw::AnalyticFunction flat;
  flat.name = "one";
  flat.fn = [](double) { return 1.0; };
  flat.taylor = {1.0};
  flat.chaos_degree = 4;
  aw::McConfig quick;
  quick.samples = 20000;
  quick.seed = 4242;
  const aw::McPairingResult unit =
      aw::mc_pairing_check(flat, g, 0.5, aw::zero_function(g), quick);
  CHECK(unit.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(unit.rhs == doctest::Approx(1.0).epsilon(1e-12));

  // cos with h = 0 against the closed form e^{-t}
  const double t = 0.5;
  aw::McConfig cfg;
  cfg.samples = 200000;
  cfg.seed = 991;
  const aw::AnalyticFunction cosine = aw::AnalyticFunction::cosine(16);
  const aw::McPairingResult r = aw::mc_pairing_check(cosine, g, t, aw::zero_function(g), cfg);
  CHECK(std::abs(r.rhs - std::exp(-t)) <= r.tail_bound + 1e-12);
  CHECK(std::abs(r.lhs - r.rhs) <= 3.0 * r.sigma + r.tail_bound);

  // cos with h = e1 at t = 1: closed form e^{-t} cos(<1_t, h>)
  const aw::L2Function h = aw::basis_element(g, 0);
  const aw::McPairingResult rh = aw::mc_pairing_check(cosine, g, 1.0, h, cfg);
  const double c = aw::inner_product(aw::indicator(g, 1.0), h);
  CHECK(std::abs(rh.rhs - std::exp(-1.0) * std::cos(c)) <= rh.tail_bound + 1e-10);
  CHECK(std::abs(rh.lhs - rh.rhs) <= 3.0 * rh.sigma + rh.tail_bound);
}
