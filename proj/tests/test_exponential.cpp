#include <doctest.h>

#include <numbers>

#include "mvspace/errors.hpp"
#include "mvspace/exponential.hpp"
#include "support.hpp"

using namespace mvspace;

TEST_CASE("series values") {
  CHECK(exp_general(Multivector{}) == Multivector::scalar(1.0));

  const double phi = std::atanh(0.6);
  const Multivector boost = exp_general(Multivector::vector({phi, 0.0, 0.0}));
  CHECK(boost.scalar_part() == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(boost[Blade::e1] == doctest::Approx(0.75).epsilon(1e-15));

  const Multivector rotor = exp_general(Multivector::bivector({0.0, 0.0, std::numbers::pi / 2}));
  CHECK(max_abs_diff(rotor, Multivector::basis(Blade::e12)) < 1e-15);

  CHECK_THROWS_AS(exp_general(Multivector::scalar(1.0), 0.0), ArgumentError);
  CHECK_THROWS_AS(exp_general(Multivector::scalar(1.0), 1e-14, 2), ConvergenceError);
}

TEST_CASE("closed forms") {
  CHECK(exp_vector(0.0, {1.0, 0.0, 0.0}) == Multivector::scalar(1.0));
  const Multivector b = exp_vector(std::atanh(0.5), {0.0, 1.0, 0.0});
  const double g = 1.0 / std::sqrt(0.75);
  CHECK(b.scalar_part() == doctest::Approx(g).epsilon(1e-15));
  CHECK(b[Blade::e2] == doctest::Approx(0.5 * g).epsilon(1e-15));

  CHECK(exp_bivector(0.0, {0.0, 0.0, 1.0}) == Multivector::scalar(1.0));
  CHECK(max_abs_diff(exp_bivector(std::numbers::pi, {0.6, 0.0, 0.8}), Multivector::scalar(-1.0)) < 1e-15);

  CHECK_THROWS_AS(exp_vector(1.0, {1.0, 1.0, 0.0}), ArgumentError);
  CHECK_THROWS_AS(exp_bivector(1.0, {0.0, 0.0, 2.0}), ArgumentError);
}

TEST_CASE("series agrees with closed forms and inverses") {
  oracle::Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const double phi = rng.uniform(-5.0, 5.0);
    const Vector3 a = testing_support::v3(rng.unit());
    const Multivector closed = exp_vector(phi, a);
    CHECK(max_abs_diff(exp_general(Multivector::vector(a * phi)), closed) < 1e-12 * std::max(1.0, closed.max_abs()));
    CHECK(max_abs_diff(closed * exp_vector(-phi, a), Multivector::scalar(1.0)) < 1e-10);

    const double theta = rng.uniform(-7.0, 7.0);
    const Multivector rot = exp_bivector(theta, a);
    CHECK(max_abs_diff(exp_general(Multivector::bivector(a * theta), 1e-14), rot) < 1e-12);
    CHECK(max_abs_diff(rot * exp_bivector(-theta, a), Multivector::scalar(1.0)) < 1e-10);
  }
}

TEST_CASE("mixed generator") {
  const Multivector g = Multivector::from_parts(0.0, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, 0.0);
  const Multivector e = exp_general(g);
  CHECK(max_abs_diff(e * exp_general(-g), Multivector::scalar(1.0)) < 1e-10);
  const Multivector split = exp_vector(1.0, {1.0, 0.0, 0.0}) * exp_bivector(1.0, {0.0, 1.0, 0.0});
  CHECK(max_abs_diff(e, split) > 1e-3);
}

TEST_CASE("rapidity from speed") {
  CHECK(rapidity_from_speed(0.0) == 0.0);
  CHECK(std::cosh(rapidity_from_speed(0.6)) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(std::cosh(rapidity_from_speed(0.99)) == doctest::Approx(1.0 / std::sqrt(1.0 - 0.9801)).epsilon(1e-13));
  CHECK_THROWS_AS(rapidity_from_speed(1.0), SuperluminalError);
  CHECK_THROWS_AS(rapidity_from_speed(1.5), SuperluminalError);
  CHECK_THROWS_AS(rapidity_from_speed(-0.1), ArgumentError);
}
