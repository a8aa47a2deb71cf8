#include <doctest.h>

#include "mvspace/errors.hpp"
#include "mvspace/lorentz.hpp"
#include "mvspace/spacetime.hpp"
#include "support.hpp"

using namespace mvspace;
using testing_support::v3;

TEST_CASE("event construction enforces orthogonality") {
  CHECK_NOTHROW(Event({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}));
  CHECK_THROWS_AS(Event({1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}), InvariantError);
  // Inside the 1e-9 relative allowance.
  CHECK_NOTHROW(Event({1.0, 0.0, 0.0}, {1e-10, 1.0, 0.0}));
  CHECK_THROWS_AS(Event({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, 0.0), ArgumentError);

  const Event p = Event::projected({1.0, 1.0, 0.0}, {1.0, 0.0, 2.0});
  CHECK(std::abs(dot(p.x(), p.t())) < 1e-15);

  const Event e({1.0, 2.0, 0.0}, {0.0, 0.0, 3.0}, 2.0);
  const Event back = Event::from_multivector(e.as_multivector(), 2.0);
  CHECK(back.x() == e.x());
  CHECK(back.t() == e.t());
  CHECK_THROWS_AS(Event::from_multivector(Multivector::scalar(1.0) + e.as_multivector(), 2.0), InvariantError);
}

TEST_CASE("interval") {
  CHECK(interval_squared(Event({}, {0.0, 0.0, 2.0}, 3.0)) == doctest::Approx(-36.0));
  CHECK(interval_squared(Event({1.0, 0.0, 0.0}, {0.0, 0.5, 0.0}, 2.0)) == doctest::Approx(0.0));
  CHECK(interval_squared(Event({3.0, 0.0, 0.0}, {0.0, 5.0, 0.0})) == doctest::Approx(-16.0));
  // SI magnitudes keep full relative precision.
  const double c = 299792458.0;
  CHECK(interval_squared(Event({3.0 * c, 0.0, 0.0}, {0.0, 5.0, 0.0}, c)) == doctest::Approx(-16.0 * c * c).epsilon(1e-14));
}

TEST_CASE("interval is unchanged by rotations and boosts") {
  oracle::Rng rng(21);
  for (int n = 0; n < 200; ++n) {
    const Vector3 x = v3(rng.vec(3.0));
    const Vector3 v_hat = v3(rng.unit());
    const double ts = rng.uniform(-3.0, 3.0);
    const Event e(x, boost_time_direction(x, v_hat) * ts);
    const double s0 = interval_squared(e);
    const double scale = std::max(1.0, std::abs(s0));
    CHECK(std::abs(interval_squared(boost_event(e, rng.uniform(-2.0, 2.0), v_hat)) - s0) < 1e-10 * scale);

    const double theta = rng.uniform(-3.0, 3.0);
    const Vector3 u = v3(rng.unit());
    const Event r(rotate(e.x(), theta, u), rotate(e.t(), theta, u));
    CHECK(std::abs(interval_squared(r) - s0) < 1e-10 * scale);
  }
}

TEST_CASE("gamma") {
  CHECK(gamma(Vector3{}) == 1.0);
  CHECK(gamma({0.6, 0.0, 0.0}) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(gamma({0.0, 0.8 * 3.0, 0.0}, 3.0) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(gamma({1.0, 0.0, 0.0}), SuperluminalError);
  CHECK_THROWS_AS(gamma({0.0, 2.0, 0.0}), SuperluminalError);
}

TEST_CASE("default time direction") {
  CHECK(default_time_direction({1.0, 0.0, 0.0}) == Vector3{0.0, 0.0, 1.0});
  CHECK(default_time_direction({0.0, 0.0, 0.5}) == Vector3{0.0, 1.0, 0.0});
  const Vector3 t = default_time_direction({0.3, 0.1, 0.4});
  CHECK(std::abs(dot(t, {0.3, 0.1, 0.4})) < 1e-15);
  CHECK(norm(t) == doctest::Approx(1.0));
}

TEST_CASE("proper velocity") {
  const Multivector rest = proper_velocity({}, {0.0, 0.0, 1.0}, 2.0);
  CHECK(rest == Multivector::bivector({0.0, 0.0, 2.0}));
  CHECK((rest * rest) == Multivector::scalar(-4.0));

  const Multivector u = proper_velocity({0.6, 0.0, 0.0}, {0.0, 1.0, 0.0});
  CHECK(u[Blade::e1] == doctest::Approx(0.75));
  CHECK(u[Blade::e31] == doctest::Approx(1.25));

  CHECK_THROWS_AS(proper_velocity({0.5, 0.0, 0.0}, {1.0, 0.0, 0.0}), ArgumentError);

  oracle::Rng rng(22);
  for (int n = 0; n < 200; ++n) {
    const double c = rng.uniform(0.5, 3.0);
    const auto t_hat = rng.unit();
    const auto dir = testing_support::orthogonal_unit(rng.unit(), t_hat);
    const Vector3 v = v3(dir) * (rng.uniform(0.0, 0.99) * c);
    const Multivector u2 = proper_velocity(v, v3(t_hat), c) * proper_velocity(v, v3(t_hat), c);
    CHECK(std::abs(u2.scalar_part() + c * c) < 1e-12 * c * c * gamma(v, c) * gamma(v, c));
    CHECK(max_abs_diff(u2, Multivector::scalar(u2.scalar_part())) < 1e-12 * c * c * gamma(v, c) * gamma(v, c));
  }
}

TEST_CASE("proper time round trip") {
  const Vector3 v{0.6, 0.0, 0.0};
  const Event e = worldline_step(2.0, v, {0.0, 0.0, 1.0});
  CHECK(norm(e.t()) == doctest::Approx(2.5));
  CHECK(std::sqrt(-interval_squared(e)) == doctest::Approx(2.0));
}

TEST_CASE("momentum multivector") {
  const MomentumMultivector rest = momentum(2.0, {}, {0.0, 0.0, 1.0}, 3.0);
  CHECK(norm(rest.p()) == 0.0);
  CHECK(norm(rest.energy()) == doctest::Approx(18.0));

  const MomentumMultivector p = momentum(1.0, {0.6, 0.0, 0.0}, {0.0, 0.0, 1.0});
  CHECK(norm(p.p()) == doctest::Approx(0.75));
  CHECK(norm(p.energy()) == doctest::Approx(1.25));
  CHECK((p.as_multivector() * p.as_multivector()).scalar_part() == doctest::Approx(-1.0));
  CHECK(p.mass_squared() == doctest::Approx(1.0));

  CHECK_THROWS_AS(momentum(0.0, {}, {0.0, 0.0, 1.0}), ArgumentError);
  CHECK_THROWS_AS(momentum(1.0, {0.0, 0.0, 0.5}, {0.0, 0.0, 1.0}), ArgumentError);
  CHECK_THROWS_AS(momentum(1.0, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}), SuperluminalError);
  CHECK_THROWS_AS(MomentumMultivector({1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}), InvariantError);

  oracle::Rng rng(23);
  for (int n = 0; n < 200; ++n) {
    const double c = rng.uniform(0.5, 3.0);
    const double m = rng.uniform(0.1, 5.0);
    const auto t_hat = rng.unit();
    const Vector3 v = v3(testing_support::orthogonal_unit(rng.unit(), t_hat)) * (rng.uniform(0.0, 0.95) * c);
    const MomentumMultivector q = momentum(m, v, v3(t_hat), c);
    const double e2 = dot(q.energy(), q.energy());
    CHECK(e2 == doctest::Approx(m * m * c * c * c * c + dot(q.p(), q.p()) * c * c).epsilon(1e-12));
    const Multivector sq = q.as_multivector() * q.as_multivector();
    const double mc2 = m * m * c * c;
    CHECK(std::abs(sq.scalar_part() + mc2) < 1e-12 * mc2 * gamma(v, c) * gamma(v, c));
    CHECK(max_abs_diff(sq, Multivector::scalar(sq.scalar_part())) < 1e-12 * mc2 * gamma(v, c) * gamma(v, c));
  }
}

TEST_CASE("photon momentum is null") {
  const MomentumMultivector g = photon_momentum({1.0, 0.0, 0.0}, {0.0, 0.0, 1.0});
  CHECK((g.as_multivector() * g.as_multivector()).max_abs() < 1e-12);
  const MomentumMultivector g2 = photon_momentum({0.0, 2.0, 0.0}, {0.0, 0.0, 1.0}, 3.0);
  CHECK(norm(g2.energy()) / 3.0 == doctest::Approx(2.0));
  CHECK_THROWS_AS(photon_momentum({1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}), ArgumentError);

  oracle::Rng rng(24);
  for (int n = 0; n < 200; ++n) {
    const auto p = rng.vec(2.0);
    const auto c_hat = testing_support::orthogonal_unit(rng.unit(), oracle::scale(p, 1.0 / std::sqrt(oracle::dot(p, p))));
    const Multivector gm = photon_momentum(v3(p), v3(c_hat)).as_multivector();
    CHECK((gm * gm).max_abs() < 1e-12 * std::max(1.0, oracle::dot(p, p)));
  }
}
