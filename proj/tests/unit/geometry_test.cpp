#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rasec/geometry.hpp"
#include "rasec/rng.hpp"

using namespace rasec;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pointing_vector basic directions") {
  const Vec3 boresight = pointing_vector({0.0, 0.0});
  CHECK(boresight.x() == 0.0);
  CHECK(boresight.y() == 0.0);
  CHECK(boresight.z() == 1.0);

  const Vec3 nearly_flat = pointing_vector({kPi / 2.0 - 1e-9, 0.0});
  CHECK(nearly_flat.x() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(nearly_flat.y()) < 1e-12);
  CHECK(nearly_flat.z() == doctest::Approx(0.0).epsilon(1e-8));

  const Vec3 tilted = pointing_vector({kPi / 6.0, kPi / 2.0});
  CHECK(tilted.x() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(tilted.y() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(tilted.z() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("pointing_vector is unit norm over a random angle grid") {
  RngStream rng(11);
  for (int i = 0; i < 1000; ++i) {
    DeflectionAngles a{rng.uniform(0.0, kPi / 2.0 - 1e-6), rng.uniform(0.0, 2.0 * kPi)};
    CHECK(std::abs(pointing_vector(a).norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("angles_from_vector inverts pointing_vector") {
  const DeflectionAngles pole = angles_from_vector(Vec3{0.0, 0.0, 1.0});
  CHECK(pole.zenith == 0.0);
  CHECK(pole.azimuth == 0.0);  // canonical azimuth at the pole

  const DeflectionAngles tilted = angles_from_vector(Vec3{0.5, 0.0, std::sqrt(3.0) / 2.0});
  CHECK(tilted.zenith == doctest::Approx(kPi / 6.0).epsilon(1e-12));
  CHECK(tilted.azimuth == 0.0);

  RngStream rng(12);
  for (int i = 0; i < 10000; ++i) {
    DeflectionAngles a{rng.uniform(0.0, kPi / 2.0 - 1e-3), rng.uniform(0.0, 2.0 * kPi)};
    const Vec3 f = pointing_vector(a);
    const Vec3 back = pointing_vector(angles_from_vector(f));
    CHECK((back - f).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("angles_from_vector rejects bad input") {
  CHECK_THROWS_AS(angles_from_vector(Vec3{0.0, 0.0, 2.0}), std::domain_error);
  CHECK_THROWS_AS(angles_from_vector(Vec3{1.0, 0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(angles_from_vector(Vec3{0.0, 0.0, -1.0}), std::domain_error);
}

TEST_CASE("upa_positions centered grids") {
  const auto single = upa_positions(1, 1, 0.1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == Vec3::Zero());

  const auto square = upa_positions(2, 2, 0.0625);
  REQUIRE(square.size() == 4);
  for (const auto& p : square) {
    CHECK(std::abs(std::abs(p.x()) - 0.03125) < 1e-15);
    CHECK(std::abs(std::abs(p.y()) - 0.03125) < 1e-15);
    CHECK(p.z() == 0.0);
  }
  // row-major, x fastest
  CHECK(square[0].x() == doctest::Approx(-0.03125));
  CHECK(square[1].x() == doctest::Approx(0.03125));
  CHECK(square[0].y() == square[1].y());

  for (int nx : {1, 2, 3, 4, 5}) {
    for (int ny : {1, 2, 3, 4}) {
      const auto grid = upa_positions(nx, ny, 0.0625);
      CHECK(grid.size() == static_cast<std::size_t>(nx) * ny);
      Vec3 centroid = Vec3::Zero();
      for (const auto& p : grid) centroid += p;
      CHECK(centroid.cwiseAbs().maxCoeff() <= 1e-15);
    }
  }
}

TEST_CASE("ArrayGeometry wraps the centered grid") {
  const ArrayGeometry g = ArrayGeometry::upa(4, 4, 0.0625);
  CHECK(g.count() == 16);
  CHECK(g.positions.size() == 16);
  CHECK(g.spacing == 0.0625);
  // adjacent spacing along x
  CHECK((g.positions[1] - g.positions[0]).norm() == doctest::Approx(0.0625).epsilon(1e-15));
}

TEST_CASE("node_position lies in the x-z plane") {
  const Vec3 overhead = node_position(50.0, kPi / 2.0);
  CHECK(overhead.x() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(overhead.y() == 0.0);
  CHECK(overhead.z() == doctest::Approx(50.0));

  const Vec3 user = node_position(50.0, kPi / 3.0);
  CHECK(user.x() == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(user.y() == 0.0);
  CHECK(user.z() == doctest::Approx(43.301270189221930).epsilon(1e-12));

  const Vec3 eve = node_position(70.0, kPi / 6.0);
  CHECK(eve.x() == doctest::Approx(60.621778264910705).epsilon(1e-12));
  CHECK(eve.y() == 0.0);
  CHECK(eve.z() == doctest::Approx(35.0).epsilon(1e-12));
}

TEST_CASE("direction_and_distance") {
  auto [up, d_up] = direction_and_distance(Vec3{0, 0, 50}, Vec3{0, 0, 0});
  CHECK(up == Vec3{0, 0, 1});
  CHECK(d_up == 50.0);

  auto [dir, dist] = direction_and_distance(Vec3{3, 0, 4}, Vec3{0, 0, 0});
  CHECK(dir.x() == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(dir.z() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(dist == doctest::Approx(5.0).epsilon(1e-15));

  RngStream rng(13);
  for (int i = 0; i < 100; ++i) {
    const Vec3 a{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Vec3 b{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const auto [ab, dab] = direction_and_distance(a, b);
    const auto [ba, dba] = direction_and_distance(b, a);
    CHECK((ab + ba).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(dab == doctest::Approx(dba));
  }

  CHECK_THROWS_AS(direction_and_distance(Vec3{1, 2, 3}, Vec3{1, 2, 3}), std::domain_error);
}
