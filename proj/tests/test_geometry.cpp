#include <doctest.h>

#include <cmath>

#include "povmduel/geometry.hpp"
#include "povmduel/linalg.hpp"
#include "test_support.hpp"

using namespace povmduel;
using namespace povmduel::geometry;
using povmduel::testing::haar_unitary;

namespace {

CMatrix unitary_with_spectrum(const std::vector<cd>& eigs, SplitMix64& rng) {
  const CMatrix v = haar_unitary(eigs.size(), rng);
  return v * CMatrix::diagonal(eigs) * v.adjoint();
}

double witness_value(const HullDistance& h) {
  cd s = 0.0;
  for (std::size_t i = 0; i < h.witness_weights.size(); ++i)
    s += h.witness_weights[i] * h.hull.eigenvalues[i];
  return std::abs(s);
}

void check_witness(const HullDistance& h) {
  double total = 0.0;
  for (double w : h.witness_weights) {
    CHECK(w >= -1e-12);
    total += w;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(witness_value(h) == doctest::Approx(h.nu).epsilon(1e-9).scale(1.0));
}

}  // namespace

TEST_CASE("dist_zero_to_hull fixed spectra") {
  SplitMix64 rng(41);

  // {1, -1}: origin on the segment
  auto h1 = dist_zero_to_hull(unitary_with_spectrum({cd(1, 0), cd(-1, 0)}, rng));
  CHECK(h1.nu == doctest::Approx(0.0).epsilon(1e-10));
  check_witness(h1);

  // {e^{i pi/4}, e^{-i pi/4}}: chord midpoint at sqrt(2)/2
  const cd a = std::polar(1.0, M_PI / 4.0), b = std::polar(1.0, -M_PI / 4.0);
  auto h2 = dist_zero_to_hull(unitary_with_spectrum({a, b}, rng));
  CHECK(h2.nu == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-10));
  check_witness(h2);

  // identity: single point at distance one
  auto h3 = dist_zero_to_hull(CMatrix::identity(3));
  CHECK(h3.nu == doctest::Approx(1.0));
  check_witness(h3);

  // triangle surrounding the origin
  auto h4 = dist_zero_to_hull(
      unitary_with_spectrum({cd(1, 0), std::polar(1.0, 2.0 * M_PI / 3.0), std::polar(1.0, -2.0 * M_PI / 3.0)}, rng));
  CHECK(h4.nu == doctest::Approx(0.0).epsilon(1e-10));
  check_witness(h4);
}

TEST_CASE("dist_zero_to_hull on random unitaries") {
  SplitMix64 rng(43);
  for (std::size_t d : {2, 3, 5, 8}) {
    for (int rep = 0; rep < 10; ++rep) {
      const CMatrix u = haar_unitary(d, rng);
      const auto h = dist_zero_to_hull(u);
      CHECK(h.nu <= 1.0 + 1e-12);
      check_witness(h);
      // hull vertices are drawn from the eigenvalue list
      for (std::size_t k = 0; k < h.hull.hull_vertices.size(); ++k)
        CHECK(std::abs(h.hull.hull_vertices[k] - h.hull.eigenvalues[h.hull.hull_indices[k]]) <= 1e-10);
      // convexity: every turn is counterclockwise
      const auto& v = h.hull.hull_vertices;
      if (v.size() >= 3)
        for (std::size_t i = 0; i < v.size(); ++i) {
          const cd p0 = v[i], p1 = v[(i + 1) % v.size()], p2 = v[(i + 2) % v.size()];
          const double c = (p1.real() - p0.real()) * (p2.imag() - p0.imag()) -
                           (p1.imag() - p0.imag()) * (p2.real() - p0.real());
          CHECK(c >= -1e-12);
        }
    }
  }
}

TEST_CASE("nu equals one only for a collapsed spectrum") {
  SplitMix64 rng(47);
  const cd phase = std::polar(1.0, 0.7);
  auto h = dist_zero_to_hull(CMatrix::diagonal({phase, phase, phase}));
  CHECK(h.nu == doctest::Approx(1.0).epsilon(1e-12));
  auto h2 = dist_zero_to_hull(unitary_with_spectrum({phase, std::polar(1.0, 0.9)}, rng));
  CHECK(h2.nu < 1.0);
}

TEST_CASE("unitary_channel_distance") {
  CHECK(unitary_channel_distance(CMatrix::identity(4)) == doctest::Approx(0.0));
  CHECK(unitary_channel_distance(CMatrix::diagonal({cd(1, 0), cd(-1, 0)})) == doctest::Approx(2.0));
  CHECK(unitary_channel_distance(CMatrix::diagonal({cd(1, 0), cd(0, 1)})) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK_THROWS(unitary_channel_distance(CMatrix::identity(2) * cd(2, 0)));

  // global phase invariance
  SplitMix64 rng(53);
  for (int rep = 0; rep < 10; ++rep) {
    const CMatrix u = haar_unitary(4, rng);
    const double base = unitary_channel_distance(u);
    const double phi = 2.0 * M_PI * rng.uniform();
    CHECK(unitary_channel_distance(u * std::polar(1.0, phi)) == doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("zero_in_numerical_range") {
  // nilpotent Jordan block: <0|A|0> = 0
  CMatrix nil(2, 2);
  nil(0, 1) = 1.0;
  CHECK(zero_in_numerical_range(nil).contains_zero);

  CHECK_FALSE(zero_in_numerical_range(CMatrix::identity(2)).contains_zero);
  CHECK(zero_in_numerical_range(CMatrix::diagonal({cd(1, 0), cd(-2, 0)})).contains_zero);

  // agreement with the hull distance for normal matrices
  SplitMix64 rng(59);
  for (int rep = 0; rep < 8; ++rep) {
    const CMatrix u = haar_unitary(3, rng);
    const auto h = dist_zero_to_hull(u);
    const auto m = zero_in_numerical_range(u);
    CHECK(m.contains_zero == (h.nu <= 1e-9));
  }
}
