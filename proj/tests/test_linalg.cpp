#include <doctest.h>

#include <cmath>
#include <complex>

#include "povmduel/linalg.hpp"
#include "test_support.hpp"

using namespace povmduel;
using namespace povmduel::linalg;
using povmduel::testing::haar_unitary;
using povmduel::testing::random_complex;
using povmduel::testing::random_hermitian;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("hermitian_eig on fixed matrices") {
  auto id2 = hermitian_eig(CMatrix::identity(2));
  CHECK(id2.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id2.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));

  auto d = hermitian_eig(CMatrix::diagonal({cd(3.0, 0.0), cd(-1.0, 0.0)}));
  CHECK(d.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(d.eigenvalues[1] == doctest::Approx(3.0));

  // Pauli X: lambda^2 - 1 = 0 by hand
  const CMatrix x{{cd(0, 0), cd(1, 0)}, {cd(1, 0), cd(0, 0)}};
  auto ex = hermitian_eig(x);
  CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(ex.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reconstruction and orthonormality on random input") {
  SplitMix64 rng(7);
  for (std::size_t n : {1, 2, 3, 5, 8, 16, 33}) {
    const CMatrix a = random_hermitian(n, rng);
    const auto es = hermitian_eig(a);
    REQUIRE(es.eigenvalues.size() == n);
    for (std::size_t i = 1; i < n; ++i) CHECK(es.eigenvalues[i - 1] <= es.eigenvalues[i]);

    std::vector<cd> lam(n);
    for (std::size_t i = 0; i < n; ++i) lam[i] = es.eigenvalues[i];
    const CMatrix recon = es.eigenvectors * CMatrix::diagonal(lam) * es.eigenvectors.adjoint();
    CHECK((a - recon).frobenius_norm() <= 1e-10 * std::max(1.0, a.frobenius_norm()));

    const CMatrix gram = es.eigenvectors.adjoint() * es.eigenvectors;
    CHECK((gram - CMatrix::identity(n)).frobenius_norm() <= 1e-10);
  }
}

TEST_CASE("hermitian_eig rejects bad input") {
  CHECK_THROWS(hermitian_eig(CMatrix(2, 3)));
  CMatrix bad{{cd(0, 0), cd(1, 0)}, {cd(2, 0), cd(0, 0)}};
  CHECK_THROWS(hermitian_eig(bad));
}

TEST_CASE("svd_values fixed cases") {
  auto s1 = svd_values(CMatrix::identity(3));
  for (double v : s1) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

  auto s2 = svd_values(CMatrix(1, 1));
  REQUIRE(s2.size() == 1);
  CHECK(s2[0] == 0.0);

  CMatrix r1{{cd(1, 0), cd(1, 0)}, {cd(1, 0), cd(1, 0)}};
  r1 *= cd(1.0 / kSqrt2, 0.0);
  auto s3 = svd_values(r1);
  CHECK(s3[0] == doctest::Approx(kSqrt2).epsilon(1e-12));
  CHECK(s3[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("svd_values matches Gram eigenvalues on random rectangles") {
  SplitMix64 rng(11);
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{4, 4}, {6, 3}, {3, 6}, {8, 5}}) {
    const CMatrix a = random_complex(m, n, rng);
    const auto sv = svd_values(a);
    REQUIRE(sv.size() == std::min(m, n));
    for (std::size_t i = 1; i < sv.size(); ++i) CHECK(sv[i - 1] >= sv[i]);
    // cross-check against eigenvalues of A^dagger A
    const CMatrix gram = a.adjoint() * a;
    auto ev = hermitian_eig(gram).eigenvalues;  // ascending, size n
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    for (std::size_t i = 0; i < sv.size(); ++i)
      CHECK(sv[i] * sv[i] == doctest::Approx(ev[i]).epsilon(1e-9).scale(1.0 + ev[0]));
  }
}

TEST_CASE("norms on fixed and unitary input") {
  CHECK(trace_norm(CMatrix::diagonal({cd(1, 0), cd(-1, 0)})) == doctest::Approx(2.0));
  CHECK(trace_norm(CMatrix(3, 3)) == doctest::Approx(0.0));
  CHECK(operator_norm(CMatrix::identity(4)) == doctest::Approx(1.0));
  CHECK(operator_norm(CMatrix::diagonal({cd(0.3, 0), cd(-0.8, 0)})) == doctest::Approx(0.8));
  CHECK_THROWS(trace_norm(CMatrix(2, 3)));

  SplitMix64 rng(13);
  for (std::size_t d : {2, 3, 5, 8}) {
    const CMatrix u = haar_unitary(d, rng);
    CHECK(trace_norm(u) == doctest::Approx(double(d)).epsilon(1e-10));
    CHECK(operator_norm(u) == doctest::Approx(1.0).epsilon(1e-10));
    for (double s : svd_values(u)) CHECK(std::abs(s - 1.0) <= 1e-10);
  }

  // rank-one |x><y| with unit vectors has norm ||x|| ||y|| = 1
  auto x = testing::random_unit_vector(5, rng);
  auto y = testing::random_unit_vector(5, rng);
  CHECK(operator_norm(CMatrix::outer(x, y)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial trace examples and properties") {
  const CMatrix doubled = partial_trace_first(CMatrix::identity(4), 2, 2);
  CHECK((doubled - CMatrix::identity(2) * cd(2, 0)).frobenius_norm() <= 1e-14);

  SplitMix64 rng(17);
  CMatrix a = testing::random_density(2, rng);
  const CMatrix b = random_complex(3, 3, rng);
  const CMatrix ab = kron(a, b);
  CHECK((partial_trace_first(ab, 2, 3) - b).frobenius_norm() <= 1e-12 * b.frobenius_norm());

  // Bell projector marginal
  CMatrix bell(4, 4);
  for (std::size_t i : {0, 3})
    for (std::size_t j : {0, 3}) bell(i, j) = 0.5;
  CHECK((partial_trace_first(bell, 2, 2) - CMatrix::identity(2) * cd(0.5, 0)).frobenius_norm() <= 1e-14);

  // trace preservation + linearity on random pairs
  for (int rep = 0; rep < 5; ++rep) {
    const CMatrix m1 = random_complex(6, 6, rng);
    const CMatrix m2 = random_complex(6, 6, rng);
    const cd alpha(rng.gaussian(), rng.gaussian());
    CHECK(std::abs(partial_trace_first(m1, 2, 3).trace() - m1.trace()) <= 1e-12 * (1.0 + std::abs(m1.trace())));
    const CMatrix lhs = partial_trace_first(m1 * alpha + m2, 2, 3);
    const CMatrix rhs = partial_trace_first(m1, 2, 3) * alpha + partial_trace_first(m2, 2, 3);
    CHECK((lhs - rhs).frobenius_norm() <= 1e-12 * (1.0 + rhs.frobenius_norm()));
  }
  CHECK_THROWS(partial_trace_first(CMatrix::identity(6), 4, 2));
}

TEST_CASE("vectorization identity (A x B)|X>> = |A X B^T>>") {
  // basis convention
  CMatrix e01(2, 3);
  e01(0, 1) = 1.0;
  const auto v = vectorize(e01);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == (i == 1 ? cd(1, 0) : cd(0, 0)));

  CHECK((kron(CMatrix::identity(2), CMatrix::identity(3)) - CMatrix::identity(6)).frobenius_norm() == 0.0);

  SplitMix64 rng(19);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t d1 = 1 + rep % 3, d2 = 1 + (rep / 3) % 3, d3 = 1 + (rep / 9) % 3,
                      d4 = 1 + (rep / 27) % 3;
    const CMatrix a = random_complex(d1, d2, rng);
    const CMatrix b = random_complex(d3, d4, rng);
    const CMatrix x = random_complex(d2, d4, rng);  // note: conforming X is d2 x d4 here
    const CMatrix axbt = a * x * b.transpose();
    const auto lhs = kron(a, b) * vectorize(x);
    const auto rhs = vectorize(axbt);
    REQUIRE(lhs.size() == rhs.size());
    double diff = 0.0, scale = 1.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      diff = std::max(diff, std::abs(lhs[i] - rhs[i]));
      scale = std::max(scale, std::abs(rhs[i]));
    }
    CHECK(diff <= 1e-12 * scale);
  }
}

TEST_CASE("diag extract/embed are an adjoint pair") {
  const auto dv = diag_extract(CMatrix::identity(2));
  CHECK(dv[0] == cd(1, 0));
  CHECK(dv[1] == cd(1, 0));
  const CMatrix emb = diag_embed({cd(1, 0), cd(2, 0)});
  CHECK(emb(0, 0) == cd(1, 0));
  CHECK(emb(1, 1) == cd(2, 0));
  CHECK(emb(0, 1) == cd(0, 0));

  SplitMix64 rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const CMatrix c = random_complex(5, 5, rng);
    std::vector<cd> v(5);
    for (auto& x : v) x = cd(rng.gaussian(), rng.gaussian());
    // <diag(C), v> = <C, diag^dagger(v)> in the Tr(A^dagger B) inner product
    const auto dc = diag_extract(c);
    cd lhs = 0.0;
    for (std::size_t i = 0; i < 5; ++i) lhs += std::conj(dc[i]) * v[i];
    const cd rhs = hs_inner(c, diag_embed(v));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("matrix_sqrt_psd") {
  CHECK((matrix_sqrt_psd(CMatrix::identity(3)) - CMatrix::identity(3)).frobenius_norm() <= 1e-12);
  const CMatrix r = matrix_sqrt_psd(CMatrix::diagonal({cd(4, 0), cd(9, 0)}));
  CHECK((r - CMatrix::diagonal({cd(2, 0), cd(3, 0)})).frobenius_norm() <= 1e-12);

  SplitMix64 rng(29);
  for (std::size_t n : {2, 4, 7}) {
    const CMatrix g = random_complex(n, n, rng);
    const CMatrix psd = g * g.adjoint();
    const CMatrix s = matrix_sqrt_psd(psd);
    CHECK((s * s - psd).frobenius_norm() <= 1e-8 * std::max(1.0, psd.frobenius_norm()));
    CHECK(s.hermiticity_residual() <= 1e-10 * std::max(1.0, s.frobenius_norm()));
  }
  CHECK_THROWS(matrix_sqrt_psd(CMatrix::diagonal({cd(-1.0, 0), cd(1.0, 0)})));
}

TEST_CASE("normal_eig on unitaries") {
  SplitMix64 rng(31);
  for (std::size_t d : {1, 2, 3, 6}) {
    const CMatrix u = haar_unitary(d, rng);
    const auto es = normal_eig(u);
    REQUIRE(es.eigenvalues.size() == d);
    for (std::size_t k = 0; k < d; ++k) {
      CHECK(std::abs(std::abs(es.eigenvalues[k]) - 1.0) <= 1e-10);
      std::vector<cd> v(d);
      for (std::size_t r = 0; r < d; ++r) v[r] = es.eigenvectors(r, k);
      const auto uv = u * v;
      double res = 0.0;
      for (std::size_t r = 0; r < d; ++r) res = std::max(res, std::abs(uv[r] - es.eigenvalues[k] * v[r]));
      CHECK(res <= 1e-9);
    }
  }
  // degenerate spectrum exercise: diagonal with repeats
  const CMatrix rep = CMatrix::diagonal({cd(0, 1), cd(0, 1), cd(1, 0)});
  const auto es = normal_eig(rep);
  int count_i = 0;
  for (const auto& l : es.eigenvalues)
    if (std::abs(l - cd(0, 1)) <= 1e-10) ++count_i;
  CHECK(count_i == 2);
  CHECK_THROWS(normal_eig(CMatrix{{cd(0, 0), cd(1, 0)}, {cd(0, 0), cd(0, 0)}}));
}
