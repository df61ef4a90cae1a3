#pragma once
// Numerical-range geometry. For normal matrices W(A) is the convex hull of
// the eigenvalues, so distance-to-zero queries reduce to plane geometry on
// at most d points; for general matrices membership is decided by sweeping
// the Hermitian part over rotations e^{i theta} A.

#include <cstddef>
#include <vector>

#include "povmduel/cmatrix.hpp"

namespace povmduel::geometry {

struct SpectrumHull {
  std::vector<cd> eigenvalues;
  std::vector<cd> hull_vertices;          // counterclockwise
  std::vector<std::size_t> hull_indices;  // vertex -> eigenvalue index
};

SpectrumHull spectrum_hull(const CMatrix& normal_input);

struct HullDistance {
  double nu = 0.0;
  // convex weights over the eigenvalue list with |sum_i w_i lambda_i| = nu
  std::vector<double> witness_weights;
  SpectrumHull hull;
};

// Euclidean distance from the origin to conv(spec(A)) for normal A, with the
// attaining convex combination as a witness.
HullDistance dist_zero_to_hull(const CMatrix& normal_input);

// ||Phi_U - Phi_1||_diamond = 2 sqrt(1 - nu^2) with nu the distance from zero
// to W(U^dagger).
double unitary_channel_distance(const CMatrix& unitary);

struct NumericalRangeMembership {
  bool contains_zero = false;
  // max over directions theta of lambda_min(Hermitian part of e^{i theta} A);
  // <= 0 means zero is inside, > 0 gives a separating half-plane
  double margin = 0.0;
  // margin within (-tol, tol): zero sits on the boundary within precision
  bool boundary_inconclusive = false;
};

NumericalRangeMembership zero_in_numerical_range(const CMatrix& a, double tol = 1e-9);

}  // namespace povmduel::geometry
