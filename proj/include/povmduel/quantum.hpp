#pragma once
// Domain wrappers for states, measurements and channels, plus Choi-matrix
// construction and the channel property checks.

#include <cstddef>
#include <vector>

#include "povmduel/cmatrix.hpp"
#include "povmduel/linalg.hpp"

namespace povmduel {

// Unit-trace positive semidefinite matrix. Constructor enforces Hermiticity,
// lambda_min >= -1e-8 and Tr = 1 within 1e-8.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);
  const CMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

 private:
  CMatrix m_;
};

// PSD effects summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<CMatrix> effects);
  const std::vector<CMatrix>& effects() const { return effects_; }
  std::size_t outcomes() const { return effects_.size(); }
  std::size_t dim() const { return effects_.empty() ? 0 : effects_.front().rows(); }

 private:
  std::vector<CMatrix> effects_;
};

// Projective rank-one measurement given by the columns of a unitary.
class VonNeumannMeasurement {
 public:
  explicit VonNeumannMeasurement(CMatrix unitary);
  const CMatrix& unitary() const { return u_; }
  std::size_t dim() const { return u_.rows(); }
  std::vector<cd> column(std::size_t i) const;
  CMatrix effect(std::size_t i) const;  // |u_i><u_i|
  Povm to_povm() const;

 private:
  CMatrix u_;
};

struct ChoiMatrix {
  CMatrix matrix;       // (d_out*d_in) x (d_out*d_in), factor order output (x) input
  std::size_t d_out = 0;
  std::size_t d_in = 0;
};

struct ChannelPropertyFlags {
  bool hermiticity_preserving = false;
  bool completely_positive = false;
  bool trace_preserving = false;
};

// rho -> sum_i Tr(rho T_i) |i><i|
DensityMatrix apply_measure_and_prepare(const Povm& m, const DensityMatrix& rho);

// J(T) = sum_i |i><i| (x) T_i^T
ChoiMatrix choi_of_measurement(const Povm& m);
ChoiMatrix choi_of_measurement(const VonNeumannMeasurement& m);

// J(Phi_U) for Phi_U : rho -> U rho U^dagger; rank one, trace d.
ChoiMatrix choi_of_unitary(const CMatrix& u);

ChannelPropertyFlags channel_property_checks(const ChoiMatrix& j, double tol = 1e-8);

double total_variation(const std::vector<double>& p, const std::vector<double>& q);

// 1/2 + 1/4 ||rho - sigma||_1
double helstrom_state_bound(const DensityMatrix& rho, const DensityMatrix& sigma);

struct Purification {
  // d x k coefficient matrix Psi of the bipartite vector
  // |psi> = sum_{a,k} Psi(a,k) |a>_1 |k>_2 with minimal ancilla dimension k.
  CMatrix coefficients;
  std::size_t schmidt_rank = 0;
};

// Minimal purification; eigenvalues > 1e-10 count toward the rank.
Purification purify(const DensityMatrix& rho);

// Reduced state on factor 1 of a purification, for checks.
CMatrix purification_marginal(const Purification& p);

}  // namespace povmduel
