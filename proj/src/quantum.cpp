#include "povmduel/quantum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace povmduel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

constexpr double kTol = 1e-8;

}  // namespace

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
  require(m_.is_square(), "DensityMatrix: non-square matrix");
  require(m_.hermiticity_residual() <= kTol * std::max(1.0, m_.frobenius_norm()),
          "DensityMatrix: not Hermitian within tolerance");
  require(std::abs(m_.trace() - cd(1.0, 0.0)) <= kTol, "DensityMatrix: trace is not 1");
  const auto es = linalg::hermitian_eig(m_);
  require(es.eigenvalues.empty() || es.eigenvalues.front() >= -kTol,
          "DensityMatrix: negative eigenvalue");
}

Povm::Povm(std::vector<CMatrix> effects) : effects_(std::move(effects)) {
  require(!effects_.empty(), "Povm: no effects");
  const std::size_t d = effects_.front().rows();
  CMatrix sum(d, d);
  for (const auto& e : effects_) {
    require(e.is_square() && e.rows() == d, "Povm: effect dimension mismatch");
    require(e.hermiticity_residual() <= kTol * std::max(1.0, e.frobenius_norm()),
            "Povm: effect not Hermitian");
    const auto es = linalg::hermitian_eig(e);
    require(es.eigenvalues.front() >= -kTol, "Povm: effect not PSD within tolerance");
    sum += e;
  }
  require((sum - CMatrix::identity(d)).frobenius_norm() <= kTol * std::sqrt(double(d)) + kTol,
          "Povm: effects do not sum to the identity");
}

VonNeumannMeasurement::VonNeumannMeasurement(CMatrix unitary) : u_(std::move(unitary)) {
  require(u_.is_square(), "VonNeumannMeasurement: non-square matrix");
  const std::size_t d = u_.rows();
  require((u_.adjoint() * u_ - CMatrix::identity(d)).frobenius_norm() <= kTol * std::sqrt(double(d)) + kTol,
          "VonNeumannMeasurement: matrix is not unitary within tolerance");
}

std::vector<cd> VonNeumannMeasurement::column(std::size_t i) const {
  std::vector<cd> c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = u_(r, i);
  return c;
}

CMatrix VonNeumannMeasurement::effect(std::size_t i) const {
  const auto c = column(i);
  return CMatrix::outer(c, c);
}

Povm VonNeumannMeasurement::to_povm() const {
  std::vector<CMatrix> effects;
  effects.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) effects.push_back(effect(i));
  return Povm(std::move(effects));
}

DensityMatrix apply_measure_and_prepare(const Povm& m, const DensityMatrix& rho) {
  require(m.dim() == rho.dim(), "apply_measure_and_prepare: dimension mismatch");
  const std::size_t n = m.outcomes();
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double p = hs_inner(m.effects()[i], rho.matrix()).real();
    if (p < 0.0 && p > -1e-10) p = 0.0;
    out(i, i) = p;
  }
  return DensityMatrix(std::move(out));
}

ChoiMatrix choi_of_measurement(const Povm& m) {
  const std::size_t n = m.outcomes();
  const std::size_t d = m.dim();
  CMatrix j(n * d, n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const CMatrix t = m.effects()[i].transpose();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) j(i * d + a, i * d + b) = t(a, b);
  }
  return {std::move(j), n, d};
}

ChoiMatrix choi_of_measurement(const VonNeumannMeasurement& m) {
  return choi_of_measurement(m.to_povm());
}

ChoiMatrix choi_of_unitary(const CMatrix& u) {
  VonNeumannMeasurement check(u);  // reuses the unitarity validation
  const std::size_t d = u.rows();
  const std::vector<cd> v = linalg::vectorize(u);
  CMatrix j(d * d, d * d);
  for (std::size_t r = 0; r < d * d; ++r)
    for (std::size_t c = 0; c < d * d; ++c) j(r, c) = v[r] * std::conj(v[c]);
  return {std::move(j), d, d};
}

ChannelPropertyFlags channel_property_checks(const ChoiMatrix& j, double tol) {
  ChannelPropertyFlags flags;
  const double scale = std::max(1.0, j.matrix.frobenius_norm());
  flags.hermiticity_preserving = j.matrix.hermiticity_residual() <= tol * scale;
  if (flags.hermiticity_preserving) {
    const auto es = linalg::hermitian_eig(j.matrix);
    flags.completely_positive = es.eigenvalues.empty() || es.eigenvalues.front() >= -tol;
    const CMatrix marginal = linalg::partial_trace_first(j.matrix, j.d_out, j.d_in);
    flags.trace_preserving =
        (marginal - CMatrix::identity(j.d_in)).frobenius_norm() <= tol * std::sqrt(double(j.d_in)) + tol;
  }
  return flags;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  require(p.size() == q.size(), "total_variation: length mismatch");
  auto validate = [](const std::vector<double>& v, const char* name) {
    double s = 0.0;
    for (double x : v) {
      if (x < -1e-10) throw std::invalid_argument(std::string(name) + ": negative entry");
      s += x;
    }
    if (std::abs(s - 1.0) > 1e-8)
      throw std::invalid_argument(std::string(name) + ": entries do not sum to 1");
  };
  validate(p, "total_variation: p");
  validate(q, "total_variation: q");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return s;
}

double helstrom_state_bound(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require(rho.dim() == sigma.dim(), "helstrom_state_bound: dimension mismatch");
  return 0.5 + 0.25 * linalg::trace_norm(rho.matrix() - sigma.matrix());
}

Purification purify(const DensityMatrix& rho) {
  const auto es = linalg::hermitian_eig(rho.matrix());
  const std::size_t d = rho.dim();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d; ++i)
    if (es.eigenvalues[i] > 1e-10) keep.push_back(i);
  const std::size_t k = keep.size();
  CMatrix psi(d, k);
  for (std::size_t c = 0; c < k; ++c) {
    const double s = std::sqrt(es.eigenvalues[keep[c]]);
    for (std::size_t r = 0; r < d; ++r) psi(r, c) = s * es.eigenvectors(r, keep[c]);
  }
  return {std::move(psi), k};
}

CMatrix purification_marginal(const Purification& p) {
  return p.coefficients * p.coefficients.adjoint();
}

}  // namespace povmduel
