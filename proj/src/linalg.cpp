#include "povmduel/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace povmduel::linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Unitary 2x2 rotation diagonalizing the Hermitian block [[app, apq], [conj(apq), aqq]].
// Returns G = [[c, s], [-s*e^{-i phi}, c*e^{-i phi}]] column coefficients so that
// G^dagger H G is diagonal, phi = arg(apq).
struct JacobiRotation {
  cd g_pp, g_pq, g_qp, g_qq;
};

JacobiRotation make_rotation(double app, double aqq, cd apq) {
  const double beta = std::abs(apq);
  const cd phase = apq / beta;  // e^{i phi}
  const double tau = (aqq - app) / (2.0 * beta);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cd conj_phase = std::conj(phase);
  return {cd(c, 0.0), cd(s, 0.0), -s * conj_phase, c * conj_phase};
}

double offdiag_norm(const CMatrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

}  // namespace

HermitianEigenSystem hermitian_eig(const CMatrix& input) {
  require(input.is_square(), "hermitian_eig: non-square input");
  const std::size_t n = input.rows();
  const double scale = std::max(1.0, input.frobenius_norm());
  if (input.hermiticity_residual() > 1e-8 * scale)
    throw std::invalid_argument("hermitian_eig: Hermiticity tolerance exceeded");

  // symmetrize, then iterate on A while accumulating V^T (rows = eigenvectors)
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
  CMatrix vt = CMatrix::identity(n);

  const double norm_a = std::max(a.frobenius_norm(), 1e-300);
  const double stop = 1e-15 * static_cast<double>(n) * norm_a;
  const int max_sweeps = 60;

  for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cd apq = a(p, q);
        const double app = a(p, p).real(), aqq = a(q, q).real();
        if (std::abs(apq) <= kEps * 0.5 * (std::abs(app) + std::abs(aqq)) + 1e-300) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const JacobiRotation g = make_rotation(app, aqq, apq);

        // rows p,q <- G^dagger * rows: C = G^dagger A
        kernels::mix2(n, std::conj(g.g_pp), std::conj(g.g_qp), std::conj(g.g_pq),
                      std::conj(g.g_qq), a.row(p), a.row(q));
        // columns from Hermiticity: A' = C G, and A'(r,p) = conj(A'(p,r)) off the block
        const cd cpp = a(p, p), cpq = a(p, q), cqp = a(q, p), cqq = a(q, q);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          a(r, p) = std::conj(a(p, r));
          a(r, q) = std::conj(a(q, r));
        }
        // 2x2 block of A' = C G, diagonal forced real, off-diagonal zeroed
        a(p, p) = (cpp * g.g_pp + cpq * g.g_qp).real();
        a(q, q) = (cqp * g.g_pq + cqq * g.g_qq).real();
        a(p, q) = a(q, p) = 0.0;

        // V <- V G, accumulated transposed: rows of V^T mixed by G^T
        kernels::mix2(n, g.g_pp, g.g_qp, g.g_pq, g.g_qq, vt.row(p), vt.row(q));
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = vt(order[k], r);
  }
  return out;
}

NormalEigenSystem normal_eig(const CMatrix& a, double normality_tol) {
  require(a.is_square(), "normal_eig: non-square input");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  const CMatrix ah = a.adjoint();
  const double scale = std::max(1.0, a.frobenius_norm() * a.frobenius_norm());
  if ((a * ah - ah * a).frobenius_norm() > normality_tol * scale)
    throw std::invalid_argument("normal_eig: input is not normal within tolerance");

  CMatrix h1(n, n), h2(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const cd v = a(i, j), w = std::conj(a(j, i));
      h1(i, j) = 0.5 * (v + w);
      h2(i, j) = cd(0.0, -0.5) * (v - w);
    }

  const HermitianEigenSystem e1 = hermitian_eig(h1);
  NormalEigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);

  const double cluster_tol = 1e-8 * std::max(1.0, std::abs(e1.eigenvalues.back()) +
                                                      std::abs(e1.eigenvalues.front()));
  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && e1.eigenvalues[stop] - e1.eigenvalues[stop - 1] <= cluster_tol) ++stop;
    const std::size_t k = stop - start;

    CMatrix basis(n, k);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < k; ++c) basis(r, c) = e1.eigenvectors(r, start + c);

    CMatrix cols(n, k);
    if (k == 1) {
      cols = basis;
    } else {
      // restrict H2 to the cluster and split it there
      const CMatrix m = basis.adjoint() * (h2 * basis);
      const HermitianEigenSystem e2 = hermitian_eig(m);
      cols = basis * e2.eigenvectors;
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<cd> v(n);
      for (std::size_t r = 0; r < n; ++r) v[r] = cols(r, c);
      const std::vector<cd> av = a * v;
      out.eigenvalues[start + c] = kernels::dotc(n, v.data(), av.data());
      for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, start + c) = v[r];
    }
    start = stop;
  }
  return out;
}

std::vector<double> svd_values(const CMatrix& a) {
  // one-sided Jacobi on columns; work on the transpose so columns are
  // contiguous rows, and on the adjoint when the input is wide
  const bool wide = a.cols() > a.rows();
  CMatrix w = wide ? a.conj() : a.transpose();
  const std::size_t n = w.rows();    // number of columns being orthogonalized
  const std::size_t len = w.cols();  // their length

  std::vector<double> sq(n);
  auto col_norm_sq = [&](std::size_t p) {
    return kernels::dotc(len, w.row(p), w.row(p)).real();
  };
  for (std::size_t p = 0; p < n; ++p) sq[p] = col_norm_sq(p);

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cd g = kernels::dotc(len, w.row(p), w.row(q));
        const double gn = std::abs(g);
        if (gn <= 1e-15 * std::sqrt(sq[p] * sq[q]) + 1e-300) continue;
        converged = false;
        const JacobiRotation rot = make_rotation(sq[p], sq[q], g);
        // new columns [c_p' c_q'] = [c_p c_q] G, i.e. rows of w mixed by G^T
        kernels::mix2(len, rot.g_pp, rot.g_qp, rot.g_pq, rot.g_qq, w.row(p), w.row(q));
        sq[p] = col_norm_sq(p);
        sq[q] = col_norm_sq(q);
      }
    }
    if (converged) break;
  }

  std::vector<double> sv(n);
  for (std::size_t p = 0; p < n; ++p) sv[p] = std::sqrt(std::max(0.0, sq[p]));
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

double trace_norm(const CMatrix& a) {
  require(a.is_square(), "trace_norm: non-square input");
  const std::vector<double> sv = svd_values(a);
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

double operator_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return svd_values(a).front();
}

CMatrix partial_trace_first(const CMatrix& a, std::size_t d1, std::size_t d2) {
  require(a.is_square(), "partial_trace_first: non-square input");
  require(a.rows() == d1 * d2, "partial_trace_first: size is not d1*d2");
  CMatrix out(d2, d2);
  for (std::size_t j = 0; j < d2; ++j)
    for (std::size_t l = 0; l < d2; ++l) {
      cd s = 0.0;
      for (std::size_t i = 0; i < d1; ++i) s += a(i * d2 + j, i * d2 + l);
      out(j, l) = s;
    }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cd aij = a(i, j);
      if (aij == cd(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

std::vector<cd> vectorize(const CMatrix& x) { return x.entries(); }

std::vector<cd> diag_extract(const CMatrix& c) {
  require(c.is_square(), "diag_extract: non-square input");
  std::vector<cd> v(c.rows());
  for (std::size_t i = 0; i < c.rows(); ++i) v[i] = c(i, i);
  return v;
}

CMatrix diag_embed(const std::vector<cd>& v) { return CMatrix::diagonal(v); }

CMatrix matrix_sqrt_psd(const CMatrix& a) {
  const HermitianEigenSystem es = hermitian_eig(a);
  if (!es.eigenvalues.empty() && es.eigenvalues.front() < -1e-10)
    throw std::invalid_argument("matrix_sqrt_psd: significantly negative eigenvalue");
  const std::size_t n = a.rows();
  CMatrix scaled = es.eigenvectors;
  for (std::size_t c = 0; c < n; ++c) {
    const double s = std::sqrt(std::max(0.0, es.eigenvalues[c]));
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= s;
  }
  return scaled * es.eigenvectors.adjoint();
}

CMatrix hermitian_abs(const CMatrix& a) {
  const HermitianEigenSystem es = hermitian_eig(a);
  const std::size_t n = a.rows();
  CMatrix scaled = es.eigenvectors;
  for (std::size_t c = 0; c < n; ++c) {
    const double s = std::abs(es.eigenvalues[c]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= s;
  }
  return scaled * es.eigenvectors.adjoint();
}

}  // namespace povmduel::linalg
