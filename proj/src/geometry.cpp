#include "povmduel/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "povmduel/linalg.hpp"

namespace povmduel::geometry {

namespace {

double cross(cd o, cd a, cd b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

// closest point of segment [a, b] to the origin; returns (distance, t)
std::pair<double, double> segment_closest(cd a, cd b) {
  const cd ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 <= 1e-300) return {std::abs(a), 0.0};
  double t = -(a.real() * ab.real() + a.imag() * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return {std::abs(a + t * ab), t};
}

}  // namespace

SpectrumHull spectrum_hull(const CMatrix& normal_input) {
  const auto es = linalg::normal_eig(normal_input);
  SpectrumHull out;
  out.eigenvalues = es.eigenvalues;

  const std::size_t n = out.eigenvalues.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);

  // dedup coincident eigenvalues, keep first occurrence
  double scale = 1e-12;
  for (const auto& l : out.eigenvalues) scale = std::max(scale, std::abs(l));
  const double same = 1e-12 * scale;
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    const cd a = out.eigenvalues[i], b = out.eigenvalues[j];
    if (a.real() != b.real()) return a.real() < b.real();
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return i < j;
  });
  std::vector<std::size_t> pts;
  for (std::size_t i : idx) {
    if (!pts.empty() && std::abs(out.eigenvalues[i] - out.eigenvalues[pts.back()]) <= same) continue;
    pts.push_back(i);
  }

  if (pts.size() <= 2) {
    for (std::size_t i : pts) {
      out.hull_vertices.push_back(out.eigenvalues[i]);
      out.hull_indices.push_back(i);
    }
    return out;
  }

  // monotone chain, strict turns only, so collinear interior points drop out
  auto build = [&](std::vector<std::size_t>& chain) {
    for (std::size_t i : pts) {
      while (chain.size() >= 2 &&
             cross(out.eigenvalues[chain[chain.size() - 2]], out.eigenvalues[chain.back()],
                   out.eigenvalues[i]) <= 0.0)
        chain.pop_back();
      chain.push_back(i);
    }
  };
  std::vector<std::size_t> lower, upper;
  build(lower);
  std::reverse(pts.begin(), pts.end());
  build(upper);

  // counterclockwise: lower chain then upper chain without repeated endpoints
  for (std::size_t k = 0; k + 1 < lower.size(); ++k) {
    out.hull_vertices.push_back(out.eigenvalues[lower[k]]);
    out.hull_indices.push_back(lower[k]);
  }
  for (std::size_t k = 0; k + 1 < upper.size(); ++k) {
    out.hull_vertices.push_back(out.eigenvalues[upper[k]]);
    out.hull_indices.push_back(upper[k]);
  }
  if (out.hull_vertices.empty() && !pts.empty()) {  // fully collinear fallback
    out.hull_vertices.push_back(out.eigenvalues[pts.front()]);
    out.hull_indices.push_back(pts.front());
  }
  return out;
}

HullDistance dist_zero_to_hull(const CMatrix& normal_input) {
  HullDistance out;
  out.hull = spectrum_hull(normal_input);
  const auto& v = out.hull.hull_vertices;
  const auto& map = out.hull.hull_indices;
  const std::size_t n = out.hull.eigenvalues.size();
  out.witness_weights.assign(n, 0.0);
  if (v.empty()) return out;

  if (v.size() == 1) {
    out.nu = std::abs(v[0]);
    out.witness_weights[map[0]] = 1.0;
    return out;
  }
  if (v.size() == 2) {
    const auto [dist, t] = segment_closest(v[0], v[1]);
    out.nu = dist;
    out.witness_weights[map[0]] = 1.0 - t;
    out.witness_weights[map[1]] = t;
    return out;
  }

  bool inside = true;
  for (std::size_t i = 0; i < v.size() && inside; ++i) {
    const cd a = v[i], b = v[(i + 1) % v.size()];
    if (cross(a, b, cd(0.0, 0.0)) < 0.0) inside = false;
  }

  if (inside) {
    out.nu = 0.0;
    // fan triangulation from vertex 0; one triangle contains the origin
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      const cd p0 = v[0], p1 = v[i], p2 = v[i + 1];
      const double det = (p1.real() - p0.real()) * (p2.imag() - p0.imag()) -
                         (p2.real() - p0.real()) * (p1.imag() - p0.imag());
      if (std::abs(det) <= 1e-300) continue;
      const double w1 = (-p0.real() * (p2.imag() - p0.imag()) + p0.imag() * (p2.real() - p0.real())) / det;
      const double w2 = (p0.real() * (p1.imag() - p0.imag()) - p0.imag() * (p1.real() - p0.real())) / det;
      const double w0 = 1.0 - w1 - w2;
      const double slack = -1e-12;
      if (w0 >= slack && w1 >= slack && w2 >= slack) {
        out.witness_weights[map[0]] += std::max(0.0, w0);
        out.witness_weights[map[i]] += std::max(0.0, w1);
        out.witness_weights[map[i + 1]] += std::max(0.0, w2);
        double s = 0.0;
        for (double w : out.witness_weights) s += w;
        for (double& w : out.witness_weights) w /= s;
        return out;
      }
    }
    // boundary case slipped through the triangle scan; fall through to edges
  }

  double best = std::numeric_limits<double>::infinity();
  std::size_t best_edge = 0;
  double best_t = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto [dist, t] = segment_closest(v[i], v[(i + 1) % v.size()]);
    if (dist < best) {
      best = dist;
      best_edge = i;
      best_t = t;
    }
  }
  out.nu = best;
  out.witness_weights[map[best_edge]] = 1.0 - best_t;
  out.witness_weights[map[(best_edge + 1) % v.size()]] += best_t;
  return out;
}

double unitary_channel_distance(const CMatrix& unitary) {
  if (!unitary.is_square()) throw std::invalid_argument("unitary_channel_distance: non-square");
  const std::size_t d = unitary.rows();
  if ((unitary.adjoint() * unitary - CMatrix::identity(d)).frobenius_norm() >
      1e-8 * std::sqrt(double(d)) + 1e-8)
    throw std::invalid_argument("unitary_channel_distance: input is not unitary");
  const double nu = std::min(1.0, dist_zero_to_hull(unitary.adjoint()).nu);
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - nu * nu));
}

NumericalRangeMembership zero_in_numerical_range(const CMatrix& a, double tol) {
  if (!a.is_square()) throw std::invalid_argument("zero_in_numerical_range: non-square");
  NumericalRangeMembership out;
  const double scale = std::max(1.0, a.frobenius_norm());

  if (a.hermiticity_residual() <= 1e-12 * scale) {
    // exact interval test for Hermitian input
    const auto es = linalg::hermitian_eig(a);
    out.margin = std::max(es.eigenvalues.front(), -es.eigenvalues.back());
  } else {
    auto min_eig_rotated = [&](double theta) {
      const cd z = std::polar(1.0, theta);
      const std::size_t n = a.rows();
      CMatrix h(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (z * a(i, j) + std::conj(z * a(j, i)));
      return linalg::hermitian_eig(h).eigenvalues.front();
    };

    const int grid = 721;
    double best_theta = 0.0, best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid; ++k) {
      const double theta = 2.0 * M_PI * k / grid;
      const double m = min_eig_rotated(theta);
      if (m > best) {
        best = m;
        best_theta = theta;
      }
    }
    // golden-section refinement of the maximum around the best grid point
    double lo = best_theta - 2.0 * M_PI / grid, hi = best_theta + 2.0 * M_PI / grid;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = min_eig_rotated(x1), f2 = min_eig_rotated(x2);
    while (hi - lo > 1e-6) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = min_eig_rotated(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = min_eig_rotated(x1);
      }
    }
    out.margin = std::max({best, f1, f2});
  }

  out.contains_zero = out.margin <= tol;
  out.boundary_inconclusive = std::abs(out.margin) < tol;
  return out;
}

}  // namespace povmduel::geometry
