#include "povmduel/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "povmduel/linalg.hpp"

namespace povmduel::classical {

namespace {

using Mask = std::uint64_t;

std::vector<std::size_t> mask_to_subset(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m >> i; ++i)
    if (m & (Mask(1) << i)) out.push_back(i);
  return out;
}

// total order on candidates: larger value first, then smaller cardinality,
// then lexicographically smaller index list (= mask containing the lowest
// differing bit)
struct Candidate {
  double value = -1.0;
  Mask mask = 0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  const int ca = std::popcount(a.mask), cb = std::popcount(b.mask);
  if (ca != cb) return ca < cb;
  const Mask diff = a.mask ^ b.mask;
  if (diff == 0) return false;
  return (a.mask >> std::countr_zero(diff)) & 1;
}

unsigned resolve_threads(unsigned requested, std::size_t work_items) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  t = std::min<std::size_t>(t, std::max<std::size_t>(1, work_items / 64));
  return std::max(1u, t);
}

// value(Delta) for the POVM scan; masks walked in Gray-code order with an
// incremental difference sum, chunked across threads
Candidate scan_povm_masks(const std::vector<CMatrix>& diff, unsigned threads) {
  const std::size_t n = diff.size();
  const Mask full = (n >= 64) ? ~Mask(0) : ((Mask(1) << n) - 1);
  // enumerate masks containing outcome 0; complements share the value
  const Mask count = Mask(1) << (n - 1);

  auto run_range = [&](Mask begin, Mask end, Candidate& best) {
    const std::size_t d = diff.front().rows();
    auto gray = [](Mask k) { return k ^ (k >> 1); };
    Mask prev_mask = (gray(begin) << 1) | 1;
    CMatrix sum(d, d);
    for (std::size_t i = 0; i < n; ++i)
      if (prev_mask & (Mask(1) << i)) sum += diff[i];

    for (Mask k = begin; k < end; ++k) {
      const Mask mask = (gray(k) << 1) | 1;
      if (k != begin) {
        const Mask changed = mask ^ prev_mask;
        const std::size_t bit = std::countr_zero(changed);
        if (mask & changed)
          sum += diff[bit];
        else
          sum -= diff[bit];
        prev_mask = mask;
      }
      const double v = linalg::operator_norm(sum);
      for (Mask candidate_mask : {mask, full & ~mask}) {
        if (candidate_mask == 0) continue;
        const Candidate c{v, candidate_mask};
        if (better(c, best)) best = c;
      }
    }
  };

  const unsigned t = resolve_threads(threads, count);
  std::vector<Candidate> bests(t);
  if (t == 1) {
    run_range(0, count, bests[0]);
  } else {
    std::vector<std::thread> pool;
    const Mask chunk = (count + t - 1) / t;
    for (unsigned i = 0; i < t; ++i)
      pool.emplace_back(run_range, Mask(i) * chunk, std::min(count, Mask(i + 1) * chunk),
                        std::ref(bests[i]));
    for (auto& th : pool) th.join();
  }
  Candidate best = bests[0];
  for (unsigned i = 1; i < t; ++i)
    if (better(bests[i], best)) best = bests[i];
  return best;
}

struct ProjectiveScanOutcome {
  Candidate best;        // maximizer of sqrt(1 - sigma_min^2)
  double min_sigma = 1.0;
  double best_sigma = 1.0;
};

double submatrix_sigma_min(const CMatrix& u, Mask mask) {
  const auto idx = mask_to_subset(mask);
  CMatrix sub(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = u(idx[a], idx[b]);
  return linalg::svd_values(sub).back();
}

ProjectiveScanOutcome scan_projective(const CMatrix& u, unsigned threads) {
  const std::size_t d = u.rows();
  const Mask full = (d >= 64) ? ~Mask(0) : ((Mask(1) << d) - 1);
  const Mask count = Mask(1) << (d - 1);

  struct Local {
    Candidate best;
    double min_sigma = 1.0;
    double best_sigma = 1.0;
  };

  auto run_range = [&](Mask begin, Mask end, Local& local) {
    for (Mask k = begin; k < end; ++k) {
      const Mask mask = (k << 1) | 1;  // all masks containing index 0
      const double sigma = submatrix_sigma_min(u, mask);
      const double value = std::sqrt(std::max(0.0, 1.0 - sigma * sigma));
      local.min_sigma = std::min(local.min_sigma, sigma);
      for (Mask candidate_mask : {mask, full & ~mask}) {
        if (candidate_mask == 0) continue;
        const Candidate c{value, candidate_mask};
        if (better(c, local.best)) {
          local.best = c;
          local.best_sigma = sigma;
        }
      }
    }
  };

  const unsigned t = resolve_threads(threads, count);
  std::vector<Local> locals(t);
  if (t == 1) {
    run_range(0, count, locals[0]);
  } else {
    std::vector<std::thread> pool;
    const Mask chunk = (count + t - 1) / t;
    for (unsigned i = 0; i < t; ++i)
      pool.emplace_back(run_range, Mask(i) * chunk, std::min(count, Mask(i + 1) * chunk),
                        std::ref(locals[i]));
    for (auto& th : pool) th.join();
  }
  ProjectiveScanOutcome out;
  out.best = locals[0].best;
  out.min_sigma = locals[0].min_sigma;
  out.best_sigma = locals[0].best_sigma;
  for (unsigned i = 1; i < t; ++i) {
    out.min_sigma = std::min(out.min_sigma, locals[i].min_sigma);
    if (better(locals[i].best, out.best)) {
      out.best = locals[i].best;
      out.best_sigma = locals[i].best_sigma;
    }
  }
  return out;
}

std::vector<CMatrix> effect_differences(const Povm& s, const Povm& t) {
  if (s.outcomes() != t.outcomes())
    throw std::invalid_argument("classical scan: outcome count mismatch");
  if (s.dim() != t.dim()) throw std::invalid_argument("classical scan: dimension mismatch");
  std::vector<CMatrix> diff;
  diff.reserve(s.outcomes());
  for (std::size_t i = 0; i < s.outcomes(); ++i)
    diff.push_back(s.effects()[i] - t.effects()[i]);
  return diff;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("classical scan: no outcomes");
  if (n > cap || n > 63)
    throw std::invalid_argument("classical scan: outcome count exceeds the subset cap");
}

std::vector<cd> leading_abs_eigenvector(const CMatrix& m) {
  const auto es = linalg::hermitian_eig(m);
  const std::size_t n = m.rows();
  std::size_t pick = n - 1;  // largest |eigenvalue|, positive preferred on ties
  if (std::abs(es.eigenvalues.front()) > std::abs(es.eigenvalues.back())) pick = 0;
  std::vector<cd> v(n);
  for (std::size_t r = 0; r < n; ++r) v[r] = es.eigenvectors(r, pick);
  return v;
}

CMatrix subset_sum(const std::vector<CMatrix>& diff, const std::vector<std::size_t>& subset) {
  CMatrix sum(diff.front().rows(), diff.front().cols());
  for (std::size_t i : subset) sum += diff[i];
  return sum;
}

}  // namespace

ClassicalBound classical_bound_povm(const Povm& s, const Povm& t, const ScanOptions& opts) {
  const auto diff = effect_differences(s, t);
  check_cap(diff.size(), opts.subset_cap);
  const Candidate best = scan_povm_masks(diff, opts.threads);

  ClassicalBound out;
  out.scan.best_subset = mask_to_subset(best.mask);
  out.scan.best_value = best.value;
  out.scan.optimal_state = leading_abs_eigenvector(subset_sum(diff, out.scan.best_subset));
  out.probability_bound = 0.5 + 0.5 * best.value;
  return out;
}

ClassicalBound classical_bound_projective(const VonNeumannMeasurement& u, const ScanOptions& opts) {
  check_cap(u.dim(), opts.subset_cap);
  const auto scan = scan_projective(u.unitary(), opts.threads);

  ClassicalBound out;
  out.scan.best_subset = mask_to_subset(scan.best.mask);
  out.scan.best_value = scan.best.value;
  out.min_sigma = scan.min_sigma;
  const auto diff = effect_differences(VonNeumannMeasurement(CMatrix::identity(u.dim())).to_povm(),
                                       u.to_povm());
  out.scan.optimal_state = leading_abs_eigenvector(subset_sum(diff, out.scan.best_subset));
  out.probability_bound = 0.5 + 0.5 * scan.best.value;
  return out;
}

RankDeficiency has_rank_deficient_principal_submatrix(const VonNeumannMeasurement& u,
                                                      const ScanOptions& opts) {
  check_cap(u.dim(), opts.subset_cap);
  const auto scan = scan_projective(u.unitary(), opts.threads);
  RankDeficiency out;
  out.sigma_min = scan.min_sigma;
  out.found = scan.min_sigma <= 1e-9;
  if (out.found) out.witness = mask_to_subset(scan.best.mask);
  return out;
}

std::vector<cd> optimal_classical_state(const Povm& s, const Povm& t, const ScanOptions& opts) {
  return classical_bound_povm(s, t, opts).scan.optimal_state;
}

}  // namespace povmduel::classical
