#pragma once
// Entanglement-free discrimination bounds: exhaustive subset scans over
// effect differences and principal submatrices. Scans are parallel over the
// subset index space but the reported maximizer is schedule-independent: the
// comparison (value, then cardinality, then lexicographic order) is a total
// order.

#include <cstddef>
#include <vector>

#include "povmduel/cmatrix.hpp"
#include "povmduel/quantum.hpp"

namespace povmduel::classical {

struct ScanOptions {
  std::size_t subset_cap = 20;  // hard cap on outcomes; 2^cap subsets scanned
  unsigned threads = 0;         // 0 = hardware concurrency
};

struct SubsetScanResult {
  std::vector<std::size_t> best_subset;  // sorted indices, 0-based
  double best_value = 0.0;               // || sum_{i in subset} (S_i - T_i) ||
  std::vector<cd> optimal_state;         // unit vector
};

struct ClassicalBound {
  SubsetScanResult scan;
  double probability_bound = 0.5;  // 1/2 + best_value / 2
  // smallest sigma_min(U_Delta) seen across the scan (projective scans only)
  double min_sigma = 1.0;
};

// Bound over arbitrary POVM pairs with equal outcome count and dimension.
ClassicalBound classical_bound_povm(const Povm& s, const Povm& t, const ScanOptions& opts = {});

// Projective specialization: scans principal submatrices U_Delta and uses
// value(Delta) = sqrt(1 - sigma_min^2(U_Delta)).
ClassicalBound classical_bound_projective(const VonNeumannMeasurement& u,
                                          const ScanOptions& opts = {});

struct RankDeficiency {
  bool found = false;
  std::vector<std::size_t> witness;  // subset with sigma_min <= threshold
  double sigma_min = 1.0;            // smallest sigma_min over all subsets
};

// True iff some principal submatrix is rank deficient (sigma_min <= 1e-9),
// i.e. iff classical perfect discrimination from the computational basis is
// possible.
RankDeficiency has_rank_deficient_principal_submatrix(const VonNeumannMeasurement& u,
                                                      const ScanOptions& opts = {});

// Normalized leading eigenvector of |sum_{i in best subset} (S_i - T_i)|.
std::vector<cd> optimal_classical_state(const Povm& s, const Povm& t,
                                        const ScanOptions& opts = {});

}  // namespace povmduel::classical
