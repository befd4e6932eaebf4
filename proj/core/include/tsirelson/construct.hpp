#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tsirelson/engine.hpp"
#include "tsirelson/schreier.hpp"
#include "tsirelson/vector.hpp"

namespace tsirelson::construct {

/// Finite prefix (y_1, y_2, ...) of a block basis. Indices are 1-based.
struct BlockBasis {
  std::vector<FinVec> vectors;
  /// Every y_i has Tsirelson norm 1.
  bool normalized = false;

  /// e_1, ..., e_count.
  static BlockBasis unit(std::size_t count);

  std::size_t size() const { return vectors.size(); }
  const FinVec& at(std::size_t index) const { return vectors.at(index - 1); }
  /// m_i = min supp y_i.
  std::vector<Pos> mins() const;
  /// Throws Domain unless the supports are nonempty and successive.
  void validate() const;
};

/// Greedy subsequence with m_{i+1} > k m_i, keeping y_1. Throws Exhausted
/// when fewer than `min_length` vectors survive.
BlockBasis thin(const BlockBasis& basis, Pos k, std::size_t min_length = 1);

struct AverageCertificate {
  FinSet index_set;                    // A, basis indices
  std::map<std::size_t, Scalar> coeffs;  // alpha_l for l in A
  int n = 0;
  Pos k = 1;
  Scalar epsilon;
  /// Realized max of the alpha-sum over (n-1)-admissible (k) subfamilies.
  Scalar max_subfamily_sum;
  SetSequence subfamily_witness;  // singletons of scaled minima
  /// ||z|| computed exactly; both bounds hold with equality.
  Scalar norm_lower, norm_upper;
};

struct Average {
  FinVec z;
  AverageCertificate certificate;
};

/// (n, eps) average (k) of the basis: a Schreier repeated average of order
/// n, with its start index moved right until the subfamily condition
/// holds. Starts at basis index `first` or later.
/// Throws InsufficientBasis when the basis runs out and
/// EpsilonTooSmallForBudget when every candidate beyond the last rejected
/// one would exceed the support bound.
Average n_eps_average(const BlockBasis& basis, int n, const Scalar& eps, Pos k, std::size_t first = 1,
                      const engine::Limits& limits = {});

/// Repeated average of order n starting exactly at basis index `start`,
/// with the realized subfamily sum in place of a target epsilon.
Average realized_average(const BlockBasis& basis, int n, Pos k, std::size_t start,
                         const engine::Limits& limits = {});

/// Among starts >= first whose repeated average fits in `max_support`, the
/// one with the least realized subfamily sum (earliest on ties).
Average best_realized_average(const BlockBasis& basis, int n, Pos k, std::size_t first, std::size_t max_support,
                              const engine::Limits& limits = {});

struct AverageCheck {
  bool sum_exact = false;       // sum alpha = 2^n
  bool admissible = false;      // (y_l)_{l in A} is n-admissible
  bool subfamily_small = false;  // max (n-1)-admissible (k) sum < eps
  bool norm_at_least_one = false;
  bool vector_matches = false;  // z = sum alpha_l y_l
  Scalar subfamily_sum;
  Scalar norm;

  bool ok() const { return sum_exact && admissible && subfamily_small && norm_at_least_one && vector_matches; }
};

/// Recomputes every certificate condition from scratch.
AverageCheck check_average(const BlockBasis& basis, const FinVec& z, const AverageCertificate& cert,
                           const engine::Limits& limits = {});

struct Stabilized {
  FinVec z;
  std::vector<Average> parts;  // z_i, an (i, eps) average (3), i = 1..n
  Scalar norm;                 // ||z||
  bool relaxed = false;        // parts use realized averages
};

/// z = (1/n) sum z_i with z_1 < ... < z_n built on successive tails of the
/// basis from index n. With `relaxed` the parts are the best realized
/// averages within an equal share of the support bound, and their
/// certificates record the epsilon actually reached.
Stabilized stabilize(const BlockBasis& basis, int n, const Scalar& eps, const engine::Limits& limits = {},
                     bool relaxed = false);
FinVec stabilized_vector(const BlockBasis& basis, int n, const Scalar& eps, const engine::Limits& limits = {});

/// Uniform 2^n/|F| over the maximal S_n family F of basis indices from
/// `start`; the subfamily condition is not imposed.
FinVec l1_average(const BlockBasis& basis, int n, std::size_t start);

}  // namespace tsirelson::construct
