#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tsirelson/construct.hpp"
#include "tsirelson/engine.hpp"
#include "tsirelson/norm_def.hpp"

namespace tsirelson::lab {

/// Base norm evaluated by the engine.
BaseNorm engine_base(const NormDef& def);
/// ||.|| of T.
BaseNorm tsirelson_base();
/// ||.||_inf.
BaseNorm sup_base();

/// |x|_j = 2^-j sup sum |E_i x| over j-admissible (E_i). A base that is not
/// declared unconditional is handled by exhaustive set partitions
/// (support <= 10), otherwise UnverifiedUnconditionality.
Scalar norm_j(const FinVec& x, int j, const BaseNorm& base, const engine::Limits& limits = {});
/// |x|^(n) = (1/n) sum_{j<n} |x|_j.
Scalar norm_avg(const FinVec& x, int n, const BaseNorm& base, const engine::Limits& limits = {});
/// |x|_Tr: tree norm over the base.
Scalar norm_tr(const FinVec& x, const BaseNorm& base, const engine::Limits& limits = {});

struct SearchBudget {
  /// Most blocks in a searched family of blocks.
  std::size_t max_family = 8;
  /// Largest support of an evaluated vector.
  std::size_t max_support = 256;
  /// Largest support of a family whose members are blocks rather than
  /// single basis vectors.
  std::size_t max_block_support = 64;
  /// Largest basis index a searched family may start at.
  std::size_t max_start = 32;
  /// Interval cap k of the successive-interval-sum norm.
  std::size_t max_intervals = 8;
  /// Largest m for the single-average search in distortion experiments.
  std::size_t max_average = 64;
};

struct DeltaEstimate {
  /// Least ratio base(sum x_i) / sum base(x_i) found.
  Scalar value;
  std::vector<FinVec> witness;
  /// Every ratio evaluated, in search order.
  std::vector<Scalar> evaluated;
};

/// Running minimum of base(sum x_i) / sum base(x_i) over n-admissible block
/// families: maximal runs of basis vectors from each start (as long as the
/// support budget allows), runs of up to max_family equal-length blocks,
/// and successive l1 averages. An upper bound for the modulus.
DeltaEstimate delta_n_estimate(const construct::BlockBasis& basis, const BaseNorm& base, int n,
                               const SearchBudget& budget = {});

struct StabilityReport {
  int n = 0;
  Scalar epsilon;
  std::map<int, Scalar> values;  // j -> |z|_j^n, 0 <= j <= n
  Scalar d;                      // min of values
  Scalar ratio;                  // max / min
  Scalar norm_of_z;
  bool relaxed = false;
  /// Epsilon reached by each part z_i (relaxed runs), else the target.
  std::vector<Scalar> part_epsilons;
  FinVec z;
};

/// Builds the stabilized vector and evaluates |z|_j^n for 0 <= j <= n.
/// n >= 4 needs `allow_large`.
StabilityReport stabilization_experiment(int n, const Scalar& eps, const construct::BlockBasis& basis,
                                         const engine::Limits& limits = {}, bool relaxed = false,
                                         bool allow_large = false);

struct DistortionReport {
  Scalar ratio_high;  // max |w| / ||w|| found
  Scalar ratio_low;   // min |x| / ||x|| found
  FinVec witness_high, witness_low;
  std::size_t evaluated = 0;
};

/// |z| = max over at most k successive intervals of sum ||E_i z||, with the
/// norm of T(S_n, theta^n).
Scalar interval_sum_norm(const FinVec& z, const NormDef& def, std::size_t k, const engine::Limits& limits = {});

/// Searches X = T(S_n, theta^n) for w with |w| / ||w|| large (stacked
/// averages) and x with |x| / ||x|| near 1 (one long average).
DistortionReport theta_distortion_experiment(const Scalar& theta, int n, const SearchBudget& budget = {});

struct MixedRatio {
  std::string label;
  FinVec x;
  Scalar mixed, tsirelson, ratio;
};

/// mixed_norm(x) / tsirelson(x) on sums of successive l1 averages of
/// growing order. Throws Domain if some ratio exceeds 1.
std::vector<MixedRatio> mixed_weight_experiment(const std::function<Scalar(int)>& coefficient,
                                                const SearchBudget& budget = {});

}  // namespace tsirelson::lab
