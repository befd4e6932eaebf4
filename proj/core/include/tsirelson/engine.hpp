#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "tsirelson/certificate.hpp"
#include "tsirelson/norm_def.hpp"
#include "tsirelson/schreier.hpp"
#include "tsirelson/vector.hpp"

namespace tsirelson::engine {

struct Limits {
  std::size_t max_support = 256;
};

/// Exact value with a certifying tree.
NormResult eval(const FinVec& x, const NormDef& def, const Limits& limits = {});

NormResult tsirelson(const FinVec& x, const Limits& limits = {});
NormResult norm_n(const FinVec& x, int n, const Limits& limits = {});
NormResult norm_jn(const FinVec& x, int j, int n, const Limits& limits = {});
NormResult seminorm_jn(const FinVec& x, int j, int n, const Limits& limits = {});
NormResult mixed_norm(const FinVec& x, std::function<Scalar(int)> coefficient, const Scalar& theta,
                      const Limits& limits = {});

/// |x|_m = sup over E in S_m of |sum_{i in E} x(i)|.
Scalar schreier_norm(const FinVec& x, int m);

/// Values of a monotone norm on every restriction of x to a run of
/// consecutive support points: value(a, b) = N(x restricted to
/// support[a..b]), 0 <= a <= b < size().
class IntervalLeaf {
 public:
  IntervalLeaf(std::vector<Pos> support, std::function<Scalar(std::size_t, std::size_t)> value);

  /// Precomputed from one engine pass over x (every interval at once).
  static IntervalLeaf from_def(const FinVec& x, const NormDef& def, const Limits& limits = {});
  /// Evaluates `norm` lazily on restrictions, memoized.
  static IntervalLeaf from_norm(const FinVec& x, std::function<Scalar(const FinVec&)> norm);

  const std::vector<Pos>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  Scalar operator()(std::size_t a, std::size_t b) const { return value_(a, b); }

 private:
  std::vector<Pos> support_;
  std::function<Scalar(std::size_t, std::size_t)> value_;
};

struct AdmissibleSum {
  Scalar value;
  SetSequence witness;
};

/// max of sum_l leaf(E_l x) over k-admissible (scale) successive (E_l),
/// assuming the leaf is 1-unconditional.
AdmissibleSum best_admissible_sum(const IntervalLeaf& leaf, int k, Pos scale = 1);
AdmissibleSum best_admissible_sum(const FinVec& x, int k, const NormDef& leaf_def, Pos scale = 1,
                                  const Limits& limits = {});

/// Maximum over at most `max_parts` successive sets (no admissibility) of
/// sum leaf(E_i x); the interval-sum norm used by distortion experiments.
AdmissibleSum best_bounded_sum(const IntervalLeaf& leaf, std::size_t max_parts);

}  // namespace tsirelson::engine
