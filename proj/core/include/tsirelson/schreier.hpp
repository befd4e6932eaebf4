#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "tsirelson/scalar.hpp"

namespace tsirelson {

/// Finite set of positions, strictly increasing.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<Pos> elements);
  /// Sorts and deduplicates; rejects positions < 1.
  explicit FinSet(std::vector<Pos> elements);

  const std::vector<Pos>& elements() const noexcept { return elements_; }
  std::span<const Pos> span() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  Pos min() const { return elements_.front(); }
  Pos max() const { return elements_.back(); }
  bool contains(Pos p) const;

  /// {scale * e : e in this}.
  FinSet scaled(Pos scale) const;

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet& lhs, const FinSet& rhs) { return lhs.elements_ <=> rhs.elements_; }

 private:
  std::vector<Pos> elements_;
};

/// Ordered sequence of nonempty, successive sets: max(sets[i]) < min(sets[i+1]).
class SetSequence {
 public:
  SetSequence() = default;
  /// Throws Error{Domain} if a set is empty or the sets are not successive.
  explicit SetSequence(std::vector<FinSet> sets);

  const std::vector<FinSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  std::vector<Pos> minima() const;

  /// True iff `sets` is nonempty-per-set and successive.
  static bool is_successive(const std::vector<FinSet>& sets);

  friend bool operator==(const SetSequence&, const SetSequence&) = default;

 private:
  std::vector<FinSet> sets_;
};

namespace schreier {

/// Enumeration guard; enumerate() refuses to go beyond it.
struct EnumerationBound {
  Pos max_pos = 20;
  int max_level = 4;
};

/// Length of the longest prefix of the strictly increasing `elements`
/// that lies in S_n. Greedy: each S_n block takes the longest S_{n-1}
/// prefix, and at most min(block) blocks are allowed.
std::size_t longest_member_prefix(std::span<const Pos> elements, int n);

/// F in S_n.
bool is_member(std::span<const Pos> elements, int n);
inline bool is_member(const FinSet& set, int n) { return is_member(set.span(), n); }

/// Smallest n with F in S_n, or -1 if F is in no S_n (min F = 1 and |F| > 1).
int min_level(std::span<const Pos> elements);

/// F in S_n and no F ∪ {p} with p > max F is in S_n. Throws Error{NotMember}.
bool is_maximal(const FinSet& set, int n);

/// seq successive and {scale * min E_i} in S_k.
bool is_admissible(const std::vector<FinSet>& seq, int k, Pos scale = 1);
inline bool is_admissible(const SetSequence& seq, int k, Pos scale = 1) {
  return is_admissible(seq.sets(), k, scale);
}

struct WeightedSubset {
  Scalar value;
  FinSet set;
};

/// max over F in S_n of the weight of F, for nonnegative weights.
/// The witness is drawn from positively weighted positions and is the
/// lexicographically least optimal set (as an increasing sequence).
WeightedSubset max_weight_subset(const std::map<Pos, Scalar>& weights, int n);

/// Visits every member of S_n with elements <= max_pos exactly once, in
/// lexicographic order starting from the empty set. Throws
/// Error{BoundExceeded} beyond `bound`.
void enumerate(int n, Pos max_pos, const std::function<void(const FinSet&)>& visit,
               const EnumerationBound& bound = {});
std::vector<FinSet> enumerate(int n, Pos max_pos, const EnumerationBound& bound = {});

/// Greedy maximal S_n set drawn from the increasing candidate list, starting
/// at its first element: returns how many leading candidates are taken. If
/// the candidates run out before the set is maximal, `complete` is false.
struct MaximalPrefix {
  std::size_t count = 0;
  bool complete = false;
};
MaximalPrefix maximal_member_prefix(std::span<const Pos> candidates, int n);

}  // namespace schreier
}  // namespace tsirelson
