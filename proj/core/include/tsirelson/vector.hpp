#pragma once

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "tsirelson/scalar.hpp"

namespace tsirelson {

/// Finitely supported vector over positions 1, 2, ... with exact entries.
/// Zero entries are never stored, so the key set is the support.
class FinVec {
 public:
  using Entries = std::map<Pos, Scalar>;

  FinVec() = default;
  FinVec(std::initializer_list<std::pair<const Pos, Scalar>> entries);
  explicit FinVec(const Entries& entries);

  /// e_position.
  static FinVec unit(Pos position);
  /// Sum of e_p over [first, last] with coefficient `coefficient`.
  static FinVec constant(Pos first, Pos last, const Scalar& coefficient = 1);

  const Entries& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  Scalar at(Pos position) const;
  void set(Pos position, const Scalar& value);

  std::vector<Pos> support() const;
  Pos min_support() const;
  Pos max_support() const;

  Scalar sup_norm() const;
  Scalar l1_norm() const;

  /// Restriction Ex to the positions of `positions` (any order).
  FinVec restrict(const std::vector<Pos>& positions) const;
  /// Restriction to the closed position range [first, last].
  FinVec restrict_range(Pos first, Pos last) const;
  FinVec abs() const;

  FinVec& operator+=(const FinVec& other);
  FinVec& operator*=(const Scalar& factor);
  friend FinVec operator+(FinVec lhs, const FinVec& rhs) { return lhs += rhs; }
  friend FinVec operator*(const Scalar& factor, FinVec v) { return v *= factor; }
  friend bool operator==(const FinVec& lhs, const FinVec& rhs) { return lhs.entries_ == rhs.entries_; }

 private:
  Entries entries_;
};

}  // namespace tsirelson
