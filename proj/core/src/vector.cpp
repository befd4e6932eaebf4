#include "tsirelson/vector.hpp"

#include <string>

#include "tsirelson/errors.hpp"

namespace tsirelson {

namespace {
void check_position(Pos p) {
  if (p < 1) throw Error(ErrorKind::Domain, "position must be >= 1, got " + std::to_string(p));
}
}  // namespace

FinVec::FinVec(std::initializer_list<std::pair<const Pos, Scalar>> entries) {
  for (const auto& [p, v] : entries) set(p, v);
}

FinVec::FinVec(const Entries& entries) {
  for (const auto& [p, v] : entries) set(p, v);
}

FinVec FinVec::unit(Pos position) {
  FinVec v;
  v.set(position, 1);
  return v;
}

FinVec FinVec::constant(Pos first, Pos last, const Scalar& coefficient) {
  FinVec v;
  for (Pos p = first; p <= last; ++p) v.set(p, coefficient);
  return v;
}

Scalar FinVec::at(Pos position) const {
  auto it = entries_.find(position);
  return it == entries_.end() ? Scalar(0) : it->second;
}

void FinVec::set(Pos position, const Scalar& value) {
  check_position(position);
  Scalar v = value;
  v.canonicalize();
  if (v == 0) {
    entries_.erase(position);
  } else {
    entries_[position] = std::move(v);
  }
}

std::vector<Pos> FinVec::support() const {
  std::vector<Pos> out;
  out.reserve(entries_.size());
  for (const auto& [p, v] : entries_) out.push_back(p);
  return out;
}

Pos FinVec::min_support() const {
  if (empty()) throw Error(ErrorKind::Domain, "min_support of the zero vector");
  return entries_.begin()->first;
}

Pos FinVec::max_support() const {
  if (empty()) throw Error(ErrorKind::Domain, "max_support of the zero vector");
  return entries_.rbegin()->first;
}

Scalar FinVec::sup_norm() const {
  Scalar m(0);
  for (const auto& [p, v] : entries_) {
    Scalar a = tsirelson::abs(v);
    if (a > m) m = a;
  }
  return m;
}

Scalar FinVec::l1_norm() const {
  Scalar s(0);
  for (const auto& [p, v] : entries_) s += tsirelson::abs(v);
  return s;
}

FinVec FinVec::restrict(const std::vector<Pos>& positions) const {
  FinVec out;
  for (Pos p : positions) {
    auto it = entries_.find(p);
    if (it != entries_.end()) out.entries_.insert(*it);
  }
  return out;
}

FinVec FinVec::restrict_range(Pos first, Pos last) const {
  FinVec out;
  for (auto it = entries_.lower_bound(first); it != entries_.end() && it->first <= last; ++it) {
    out.entries_.insert(*it);
  }
  return out;
}

FinVec FinVec::abs() const {
  FinVec out;
  for (const auto& [p, v] : entries_) out.entries_.emplace(p, tsirelson::abs(v));
  return out;
}

FinVec& FinVec::operator+=(const FinVec& other) {
  for (const auto& [p, v] : other.entries_) set(p, at(p) + v);
  return *this;
}

FinVec& FinVec::operator*=(const Scalar& factor) {
  if (factor == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [p, v] : entries_) v *= factor;
  return *this;
}

}  // namespace tsirelson
