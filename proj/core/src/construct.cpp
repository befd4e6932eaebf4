#include "tsirelson/construct.hpp"

#include <optional>
#include <string>

#include "tsirelson/errors.hpp"

namespace tsirelson::construct {

BlockBasis BlockBasis::unit(std::size_t count) {
  BlockBasis b;
  b.normalized = true;
  for (std::size_t i = 1; i <= count; ++i) b.vectors.push_back(FinVec::unit(static_cast<Pos>(i)));
  return b;
}

std::vector<Pos> BlockBasis::mins() const {
  std::vector<Pos> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(v.min_support());
  return out;
}

void BlockBasis::validate() const {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].empty()) throw Error(ErrorKind::Domain, "block " + std::to_string(i + 1) + " is zero");
    if (i > 0 && vectors[i - 1].max_support() >= vectors[i].min_support()) {
      throw Error(ErrorKind::Domain, "blocks " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                         " are not successive");
    }
  }
}

BlockBasis thin(const BlockBasis& basis, Pos k, std::size_t min_length) {
  if (k < 1) throw Error(ErrorKind::Domain, "thinning factor must be >= 1");
  BlockBasis out;
  out.normalized = basis.normalized;
  for (const auto& v : basis.vectors) {
    if (out.vectors.empty() || v.min_support() > k * out.vectors.back().min_support()) out.vectors.push_back(v);
  }
  if (out.vectors.size() < min_length) {
    throw Error(ErrorKind::Exhausted, "thinning kept " + std::to_string(out.vectors.size()) + " of the " +
                                          std::to_string(min_length) + " vectors needed");
  }
  return out;
}

namespace {

enum class Build { Ok, OverBudget, OutOfBasis };

// Lays out a repeated average: order 0 is y_next; order r averages m
// successive order-(r-1) averages, m the min support of the first vector.
class Layout {
 public:
  Layout(const BlockBasis& basis, std::size_t budget) : basis_(basis), mins_(basis.mins()), budget_(budget) {}

  Build run(std::size_t start, int order) {
    next_ = start;
    support_ = 0;
    coeffs_.clear();
    return place(order, Scalar(1));
  }

  const std::map<std::size_t, Scalar>& coeffs() const { return coeffs_; }

 private:
  Build place(int order, const Scalar& weight) {
    if (next_ > basis_.size()) return Build::OutOfBasis;
    if (order == 0) {
      support_ += basis_.at(next_).size();
      if (support_ > budget_) return Build::OverBudget;
      coeffs_[next_] = weight;
      ++next_;
      return Build::Ok;
    }
    const Pos count = mins_[next_ - 1];
    if (static_cast<std::size_t>(count) > budget_) return Build::OverBudget;
    Scalar share = weight / count;
    for (Pos i = 0; i < count; ++i) {
      if (Build b = place(order - 1, share); b != Build::Ok) return b;
    }
    return Build::Ok;
  }

  const BlockBasis& basis_;
  std::vector<Pos> mins_;
  std::size_t budget_;
  std::size_t next_ = 1;
  std::size_t support_ = 0;
  std::map<std::size_t, Scalar> coeffs_;
};

FinVec combine(const BlockBasis& basis, const std::map<std::size_t, Scalar>& coeffs) {
  FinVec z;
  for (const auto& [i, a] : coeffs) z += a * basis.at(i);
  return z;
}

struct Subfamily {
  Scalar sum;
  SetSequence witness;
};

// Largest alpha-sum over (n-1)-admissible (k) subfamilies of A.
Subfamily max_subfamily(const BlockBasis& basis, const std::map<std::size_t, Scalar>& coeffs, int n, Pos k) {
  std::map<Pos, Scalar> weights;
  for (const auto& [i, a] : coeffs) weights[k * basis.at(i).min_support()] = a;
  auto best = schreier::max_weight_subset(weights, n - 1);
  std::vector<FinSet> singletons;
  for (Pos p : best.set.elements()) singletons.push_back(FinSet{p});
  return {best.value, SetSequence(std::move(singletons))};
}

Average certify(const BlockBasis& basis, const std::map<std::size_t, Scalar>& shape, int n, Pos k,
                const engine::Limits& limits) {
  Average out;
  auto& cert = out.certificate;
  cert.n = n;
  cert.k = k;
  const Scalar total = pow2(n);
  std::vector<Pos> indices;
  for (const auto& [i, a] : shape) {
    cert.coeffs[i] = total * a;
    indices.push_back(static_cast<Pos>(i));
  }
  cert.index_set = FinSet(std::move(indices));
  auto sub = max_subfamily(basis, cert.coeffs, n, k);
  cert.max_subfamily_sum = sub.sum;
  cert.subfamily_witness = std::move(sub.witness);
  out.z = combine(basis, cert.coeffs);
  cert.norm_lower = cert.norm_upper = engine::tsirelson(out.z, limits).value;
  return out;
}

void check_request(const BlockBasis& basis, int n, Pos k, std::size_t first) {
  if (n < 1) throw Error(ErrorKind::Domain, "average order must be >= 1");
  if (k < 1) throw Error(ErrorKind::Domain, "admissibility scale must be >= 1");
  if (first < 1) throw Error(ErrorKind::Domain, "basis indices start at 1");
  if (!basis.normalized) throw Error(ErrorKind::Domain, "averages need a normalized basis");
  basis.validate();
}

}  // namespace

Average n_eps_average(const BlockBasis& basis, int n, const Scalar& eps, Pos k, std::size_t first,
                      const engine::Limits& limits) {
  check_request(basis, n, k, first);
  if (eps <= 0 || eps >= 1) throw Error(ErrorKind::Domain, "epsilon must lie in (0,1)");
  Layout layout(basis, limits.max_support);
  std::optional<Scalar> best_seen;
  for (std::size_t start = first;; ++start) {
    switch (layout.run(start, n)) {
      case Build::OutOfBasis:
        throw Error(ErrorKind::InsufficientBasis, "basis of " + std::to_string(basis.size()) +
                                                      " vectors is too short for an (" + std::to_string(n) +
                                                      ", " + to_exact_string(eps) + ") average");
      case Build::OverBudget: {
        std::string seen = best_seen ? to_exact_string(*best_seen) : std::string("none");
        throw Error(ErrorKind::EpsilonTooSmallForBudget,
                    "no (" + std::to_string(n) + ", " + to_exact_string(eps) + ") average (" + std::to_string(k) +
                        ") within support " + std::to_string(limits.max_support) +
                        "; least subfamily sum reached: " + seen);
      }
      case Build::Ok:
        break;
    }
    Scalar realized = pow2(n) * max_subfamily(basis, layout.coeffs(), n, k).sum;
    if (!best_seen || realized < *best_seen) best_seen = realized;
    if (realized < eps) {
      Average out = certify(basis, layout.coeffs(), n, k, limits);
      out.certificate.epsilon = eps;
      return out;
    }
  }
}

Average realized_average(const BlockBasis& basis, int n, Pos k, std::size_t start, const engine::Limits& limits) {
  check_request(basis, n, k, start);
  Layout layout(basis, limits.max_support);
  switch (layout.run(start, n)) {
    case Build::OutOfBasis:
      throw Error(ErrorKind::InsufficientBasis, "basis too short for a repeated average from " + std::to_string(start));
    case Build::OverBudget:
      throw Error(ErrorKind::BudgetExceeded, "repeated average from " + std::to_string(start) + " exceeds support " +
                                                 std::to_string(limits.max_support));
    case Build::Ok:
      break;
  }
  Average out = certify(basis, layout.coeffs(), n, k, limits);
  out.certificate.epsilon = out.certificate.max_subfamily_sum;
  return out;
}

Average best_realized_average(const BlockBasis& basis, int n, Pos k, std::size_t first, std::size_t max_support,
                              const engine::Limits& limits) {
  check_request(basis, n, k, first);
  Layout layout(basis, std::min(max_support, limits.max_support));
  std::optional<std::size_t> best_start;
  Scalar best;
  for (std::size_t start = first;; ++start) {
    if (layout.run(start, n) != Build::Ok) break;
    Scalar realized = max_subfamily(basis, layout.coeffs(), n, k).sum;
    if (!best_start || realized < best) {
      best = realized;
      best_start = start;
    }
  }
  if (!best_start) {
    throw Error(ErrorKind::BudgetExceeded, "no repeated average of order " + std::to_string(n) + " fits in support " +
                                               std::to_string(max_support));
  }
  return realized_average(basis, n, k, *best_start, limits);
}

AverageCheck check_average(const BlockBasis& basis, const FinVec& z, const AverageCertificate& cert,
                           const engine::Limits& limits) {
  AverageCheck r;
  Scalar sum = 0;
  bool positive = true;
  std::vector<Pos> mins;
  for (const auto& [i, a] : cert.coeffs) {
    sum += a;
    positive = positive && a > 0;
    if (i < 1 || i > basis.size() || !cert.index_set.contains(static_cast<Pos>(i))) {
      return r;
    }
    mins.push_back(basis.at(i).min_support());
  }
  if (cert.coeffs.size() != cert.index_set.size()) return r;
  r.sum_exact = positive && sum == pow2(cert.n);
  r.admissible = schreier::is_member(std::span<const Pos>(mins), cert.n);
  r.subfamily_sum = max_subfamily(basis, cert.coeffs, cert.n, cert.k).sum;
  r.subfamily_small = r.subfamily_sum < cert.epsilon;
  r.vector_matches = combine(basis, cert.coeffs) == z;
  r.norm = engine::tsirelson(z, limits).value;
  r.norm_at_least_one = r.norm >= 1;
  return r;
}

namespace {

// Support used by parts `from`..n at their earliest starts after `first`,
// or nullopt when they do not fit in `budget`.
std::optional<std::size_t> earliest_completion(const BlockBasis& basis, int from, int n, std::size_t first,
                                               std::size_t budget) {
  std::size_t used = 0;
  for (int i = from; i <= n; ++i) {
    if (used > budget) return std::nullopt;
    Layout part(basis, budget - used);
    if (part.run(first, i) != Build::Ok) return std::nullopt;
    for (const auto& [idx, a] : part.coeffs()) used += basis.at(idx).size();
    first = part.coeffs().rbegin()->first + 1;
  }
  return used;
}

// Relaxed part i: the start with the least realized subfamily sum among
// those that leave room for the remaining parts.
Average relaxed_part(const BlockBasis& basis, int i, int n, std::size_t first, std::size_t budget,
                     const engine::Limits& limits) {
  std::optional<std::size_t> best_start;
  Scalar best;
  for (std::size_t start = first;; ++start) {
    Layout layout(basis, budget);
    if (layout.run(start, i) != Build::Ok) break;
    std::size_t used = 0;
    for (const auto& [idx, a] : layout.coeffs()) used += basis.at(idx).size();
    if (!earliest_completion(basis, i + 1, n, layout.coeffs().rbegin()->first + 1, budget - used)) continue;
    Scalar realized = max_subfamily(basis, layout.coeffs(), i, 3).sum;
    if (!best_start || realized < best) {
      best = realized;
      best_start = start;
    }
  }
  if (!best_start) {
    throw Error(ErrorKind::BudgetExceeded, "no relaxed stabilized vector of order " + std::to_string(n) +
                                               " fits in support " + std::to_string(budget));
  }
  return realized_average(basis, i, 3, *best_start, limits);
}

}  // namespace

Stabilized stabilize(const BlockBasis& basis, int n, const Scalar& eps, const engine::Limits& limits, bool relaxed) {
  if (n < 1) throw Error(ErrorKind::Domain, "stabilization order must be >= 1");
  Stabilized out;
  out.relaxed = relaxed;
  std::size_t first = static_cast<std::size_t>(n);
  std::size_t used = 0;
  for (int i = 1; i <= n; ++i) {
    engine::Limits share = limits;
    share.max_support = limits.max_support - used;
    Average part = relaxed ? relaxed_part(basis, i, n, first, share.max_support, limits)
                           : n_eps_average(basis, i, eps, 3, first, share);
    used += part.z.size();
    first = static_cast<std::size_t>(part.certificate.index_set.max()) + 1;
    out.z += part.z;
    out.parts.push_back(std::move(part));
  }
  out.z *= Scalar(1, n);
  out.norm = engine::tsirelson(out.z, limits).value;
  return out;
}

FinVec stabilized_vector(const BlockBasis& basis, int n, const Scalar& eps, const engine::Limits& limits) {
  return stabilize(basis, n, eps, limits).z;
}

FinVec l1_average(const BlockBasis& basis, int n, std::size_t start) {
  if (n < 0) throw Error(ErrorKind::Domain, "negative order");
  if (start < 1 || start > basis.size()) throw Error(ErrorKind::InsufficientBasis, "start index outside the basis");
  basis.validate();
  std::vector<Pos> mins = basis.mins();
  std::span<const Pos> tail(mins.data() + (start - 1), mins.size() - (start - 1));
  auto prefix = schreier::maximal_member_prefix(tail, n);
  if (!prefix.complete) {
    throw Error(ErrorKind::InsufficientBasis, "basis ends before the maximal S_" + std::to_string(n) + " family");
  }
  Scalar alpha = pow2(n) / Scalar(static_cast<long>(prefix.count));
  FinVec z;
  for (std::size_t i = 0; i < prefix.count; ++i) z += alpha * basis.at(start + i);
  return z;
}

}  // namespace tsirelson::construct
