#include "tsirelson/lab.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "tsirelson/errors.hpp"

namespace tsirelson::lab {

BaseNorm engine_base(const NormDef& def) {
  auto shared = std::make_shared<const NormDef>(def);
  BaseNorm b;
  b.name = def.name;
  b.eval = [shared](const FinVec& x) { return engine::eval(x, *shared).value; };
  b.declared_unconditional = true;
  b.definition = shared;
  return b;
}

BaseNorm tsirelson_base() { return engine_base(defs::tsirelson()); }

BaseNorm sup_base() { return {"sup", [](const FinVec& x) { return x.sup_norm(); }, true, nullptr}; }

namespace {

// Exhaustive sup of sum base(E_i x) over j-admissible successive sets of
// arbitrary shape; needed when the base may not be unconditional.
Scalar exhaustive_admissible_sum(const FinVec& x, int j, const BaseNorm& base) {
  std::vector<Pos> pos = x.support();
  const std::size_t n = pos.size();
  std::map<std::uint32_t, Scalar> piece;
  auto value_of = [&](std::uint32_t mask) -> const Scalar& {
    auto it = piece.find(mask);
    if (it != piece.end()) return it->second;
    std::vector<Pos> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) members.push_back(pos[i]);
    }
    return piece.emplace(mask, base(x.restrict(members))).first->second;
  };
  Scalar best = 0;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t s = full; s != 0; s = (s - 1) & full) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1) idx.push_back(i);
    }
    for (std::uint32_t cuts = 0; cuts < (std::uint32_t{1} << (idx.size() - 1)); ++cuts) {
      std::vector<std::uint32_t> parts{0};
      std::vector<Pos> mins{pos[idx[0]]};
      for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t > 0 && (cuts >> (t - 1) & 1)) {
          parts.push_back(0);
          mins.push_back(pos[idx[t]]);
        }
        parts.back() |= std::uint32_t{1} << idx[t];
      }
      if (!schreier::is_member(std::span<const Pos>(mins), j)) continue;
      Scalar sum = 0;
      for (auto p : parts) sum += value_of(p);
      if (sum > best) best = sum;
    }
  }
  return best;
}

engine::IntervalLeaf leaf_for(const FinVec& x, const BaseNorm& base, const engine::Limits& limits) {
  if (base.definition) return engine::IntervalLeaf::from_def(x, *base.definition, limits);
  if (x.size() > limits.max_support) {
    throw Error(ErrorKind::SupportTooLarge, "support " + std::to_string(x.size()) + " exceeds bound " +
                                                std::to_string(limits.max_support));
  }
  return engine::IntervalLeaf::from_norm(x, base.eval);
}

Scalar ratio_of(const std::vector<FinVec>& family, const BaseNorm& base) {
  FinVec sum;
  Scalar parts = 0;
  for (const auto& v : family) {
    sum += v;
    parts += base(v);
  }
  return base(sum) / parts;
}

}  // namespace

Scalar norm_j(const FinVec& x, int j, const BaseNorm& base, const engine::Limits& limits) {
  if (j < 0) throw Error(ErrorKind::Domain, "negative admissibility level");
  if (x.empty()) return 0;
  Scalar sum;
  if (!base.declared_unconditional) {
    if (x.size() > 10) {
      throw Error(ErrorKind::UnverifiedUnconditionality,
                  base.name + " is not declared unconditional and the support exceeds 10");
    }
    sum = exhaustive_admissible_sum(x, j, base);
  } else {
    sum = engine::best_admissible_sum(leaf_for(x, base, limits), j).value;
  }
  return sum / pow2(j);
}

Scalar norm_avg(const FinVec& x, int n, const BaseNorm& base, const engine::Limits& limits) {
  if (n < 1) throw Error(ErrorKind::Domain, "average needs n >= 1");
  Scalar sum = 0;
  for (int j = 0; j < n; ++j) sum += norm_j(x, j, base, limits);
  return sum / n;
}

Scalar norm_tr(const FinVec& x, const BaseNorm& base, const engine::Limits& limits) {
  return engine::eval(x, defs::tree_over(base), limits).value;
}

DeltaEstimate delta_n_estimate(const construct::BlockBasis& basis, const BaseNorm& base, int n,
                               const SearchBudget& budget) {
  if (n < 1) throw Error(ErrorKind::Domain, "delta_n needs n >= 1");
  basis.validate();
  const std::vector<Pos> mins = basis.mins();
  DeltaEstimate out;
  std::optional<Scalar> best;

  auto consider = [&](const std::vector<FinVec>& family, std::size_t cap) {
    if (family.empty()) return;
    std::vector<Pos> family_mins;
    std::size_t support = 0;
    for (const auto& v : family) {
      family_mins.push_back(v.min_support());
      support += v.size();
    }
    if (support > cap || !schreier::is_member(std::span<const Pos>(family_mins), n)) return;
    Scalar r = ratio_of(family, base);
    out.evaluated.push_back(r);
    if (!best || r < *best) {
      best = r;
      out.witness = family;
    }
  };

  const std::size_t last_start = std::min(budget.max_start, basis.size());
  // Maximal runs of basis vectors; only the support budget limits them.
  for (std::size_t s = 1; s <= last_start; ++s) {
    std::span<const Pos> tail(mins.data() + (s - 1), mins.size() - (s - 1));
    std::size_t count = schreier::longest_member_prefix(tail, n);
    std::size_t support = 0;
    for (std::size_t i = 0; i < count; ++i) support += basis.at(s + i).size();
    if (support > budget.max_support) break;
    std::vector<FinVec> family;
    for (std::size_t i = 0; i < count; ++i) family.push_back(basis.at(s + i));
    consider(family, budget.max_support);
  }
  // Runs of equal-length blocks of consecutive basis vectors.
  for (std::size_t len : {2u, 4u}) {
    for (std::size_t s = 1; s <= last_start; ++s) {
      std::vector<FinVec> family;
      for (std::size_t b = 0; b < budget.max_family; ++b) {
        std::size_t first = s + b * len;
        if (first + len - 1 > basis.size()) break;
        FinVec block;
        for (std::size_t t = 0; t < len; ++t) block += basis.at(first + t);
        family.push_back(block);
        std::vector<Pos> fm;
        for (const auto& v : family) fm.push_back(v.min_support());
        if (!schreier::is_member(std::span<const Pos>(fm), n)) {
          family.pop_back();
          break;
        }
      }
      consider(family, budget.max_block_support);
    }
  }
  // Successive l1 averages of order 1.
  for (std::size_t s = 2; s <= last_start; ++s) {
    std::vector<FinVec> family;
    std::size_t start = s;
    std::size_t support = 0;
    while (family.size() < budget.max_family && start <= basis.size()) {
      FinVec avg;
      try {
        avg = construct::l1_average(basis, 1, start);
      } catch (const Error&) {
        break;
      }
      support += avg.size();
      if (support > budget.max_block_support) break;
      family.push_back(avg);
      std::vector<Pos> fm;
      for (const auto& v : family) fm.push_back(v.min_support());
      if (!schreier::is_member(std::span<const Pos>(fm), n)) {
        family.pop_back();
        break;
      }
      // next index after this average's last vector
      Pos last = avg.max_support();
      std::size_t next = start;
      while (next <= basis.size() && basis.at(next).min_support() <= last) ++next;
      start = next;
    }
    if (family.size() >= 2) consider(family, budget.max_block_support);
  }
  if (!best) throw Error(ErrorKind::BudgetExceeded, "no admissible family fits the search budget");
  out.value = *best;
  return out;
}

StabilityReport stabilization_experiment(int n, const Scalar& eps, const construct::BlockBasis& basis,
                                         const engine::Limits& limits, bool relaxed, bool allow_large) {
  if (n >= 4 && !allow_large) {
    throw Error(ErrorKind::BudgetExceeded, "stabilization at n >= 4 needs an explicit override");
  }
  construct::Stabilized s = construct::stabilize(basis, n, eps, limits, relaxed);
  StabilityReport r;
  r.n = n;
  r.epsilon = eps;
  r.relaxed = relaxed;
  r.norm_of_z = s.norm;
  r.z = s.z;
  for (const auto& p : s.parts) r.part_epsilons.push_back(p.certificate.epsilon);
  std::optional<Scalar> lo, hi;
  for (int j = 0; j <= n; ++j) {
    Scalar v = engine::seminorm_jn(s.z, j, n, limits).value;
    if (!lo || v < *lo) lo = v;
    if (!hi || v > *hi) hi = v;
    r.values[j] = v;
  }
  if (*lo == 0) throw Error(ErrorKind::Domain, "stabilized vector has a zero seminorm");
  r.d = *lo;
  r.ratio = *hi / *lo;
  return r;
}

Scalar interval_sum_norm(const FinVec& z, const NormDef& def, std::size_t k, const engine::Limits& limits) {
  return engine::best_bounded_sum(engine::IntervalLeaf::from_def(z, def, limits), k).value;
}

DistortionReport theta_distortion_experiment(const Scalar& theta, int n, const SearchBudget& budget) {
  if (theta <= 0 || theta >= 1) throw Error(ErrorKind::Domain, "theta must lie in (0,1)");
  if (n < 1) throw Error(ErrorKind::Domain, "n must be >= 1");
  const NormDef X = defs::implicit(n, pow(theta, n));
  engine::Limits limits;
  limits.max_support = budget.max_support;
  auto basis = construct::BlockBasis::unit(4 * budget.max_support);
  DistortionReport out;
  std::optional<Scalar> high, low;

  auto evaluate = [&](const FinVec& v) -> Scalar {
    ++out.evaluated;
    return interval_sum_norm(v, X, budget.max_intervals, limits) / engine::eval(v, X, limits).value;
  };

  // One long average.
  for (std::size_t m = 2; m <= budget.max_average; ++m) {
    FinVec x;
    try {
      x = construct::l1_average(basis, n, m);
    } catch (const Error&) {
      break;
    }
    if (x.size() > budget.max_support) break;
    Scalar r = evaluate(x);
    if (!low || r < *low) {
      low = r;
      out.witness_low = x;
    }
  }
  // Stacked short averages: max_intervals successive blocks of length len
  // with coefficients 2/len.
  for (std::size_t len = 2; len <= 4; ++len) {
    for (std::size_t p = 2; p <= budget.max_start; ++p) {
      FinVec w;
      for (std::size_t b = 0; b < budget.max_intervals; ++b) {
        Pos first = static_cast<Pos>(p + b * len);
        w += FinVec::constant(first, first + static_cast<Pos>(len) - 1, Scalar(2, static_cast<long>(len)));
      }
      if (w.size() > budget.max_support) continue;
      Scalar r = evaluate(w);
      if (!high || r > *high) {
        high = r;
        out.witness_high = w;
      }
    }
  }
  if (!high || !low) throw Error(ErrorKind::BudgetExceeded, "distortion search found no admissible witness");
  out.ratio_high = *high;
  out.ratio_low = *low;
  return out;
}

std::vector<MixedRatio> mixed_weight_experiment(const std::function<Scalar(int)>& coefficient,
                                                const SearchBudget& budget) {
  const NormDef mixed = defs::mixed(coefficient, Scalar(1, 2));
  engine::Limits limits;
  limits.max_support = budget.max_support;
  auto basis = construct::BlockBasis::unit(4 * budget.max_support);
  // Orders of the successive l1 averages x_i, each started right after the
  // previous one; x is their plain average.
  const std::vector<std::vector<int>> recipes{{1}, {2}, {1, 1}, {1, 2}, {2, 1}, {1, 1, 2}, {1, 2, 1}, {2, 2}};
  std::vector<MixedRatio> out;
  for (std::size_t first : {2u, 3u, 4u}) {
    for (const auto& orders : recipes) {
      FinVec x;
      std::size_t start = first;
      bool fits = true;
      std::string label = "start " + std::to_string(first) + " orders";
      for (int m : orders) {
        FinVec xi;
        try {
          xi = construct::l1_average(basis, m, start);
        } catch (const Error&) {
          fits = false;
          break;
        }
        x += xi;
        start = static_cast<std::size_t>(xi.max_support()) + 1;
        label += " " + std::to_string(m);
      }
      if (!fits || x.size() > budget.max_support) continue;
      x *= Scalar(1, static_cast<long>(orders.size()));
      MixedRatio r;
      r.label = label;
      r.x = x;
      r.mixed = engine::eval(x, mixed, limits).value;
      r.tsirelson = engine::tsirelson(x, limits).value;
      r.ratio = r.mixed / r.tsirelson;
      if (r.ratio > 1) throw Error(ErrorKind::Domain, "mixed norm exceeds the Tsirelson norm on " + label);
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace tsirelson::lab
