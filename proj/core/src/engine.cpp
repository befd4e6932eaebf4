#include "tsirelson/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "tsirelson/errors.hpp"

namespace tsirelson::engine {
namespace {

using Interval = std::pair<std::size_t, std::size_t>;

// Values on intervals [a, b] of support indices, a <= b.
class Triangle {
 public:
  Triangle() = default;
  explicit Triangle(std::size_t n) : n_(n), data_(n * n) {}
  Scalar& operator()(std::size_t a, std::size_t b) { return data_[a * n_ + b]; }
  const Scalar& operator()(std::size_t a, std::size_t b) const { return data_[a * n_ + b]; }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

// For a fixed left end a, maintains the best sums over partitions of [a, b]
// into consecutive parts drawn from `table`, as b grows. Parts are limited
// to `cap` (the admissibility bound min E_1 >= number of parts). Values
// are nonnegative; -1 marks "no partition".
class PartitionSweep {
 public:
  PartitionSweep(std::size_t a, std::uint64_t cap, std::size_t n) : a_(a), cap_(cap) {
    unbounded_ = cap_ >= n - a;
    std::size_t levels = unbounded_ ? 1 : (cap_ >= 2 ? static_cast<std::size_t>(cap_ - 1) : 1);
    best_.assign(levels, std::vector<Scalar>(n - a));
  }

  // Best over 2..cap parts covering [a, b].
  void split(std::size_t b, const Triangle& table, Scalar& out) {
    if (b == a_ || cap_ < 2) {
      out = -1;
      return;
    }
    inner(best_.back(), b, table, out);
  }

  // Records table(a, b) (the single-part value) once it is known.
  void commit(std::size_t b, const Scalar& whole, const Scalar& split_value, const Triangle& table) {
    const std::size_t i = b - a_;
    if (unbounded_) {
      best_[0][i] = std::max(whole, split_value);
      return;
    }
    best_[0][i] = whole;
    for (std::size_t c = 1; c < best_.size(); ++c) {
      inner(best_[c - 1], b, table, tmp_out_);
      best_[c][i] = std::max(whole, tmp_out_);
    }
  }

 private:
  void inner(const std::vector<Scalar>& prev, std::size_t b, const Triangle& table, Scalar& out) {
    out = -1;
    for (std::size_t m = a_ + 1; m <= b; ++m) {
      const Scalar& head = prev[m - 1 - a_];
      if (head < 0) continue;
      tmp_ = head + table(m, b);
      if (tmp_ > out) out = tmp_;
    }
  }

  std::size_t a_;
  std::uint64_t cap_;
  bool unbounded_ = false;
  std::vector<std::vector<Scalar>> best_;  // best_[c][b-a]: 1..c+1 parts
  Scalar tmp_, tmp_out_;
};

// Parts of a best partition of [a, b] into 2..cap parts of `table` whose
// sum equals `target`; fewest parts first, then the earliest split for the
// last part.
std::vector<Interval> partition_achieving(std::size_t a, std::size_t b, std::uint64_t cap, const Triangle& table,
                                          const Scalar& target) {
  const std::size_t len = b - a + 1;
  const std::size_t max_parts = static_cast<std::size_t>(std::min<std::uint64_t>(cap, len));
  // exact[c][x - a]: best with exactly c parts covering [a, x]
  std::vector<std::vector<Scalar>> exact(max_parts + 1, std::vector<Scalar>(len, Scalar(-1)));
  for (std::size_t x = a; x <= b; ++x) exact[1][x - a] = table(a, x);
  Scalar tmp;
  for (std::size_t c = 2; c <= max_parts; ++c) {
    for (std::size_t x = a + c - 1; x <= b; ++x) {
      Scalar& cell = exact[c][x - a];
      for (std::size_t m = a + c - 1; m <= x; ++m) {
        const Scalar& head = exact[c - 1][m - 1 - a];
        if (head < 0) continue;
        tmp = head + table(m, x);
        if (tmp > cell) cell = tmp;
      }
    }
    if (exact[c][len - 1] == target) {
      std::vector<Interval> parts;
      std::size_t right = b;
      for (std::size_t k = c; k >= 2; --k) {
        bool found = false;
        for (std::size_t m = a + k - 1; m <= right && !found; ++m) {
          const Scalar& head = exact[k - 1][m - 1 - a];
          if (head < 0) continue;
          if (head + table(m, right) == exact[k][right - a]) {
            parts.emplace_back(m, right);
            right = m - 1;
            found = true;
          }
        }
        if (!found) throw Error(ErrorKind::Domain, "internal: partition backtrack failed");
      }
      parts.emplace_back(a, right);
      std::reverse(parts.begin(), parts.end());
      return parts;
    }
  }
  throw Error(ErrorKind::Domain, "internal: no partition attains the recorded value");
}

std::uint64_t part_cap(Pos admissible_min) { return static_cast<std::uint64_t>(admissible_min); }

class Evaluator {
 public:
  Evaluator(const FinVec& x, NormDef def, const Limits& limits) : x_(x), def_(std::move(def)) {
    def_.validate();
    if (x.size() > limits.max_support) {
      throw Error(ErrorKind::SupportTooLarge, "support " + std::to_string(x.size()) + " exceeds bound " +
                                                  std::to_string(limits.max_support));
    }
    for (const auto& [p, v] : x.entries()) {
      pos_.push_back(p);
      adm_.push_back(p * def_.scale);
      mag_.push_back(tsirelson::abs(v));
    }
    n_ = pos_.size();
    sup_ = Triangle(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a; b < n_; ++b) sup_(a, b) = b == a ? mag_[a] : std::max(sup_(a, b - 1), mag_[b]);
    }
    if (n_ == 0) return;
    if (def_.is_tree()) {
      const auto& base = def_.tree().leaf;
      if (base && base->definition) leaf_table_ = IntervalLeaf::from_def(x_, *base->definition, limits);
      run_tree();
    } else {
      run_implicit();
    }
  }

  std::size_t size() const { return n_; }
  const std::vector<Pos>& support() const { return pos_; }

  // Norm of x restricted to support[a..b].
  Scalar interval_value(std::size_t a, std::size_t b) const {
    if (def_.is_tree()) {
      const Scalar& v = f_[0](a, b);
      return def_.tree().sup_floor ? std::max(v, sup_(a, b)) : v;
    }
    return v_(a, b);
  }

  Scalar value() const { return n_ == 0 ? Scalar(0) : interval_value(0, n_ - 1); }

  Certificate certificate() const {
    Certificate cert;
    if (n_ == 0) return cert;
    if (def_.is_tree()) {
      const auto& t = def_.tree();
      if (t.sup_floor && sup_(0, n_ - 1) >= f_[0](0, n_ - 1)) {
        std::size_t arg = 0;
        for (std::size_t i = 0; i < n_; ++i) {
          if (mag_[i] == sup_(0, n_ - 1)) {
            arg = i;
            break;
          }
        }
        CertNode root;
        root.set = FinSet{pos_[arg]};
        root.level = 0;
        root.leaf_value = mag_[arg];
        cert.root = std::move(root);
        cert.sup_floor = true;
        return cert;
      }
      cert.root = build_tree(0, 0, n_ - 1, 0);
      return cert;
    }
    cert.root = build_implicit(0, n_ - 1, 0);
    cert.sup_floor = cert.root->terminal();
    return cert;
  }

 private:
  Scalar leaf(std::size_t a, std::size_t b) const {
    const auto& t = def_.tree();
    if (!t.leaf) return sup_(a, b);
    if (leaf_table_) return (*leaf_table_)(a, b);
    return t.leaf->eval(x_.restrict_range(pos_[a], pos_[b]));
  }

  FinSet positions(std::size_t a, std::size_t b) const {
    return FinSet(std::vector<Pos>(pos_.begin() + static_cast<std::ptrdiff_t>(a),
                                   pos_.begin() + static_cast<std::ptrdiff_t>(b) + 1));
  }

  static FinSet union_of(const std::vector<CertNode>& children) {
    std::vector<Pos> all;
    for (const auto& c : children) all.insert(all.end(), c.set.elements().begin(), c.set.elements().end());
    return FinSet(std::move(all));
  }

  // ---- tree norms -------------------------------------------------------
  //
  // State s stands for the current level: levels below j are their own
  // states, levels >= j are folded modulo n. f_[s](a, b) is the best
  // subtree value of a node at that state, relative to its own weight.

  void run_tree() {
    const auto& t = def_.tree();
    int j = 0, period = 1;
    if (const auto* r = std::get_if<LevelTree::Residue>(&t.terminal)) {
      j = r->j;
      period = r->n;
    }
    states_ = j + period;
    next_.resize(states_);
    terminal_.resize(states_);
    for (int s = 0; s < states_; ++s) {
      next_[s] = s + 1 < states_ ? s + 1 : j;
      terminal_[s] = s == j;
    }
    if (std::holds_alternative<LevelTree::AllLevels>(t.terminal)) terminal_[0] = true;
    ratio_ = t.ratio;

    f_.assign(states_, Triangle(n_));
    std::vector<Scalar> g(states_), splits(states_);
    Scalar tmp;
    for (std::size_t a = n_; a-- > 0;) {
      std::vector<PartitionSweep> sweeps;
      sweeps.reserve(states_);
      for (int s = 0; s < states_; ++s) sweeps.emplace_back(a, part_cap(adm_[a]), n_);
      for (std::size_t b = a; b < n_; ++b) {
        for (int s = 0; s < states_; ++s) sweeps[s].split(b, f_[s], splits[s]);
        for (int s = 0; s < states_; ++s) {
          g[s] = -1;
          if (terminal_[s]) g[s] = leaf(a, b);
          if (a < b && f_[s](a + 1, b) > g[s]) g[s] = f_[s](a + 1, b);
          const Scalar& e = splits[next_[s]];
          if (e >= 0) {
            tmp = ratio_ * e;
            if (tmp > g[s]) g[s] = tmp;
          }
        }
        // Single-child chains move one level down without splitting.
        for (int pass = 0; pass < states_; ++pass) {
          for (int s = 0; s < states_; ++s) {
            if (g[next_[s]] < 0) continue;
            tmp = ratio_ * g[next_[s]];
            if (tmp > g[s]) g[s] = tmp;
          }
        }
        for (int s = 0; s < states_; ++s) f_[s](a, b) = g[s];
        for (int s = 0; s < states_; ++s) sweeps[s].commit(b, f_[s](a, b), splits[s], f_[s]);
      }
    }
  }

  CertNode build_tree(int s, std::size_t a, std::size_t b, int level) const {
    const Scalar& target = f_[s](a, b);
    if (terminal_[s]) {
      Scalar lv = leaf(a, b);
      if (lv == target) {
        CertNode node;
        node.set = positions(a, b);
        node.level = level;
        node.leaf_value = lv;
        return node;
      }
    }
    if (a < b && f_[s](a + 1, b) == target) return build_tree(s, a + 1, b, level);
    const int t = next_[s];
    const std::uint64_t cap = part_cap(adm_[a]);
    if (a < b && cap >= 2) {
      auto parts_value = best_split_value(a, b, cap, f_[t]);
      if (parts_value >= 0 && ratio_ * parts_value == target) {
        CertNode node;
        node.level = level;
        node.rule = 1;
        for (const auto& [l, r] : partition_achieving(a, b, cap, f_[t], parts_value)) {
          node.children.push_back(build_tree(t, l, r, level + 1));
        }
        node.set = union_of(node.children);
        return node;
      }
    }
    if (ratio_ * f_[t](a, b) == target) {
      CertNode node;
      node.level = level;
      node.rule = 1;
      node.children.push_back(build_tree(t, a, b, level + 1));
      node.set = node.children.front().set;
      return node;
    }
    throw Error(ErrorKind::Domain, "internal: tree reconstruction failed");
  }

  // Best sum over 2..cap parts of [a, b] from `table`, recomputed.
  Scalar best_split_value(std::size_t a, std::size_t b, std::uint64_t cap, const Triangle& table) const {
    const std::size_t len = b - a + 1;
    const std::size_t max_parts = static_cast<std::size_t>(std::min<std::uint64_t>(cap, len));
    if (max_parts < 2) return -1;
    // atmost[x - a]: best with 1..c parts covering [a, x]
    std::vector<Scalar> atmost(len), grown(len);
    for (std::size_t x = a; x <= b; ++x) atmost[x - a] = table(a, x);
    Scalar best(-1), tmp;
    for (std::size_t c = 2; c <= max_parts; ++c) {
      for (std::size_t x = a; x <= b; ++x) {
        grown[x - a] = -1;
        for (std::size_t m = a + 1; m <= x; ++m) {
          tmp = atmost[m - 1 - a] + table(m, x);
          if (tmp > grown[x - a]) grown[x - a] = tmp;
        }
      }
      if (grown[len - 1] > best) best = grown[len - 1];
      for (std::size_t x = a; x <= b; ++x) atmost[x - a] = std::max(atmost[x - a], grown[x - a]);
    }
    return best;
  }

  // ---- implicit norms ---------------------------------------------------
  //
  // v_(a, b) is the norm of x on support[a..b]. adm_sum_[k](a, b) is the best
  // k-admissible sum of v over partitions of [a, b] whose first part starts
  // at a (one part allowed); adm_sum_[0] = v_.

  struct EffectiveRule {
    Scalar weight;
    int original_level;
  };

  void run_implicit() {
    // Past the least level at which every singleton split is admissible the
    // admissible sums stop changing, so rules beyond it fold onto it.
    std::vector<Pos> tail;
    for (Pos p : adm_) {
      if (p != 1) tail.push_back(p);
    }
    const int saturation = std::max(1, schreier::min_level(tail));
    std::map<int, EffectiveRule> folded;
    auto offer = [&](int level, const Scalar& w) {
      int at = std::min(level, saturation);
      auto it = folded.find(at);
      if (it == folded.end() || w > it->second.weight) folded[at] = {w, level};
    };
    const auto& imp = def_.implicit();
    for (const auto& r : imp.rules) offer(r.level, r.weight);
    if (imp.generator) {
      std::optional<Scalar> tail_best;
      for (int k = 1;; ++k) {
        Scalar w = *def_.implicit_weight(k);
        if (k < saturation) {
          offer(k, w);
          continue;
        }
        offer(k, w);
        if (!tail_best || w > *tail_best) tail_best = w;
        // Every later weight is at most theta^k.
        if (pow(imp.generator->theta, k) <= *tail_best) break;
      }
    }
    max_level_ = folded.rbegin()->first;
    rule_at_.assign(max_level_ + 1, std::nullopt);
    for (const auto& [lvl, r] : folded) rule_at_[lvl] = r;

    v_ = Triangle(n_);
    adm_sum_.assign(max_level_, Triangle(n_));  // index 0 unused (aliases v_)
    std::vector<Scalar> q(max_level_ + 1);
    Scalar tmp, running;
    for (std::size_t a = n_; a-- > 0;) {
      std::vector<PartitionSweep> sweeps;
      sweeps.reserve(max_level_ + 1);
      for (int k = 0; k <= max_level_; ++k) sweeps.emplace_back(a, part_cap(adm_[a]), n_);
      for (std::size_t b = a; b < n_; ++b) {
        for (int k = 1; k <= max_level_; ++k) sweeps[k].split(b, sums(k - 1), q[k]);
        Scalar v = sup_(a, b);
        if (a < b && v_(a + 1, b) > v) v = v_(a + 1, b);
        running = -1;
        for (int k = 1; k <= max_level_; ++k) {
          if (q[k] > running) running = q[k];
          if (rule_at_[k] && running >= 0) {
            tmp = rule_at_[k]->weight * running;
            if (tmp > v) v = tmp;
          }
        }
        v_(a, b) = v;
        running = -1;
        for (int k = 1; k < max_level_; ++k) {
          if (q[k] > running) running = q[k];
          adm_sum_[k](a, b) = std::max(v, running);
        }
        for (int k = 1; k <= max_level_; ++k) sweeps[k].commit(b, sums(k - 1)(a, b), q[k], sums(k - 1));
      }
    }
  }

  const Triangle& sums(int k) const { return k == 0 ? v_ : adm_sum_[k]; }

  // Best >= 2-part k-admissible sum over [a, b] (max over levels <= k).
  std::pair<Scalar, int> multi_part(std::size_t a, std::size_t b, int k) const {
    std::pair<Scalar, int> best{Scalar(-1), 0};
    const std::uint64_t cap = part_cap(adm_[a]);
    for (int level = 1; level <= k; ++level) {
      Scalar s = best_split_value(a, b, cap, sums(level - 1));
      if (s > best.first) best = {s, level};
    }
    return best;
  }

  // Flattens a k-admissible sum over [a, b] into its v-pieces.
  void expand(int k, std::size_t a, std::size_t b, std::vector<Interval>& out) const {
    if (k == 0 || sums(k)(a, b) == v_(a, b)) {
      out.emplace_back(a, b);
      return;
    }
    auto [value, level] = multi_part(a, b, k);
    for (const auto& [l, r] : partition_achieving(a, b, part_cap(adm_[a]), sums(level - 1), value)) {
      expand(level - 1, l, r, out);
    }
  }

  CertNode build_implicit(std::size_t a, std::size_t b, int level) const {
    const Scalar& target = v_(a, b);
    if (sup_(a, b) == target) {
      CertNode node;
      node.set = positions(a, b);
      node.level = level;
      node.leaf_value = sup_(a, b);
      return node;
    }
    if (a < b && v_(a + 1, b) == target) return build_implicit(a + 1, b, level);
    for (int k = 1; k <= max_level_; ++k) {
      if (!rule_at_[k]) continue;
      auto [value, at_level] = multi_part(a, b, k);
      if (value < 0 || rule_at_[k]->weight * value != target) continue;
      std::vector<Interval> pieces;
      for (const auto& [l, r] : partition_achieving(a, b, part_cap(adm_[a]), sums(at_level - 1), value)) {
        expand(at_level - 1, l, r, pieces);
      }
      CertNode node;
      node.level = level;
      node.rule = rule_at_[k]->original_level;
      for (const auto& [l, r] : pieces) node.children.push_back(build_implicit(l, r, level + node.rule));
      node.set = union_of(node.children);
      return node;
    }
    throw Error(ErrorKind::Domain, "internal: implicit reconstruction failed");
  }

  const FinVec& x_;
  NormDef def_;
  std::vector<Pos> pos_, adm_;
  std::vector<Scalar> mag_;
  std::size_t n_ = 0;
  Triangle sup_;
  std::optional<IntervalLeaf> leaf_table_;

  int states_ = 0;
  std::vector<int> next_;
  std::vector<bool> terminal_;
  Scalar ratio_;
  std::vector<Triangle> f_;

  int max_level_ = 0;
  std::vector<std::optional<EffectiveRule>> rule_at_;
  Triangle v_;
  std::vector<Triangle> adm_sum_;
};

}  // namespace

NormResult eval(const FinVec& x, const NormDef& def, const Limits& limits) {
  Evaluator ev(x, def, limits);
  return {ev.value(), ev.certificate()};
}

NormResult tsirelson(const FinVec& x, const Limits& limits) { return eval(x, defs::tsirelson(), limits); }
NormResult norm_n(const FinVec& x, int n, const Limits& limits) { return eval(x, defs::norm_n(n), limits); }
NormResult norm_jn(const FinVec& x, int j, int n, const Limits& limits) {
  return eval(x, defs::norm_jn(j, n), limits);
}
NormResult seminorm_jn(const FinVec& x, int j, int n, const Limits& limits) {
  return eval(x, defs::seminorm_jn(j, n), limits);
}
NormResult mixed_norm(const FinVec& x, std::function<Scalar(int)> coefficient, const Scalar& theta,
                      const Limits& limits) {
  return eval(x, defs::mixed(std::move(coefficient), theta), limits);
}

Scalar schreier_norm(const FinVec& x, int m) {
  std::map<Pos, Scalar> positive, negative;
  for (const auto& [p, v] : x.entries()) {
    if (v > 0) {
      positive[p] = v;
    } else {
      negative[p] = -v;
    }
  }
  return std::max(schreier::max_weight_subset(positive, m).value, schreier::max_weight_subset(negative, m).value);
}

IntervalLeaf::IntervalLeaf(std::vector<Pos> support, std::function<Scalar(std::size_t, std::size_t)> value)
    : support_(std::move(support)), value_(std::move(value)) {}

IntervalLeaf IntervalLeaf::from_def(const FinVec& x, const NormDef& def, const Limits& limits) {
  // The evaluator keeps a reference to its vector, so both live together.
  struct Owned {
    FinVec x;
    std::optional<Evaluator> ev;
  };
  auto owned = std::make_shared<Owned>();
  owned->x = x;
  owned->ev.emplace(owned->x, def, limits);
  return IntervalLeaf(x.support(), [owned](std::size_t a, std::size_t b) { return owned->ev->interval_value(a, b); });
}

IntervalLeaf IntervalLeaf::from_norm(const FinVec& x, std::function<Scalar(const FinVec&)> norm) {
  auto support = x.support();
  auto memo = std::make_shared<std::map<Interval, Scalar>>();
  auto vec = std::make_shared<FinVec>(x);
  return IntervalLeaf(support, [memo, vec, support, norm = std::move(norm)](std::size_t a, std::size_t b) {
    auto key = Interval{a, b};
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
    Scalar v = norm(vec->restrict_range(support[a], support[b]));
    memo->emplace(key, v);
    return v;
  });
}

namespace {

// Tables for nested admissible sums of a fixed leaf:
// level[k](a, b) = best k-admissible sum over partitions of [a, b] whose
// first part starts at a.
struct NestedSums {
  std::vector<Triangle> level;
};

NestedSums nested_sums(const IntervalLeaf& leaf, int k, const std::vector<Pos>& adm) {
  const std::size_t n = leaf.size();
  NestedSums out;
  out.level.assign(k + 1, Triangle(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) out.level[0](a, b) = leaf(a, b);
  std::vector<Scalar> q(k + 1);
  for (std::size_t a = n; a-- > 0;) {
    std::vector<PartitionSweep> sweeps;
    for (int j = 0; j <= k; ++j) sweeps.emplace_back(a, part_cap(adm[a]), n);
    for (std::size_t b = a; b < n; ++b) {
      for (int j = 1; j <= k; ++j) {
        sweeps[j].split(b, out.level[j - 1], q[j]);
        out.level[j](a, b) = std::max(out.level[j - 1](a, b), q[j]);
        sweeps[j].commit(b, out.level[j - 1](a, b), q[j], out.level[j - 1]);
      }
    }
  }
  return out;
}

}  // namespace

AdmissibleSum best_admissible_sum(const IntervalLeaf& leaf, int k, Pos scale) {
  if (k < 0) throw Error(ErrorKind::Domain, "negative admissibility level");
  if (scale < 1) throw Error(ErrorKind::Domain, "scale must be >= 1");
  const std::size_t n = leaf.size();
  if (n == 0) return {0, SetSequence{}};
  std::vector<Pos> adm;
  for (Pos p : leaf.support()) adm.push_back(p * scale);
  NestedSums sums = nested_sums(leaf, k, adm);

  std::size_t start = 0;
  for (std::size_t s = 1; s < n; ++s) {
    if (sums.level[k](s, n - 1) > sums.level[k](start, n - 1)) start = s;
  }
  std::vector<Interval> pieces;
  std::function<void(int, std::size_t, std::size_t)> expand = [&](int j, std::size_t a, std::size_t b) {
    if (j == 0) {
      pieces.emplace_back(a, b);
      return;
    }
    if (sums.level[j](a, b) == sums.level[j - 1](a, b)) {
      expand(j - 1, a, b);
      return;
    }
    for (const auto& [l, r] : partition_achieving(a, b, part_cap(adm[a]), sums.level[j - 1], sums.level[j](a, b))) {
      expand(j - 1, l, r);
    }
  };
  expand(k, start, n - 1);
  std::vector<FinSet> sets;
  for (const auto& [l, r] : pieces) {
    sets.emplace_back(std::vector<Pos>(leaf.support().begin() + static_cast<std::ptrdiff_t>(l),
                                       leaf.support().begin() + static_cast<std::ptrdiff_t>(r) + 1));
  }
  return {sums.level[k](start, n - 1), SetSequence(std::move(sets))};
}

AdmissibleSum best_admissible_sum(const FinVec& x, int k, const NormDef& leaf_def, Pos scale, const Limits& limits) {
  return best_admissible_sum(IntervalLeaf::from_def(x, leaf_def, limits), k, scale);
}

AdmissibleSum best_bounded_sum(const IntervalLeaf& leaf, std::size_t max_parts) {
  const std::size_t n = leaf.size();
  if (n == 0) return {0, SetSequence{}};
  if (max_parts < 1) throw Error(ErrorKind::Domain, "need at least one part");
  Triangle table(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) table(a, b) = leaf(a, b);
  Scalar whole = table(0, n - 1);
  std::vector<Interval> parts{{0, n - 1}};
  Scalar value = whole;
  if (max_parts >= 2 && n >= 2) {
    // Same recurrence as the admissible splits with a fixed part budget.
    std::vector<Scalar> atmost(n), grown(n);
    for (std::size_t x = 0; x < n; ++x) atmost[x] = table(0, x);
    Scalar best(-1), tmp;
    const std::size_t limit = std::min(max_parts, n);
    for (std::size_t c = 2; c <= limit; ++c) {
      for (std::size_t x = 0; x < n; ++x) {
        grown[x] = -1;
        for (std::size_t m = 1; m <= x; ++m) {
          tmp = atmost[m - 1] + table(m, x);
          if (tmp > grown[x]) grown[x] = tmp;
        }
      }
      if (grown[n - 1] > best) best = grown[n - 1];
      for (std::size_t x = 0; x < n; ++x) atmost[x] = std::max(atmost[x], grown[x]);
    }
    if (best > value) {
      value = best;
      parts = partition_achieving(0, n - 1, limit, table, best);
    }
  }
  std::vector<FinSet> sets;
  for (const auto& [l, r] : parts) {
    sets.emplace_back(std::vector<Pos>(leaf.support().begin() + static_cast<std::ptrdiff_t>(l),
                                       leaf.support().begin() + static_cast<std::ptrdiff_t>(r) + 1));
  }
  return {value, SetSequence(std::move(sets))};
}

}  // namespace tsirelson::engine
