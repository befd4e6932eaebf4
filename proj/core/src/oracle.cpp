#include "tsirelson/oracle.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "tsirelson/errors.hpp"

namespace tsirelson::oracle {
namespace {

using Mask = std::uint32_t;

// Literal recursion: F in S_0 iff |F| <= 1; F in S_n iff F splits into
// l <= min F successive members of S_{n-1}.
class Membership {
 public:
  bool member(const std::vector<Pos>& f, int n) {
    if (f.size() <= 1) return true;
    if (n == 0) return false;
    auto key = std::make_pair(f, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = runs(f, 0, n, f.front());
    memo_.emplace(std::move(key), ok);
    return ok;
  }

  // Least n with f in S_n, or nullopt when none exists below `limit`.
  std::optional<int> least_level(const std::vector<Pos>& f, int limit) {
    for (int n = 0; n <= limit; ++n) {
      if (member(f, n)) return n;
    }
    return std::nullopt;
  }

 private:
  // Can f[from..] be cut into at most `budget` runs, each in S_{n-1}?
  bool runs(const std::vector<Pos>& f, std::size_t from, int n, Pos budget) {
    if (from == f.size()) return true;
    if (budget <= 0) return false;
    for (std::size_t to = from + 1; to <= f.size(); ++to) {
      std::vector<Pos> run(f.begin() + static_cast<std::ptrdiff_t>(from), f.begin() + static_cast<std::ptrdiff_t>(to));
      if (member(run, n - 1) && runs(f, to, n, budget - 1)) return true;
    }
    return false;
  }

  std::map<std::pair<std::vector<Pos>, int>, bool> memo_;
};

class Brute {
 public:
  Brute(const FinVec& x, const NormDef& def) : x_(x), def_(def) {
    for (const auto& [p, v] : x.entries()) {
      pos_.push_back(p);
      mag_.push_back(tsirelson::abs(v));
    }
    n_ = pos_.size();
  }

  Scalar run() {
    if (n_ == 0) return 0;
    const Mask full = (Mask{1} << n_) - 1;
    return def_.is_tree() ? tree(full) : implicit(full);
  }

 private:
  Scalar sup(Mask m) const {
    Scalar s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if ((m >> i & 1) && mag_[i] > s) s = mag_[i];
    }
    return s;
  }

  std::vector<Pos> members(Mask m) const {
    std::vector<Pos> out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (m >> i & 1) out.push_back(pos_[i]);
    }
    return out;
  }

  // Calls visit(parts) for every sequence of successive nonempty subsets
  // of m: a nonempty subset S of m cut into runs of consecutive elements.
  template <typename Visit>
  void sequences(Mask m, Visit&& visit) const {
    for (Mask s = m; s != 0; s = (s - 1) & m) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n_; ++i) {
        if (s >> i & 1) idx.push_back(i);
      }
      const std::size_t cuts = idx.size() - 1;
      for (Mask pattern = 0; pattern < (Mask{1} << cuts); ++pattern) {
        std::vector<Mask> parts{0};
        for (std::size_t t = 0; t < idx.size(); ++t) {
          if (t > 0 && (pattern >> (t - 1) & 1)) parts.push_back(0);
          parts.back() |= Mask{1} << idx[t];
        }
        visit(parts);
      }
    }
  }

  bool admissible(const std::vector<Mask>& parts, int k) {
    std::vector<Pos> mins;
    for (Mask p : parts) mins.push_back(pos_[static_cast<std::size_t>(std::countr_zero(p))] * def_.scale);
    return membership_.member(mins, k);
  }

  Scalar leaf(Mask m) const {
    const auto& t = def_.tree();
    if (!t.leaf) return sup(m);
    return t.leaf->eval(x_.restrict(members(m)));
  }

  // ---- tree norms: relative value of a node at each level state --------

  Scalar tree(Mask full) {
    const auto& t = def_.tree();
    int j = 0, period = 1;
    if (const auto* r = std::get_if<LevelTree::Residue>(&t.terminal)) {
      j = r->j;
      period = r->n;
    }
    states_ = j + period;
    for (int s = 0; s < states_; ++s) {
      next_.push_back(s + 1 < states_ ? s + 1 : j);
      allowed_.push_back(def_.terminal_allowed(s));
    }
    table_.assign(std::size_t{1} << n_, {});
    for (Mask m = 1; m <= full; ++m) fill_tree(m);
    Scalar root = table_[full][0];
    if (t.sup_floor && sup(full) > root) root = sup(full);
    return root;
  }

  void fill_tree(Mask m) {
    const Scalar ratio = def_.tree().ratio;
    std::vector<Scalar> g(states_, Scalar(-1));
    std::vector<Scalar> best_split(states_, Scalar(-1));
    for (int s = 0; s < states_; ++s) {
      if (allowed_[s]) g[s] = leaf(m);
    }
    // Children strictly inside m; the single child equal to m is a chain.
    sequences(m, [&](const std::vector<Mask>& parts) {
      if (parts.size() == 1 && parts[0] == m) return;
      if (!admissible(parts, 1)) return;
      for (int s = 0; s < states_; ++s) {
        Scalar sum = 0;
        for (Mask p : parts) sum += table_[p][next_[s]];
        if (sum > best_split[s]) best_split[s] = sum;
      }
    });
    for (int s = 0; s < states_; ++s) {
      if (best_split[s] >= 0 && ratio * best_split[s] > g[s]) g[s] = ratio * best_split[s];
    }
    for (int pass = 0; pass < states_; ++pass) {
      for (int s = 0; s < states_; ++s) {
        if (g[next_[s]] >= 0 && ratio * g[next_[s]] > g[s]) g[s] = ratio * g[next_[s]];
      }
    }
    table_[m] = std::move(g);
  }

  // ---- implicit norms ----------------------------------------------------

  Scalar implicit(Mask full) {
    // Once every two-or-more-part sequence from supp(x) is k-admissible the
    // family no longer grows with k, so larger k only contribute their
    // weight; fold them into the first such level.
    std::vector<Pos> rest;
    for (Pos p : pos_) {
      if (p * def_.scale != 1) rest.push_back(p * def_.scale);
    }
    int top = 1;
    while (!membership_.member(rest, top)) ++top;
    const auto& imp = def_.implicit();
    weights_.assign(top + 1, std::nullopt);
    auto offer = [&](int k, const Scalar& w) {
      int at = std::min(k, top);
      if (!weights_[at] || w > *weights_[at]) weights_[at] = w;
    };
    for (const auto& r : imp.rules) offer(r.level, r.weight);
    if (imp.generator) {
      for (int k = 1;; ++k) {
        offer(k, *def_.implicit_weight(k));
        if (k >= top && pow(imp.generator->theta, k) <= *weights_[top]) break;
      }
    }
    values_.assign(std::size_t{1} << n_, Scalar(0));
    for (Mask m = 1; m <= full; ++m) {
      Scalar v = sup(m);
      for (int k = 1; k <= top; ++k) {
        if (!weights_[k]) continue;
        sequences(m, [&](const std::vector<Mask>& parts) {
          if (parts.size() < 2 || !admissible(parts, k)) return;
          Scalar sum = 0;
          for (Mask p : parts) sum += values_[p];
          sum *= *weights_[k];
          if (sum > v) v = sum;
        });
      }
      values_[m] = v;
    }
    return values_[full];
  }

  const FinVec& x_;
  const NormDef& def_;
  std::vector<Pos> pos_;
  std::vector<Scalar> mag_;
  std::size_t n_ = 0;
  Membership membership_;

  int states_ = 0;
  std::vector<int> next_;
  std::vector<bool> allowed_;
  std::vector<std::vector<Scalar>> table_;

  std::vector<std::optional<Scalar>> weights_;
  std::vector<Scalar> values_;
};

}  // namespace

Scalar brute_norm(const FinVec& x, const NormDef& def) {
  def.validate();
  if (x.size() > kMaxSupport) {
    throw Error(ErrorKind::SupportTooLarge, "oracle support " + std::to_string(x.size()) + " exceeds " +
                                                std::to_string(kMaxSupport));
  }
  return Brute(x, def).run();
}

Scalar brute_schreier_norm(const FinVec& x, int m) {
  if (m < 0) throw Error(ErrorKind::Domain, "negative level");
  if (x.size() > 16) throw Error(ErrorKind::SupportTooLarge, "oracle Schreier norm needs support <= 16");
  std::vector<std::pair<Pos, Scalar>> entries(x.entries().begin(), x.entries().end());
  Membership membership;
  Scalar best = 0;
  const Mask full = (Mask{1} << entries.size()) - 1;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    std::vector<Pos> set;
    Scalar sum = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (s >> i & 1) {
        set.push_back(entries[i].first);
        sum += entries[i].second;
      }
    }
    if (membership.member(set, m) && tsirelson::abs(sum) > best) best = tsirelson::abs(sum);
  }
  return best;
}

bool brute_member(const FinSet& set, int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "negative level");
  if (set.size() > 12 || n > 3) throw Error(ErrorKind::BoundExceeded, "oracle membership needs |F| <= 12 and n <= 3");
  Membership membership;
  return membership.member(set.elements(), n);
}

}  // namespace tsirelson::oracle
