#include "tsirelson/schreier.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tsirelson/errors.hpp"

namespace tsirelson {

FinSet::FinSet(std::initializer_list<Pos> elements) : FinSet(std::vector<Pos>(elements)) {}

FinSet::FinSet(std::vector<Pos> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!elements_.empty() && elements_.front() < 1) {
    throw Error(ErrorKind::Domain, "set elements must be >= 1");
  }
}

bool FinSet::contains(Pos p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

FinSet FinSet::scaled(Pos scale) const {
  std::vector<Pos> out;
  out.reserve(elements_.size());
  for (Pos e : elements_) out.push_back(scale * e);
  return FinSet(std::move(out));
}

SetSequence::SetSequence(std::vector<FinSet> sets) : sets_(std::move(sets)) {
  if (!is_successive(sets_)) throw Error(ErrorKind::Domain, "sets are empty or not successive");
}

std::vector<Pos> SetSequence::minima() const {
  std::vector<Pos> out;
  out.reserve(sets_.size());
  for (const auto& s : sets_) out.push_back(s.min());
  return out;
}

bool SetSequence::is_successive(const std::vector<FinSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) return false;
    if (i > 0 && !(sets[i - 1].max() < sets[i].min())) return false;
  }
  return true;
}

namespace schreier {

std::size_t longest_member_prefix(std::span<const Pos> elements, int n) {
  if (elements.empty()) return 0;
  if (n <= 0) return 1;
  const auto blocks_allowed = static_cast<std::uint64_t>(elements.front());
  std::size_t pos = 0;
  std::uint64_t blocks = 0;
  while (pos < elements.size() && blocks < blocks_allowed) {
    pos += longest_member_prefix(elements.subspan(pos), n - 1);
    ++blocks;
  }
  return pos;
}

bool is_member(std::span<const Pos> elements, int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "negative Schreier level");
  return longest_member_prefix(elements, n) == elements.size();
}

int min_level(std::span<const Pos> elements) {
  if (elements.size() <= 1) return 0;
  if (elements.front() == 1) return -1;
  for (int n = 1;; ++n) {
    if (is_member(elements, n)) return n;
  }
}

bool is_maximal(const FinSet& set, int n) {
  if (!is_member(set, n)) throw Error(ErrorKind::NotMember, "set is not in S_" + std::to_string(n));
  if (set.empty()) return false;
  // Whether F ∪ {p} is in S_n does not depend on p > max F.
  std::vector<Pos> extended = set.elements();
  extended.push_back(set.max() + 1);
  return !is_member(extended, n);
}

bool is_admissible(const std::vector<FinSet>& seq, int k, Pos scale) {
  if (scale < 1) throw Error(ErrorKind::Domain, "admissibility scale must be >= 1");
  if (!SetSequence::is_successive(seq)) return false;
  std::vector<Pos> mins;
  mins.reserve(seq.size());
  for (const auto& s : seq) mins.push_back(scale * s.min());
  return is_member(mins, k);
}

MaximalPrefix maximal_member_prefix(std::span<const Pos> candidates, int n) {
  std::size_t count = longest_member_prefix(candidates, n);
  return {count, count < candidates.size()};
}

namespace {

// Best weight of an S_n set over the increasing positions u with weights w;
// the first `forced` positions carry an extra bonus so they are always taken
// when feasible. Tables: best[i][e] = best S_level set with min u_i inside
// [i, e).
Scalar general_max_weight(const std::vector<Pos>& u, const std::vector<Scalar>& w, int n) {
  const std::size_t N = u.size();
  if (N == 0) return 0;
  std::vector<Scalar> best(N * (N + 1));
  auto at = [&](std::size_t i, std::size_t e) -> Scalar& { return best[i * (N + 1) + e]; };
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t e = i + 1; e <= N; ++e) at(i, e) = w[i];

  std::vector<Scalar> next(N * (N + 1));
  std::vector<Scalar> chain(N + 1), grown(N + 1);
  Scalar tmp;
  for (int level = 1; level <= n; ++level) {
    for (std::size_t i = 0; i < N; ++i) {
      // chain[e]: best with exactly c groups, first group starting at i.
      for (std::size_t e = i + 1; e <= N; ++e) chain[e] = at(i, e);
      std::vector<Scalar> result(chain.begin(), chain.end());
      const std::uint64_t cap = std::min<std::uint64_t>(static_cast<std::uint64_t>(u[i]), N - i);
      for (std::uint64_t c = 2; c <= cap; ++c) {
        for (std::size_t e = i + 1; e <= N; ++e) {
          grown[e] = -1;
          for (std::size_t s = i + c - 1; s < e; ++s) {
            tmp = chain[s] + at(s, e);
            if (tmp > grown[e]) grown[e] = tmp;
          }
        }
        for (std::size_t e = i + 1; e <= N; ++e) {
          chain[e] = grown[e];
          if (chain[e] > result[e]) result[e] = chain[e];
        }
      }
      for (std::size_t e = i + 1; e <= N; ++e) next[i * (N + 1) + e] = result[e];
    }
    std::swap(best, next);
  }
  Scalar answer(0);
  for (std::size_t i = 0; i < N; ++i) {
    if (at(i, N) > answer) answer = at(i, N);
  }
  return answer;
}

WeightedSubset level0(const std::vector<Pos>& u, const std::vector<Scalar>& w) {
  WeightedSubset out{0, {}};
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (w[i] > out.value) out = {w[i], FinSet{u[i]}};
  }
  return out;
}

WeightedSubset level1(const std::vector<Pos>& u, const std::vector<Scalar>& w) {
  const std::size_t N = u.size();
  WeightedSubset out{0, {}};
  std::size_t best_start = N;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < N; ++i) {
    // Up to u_i - 1 further elements, the heaviest among those after i.
    order.clear();
    for (std::size_t t = i + 1; t < N; ++t) order.push_back(t);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
    const std::size_t take = std::min<std::uint64_t>(order.size(), static_cast<std::uint64_t>(u[i]) - 1);
    Scalar total = w[i];
    for (std::size_t t = 0; t < take; ++t) total += w[order[t]];
    if (total > out.value) {
      out.value = total;
      best_start = i;
    }
  }
  if (best_start == N) return out;
  order.clear();
  for (std::size_t t = best_start + 1; t < N; ++t) order.push_back(t);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  const std::size_t take = std::min<std::uint64_t>(order.size(), static_cast<std::uint64_t>(u[best_start]) - 1);
  // Stable sort keeps equal weights in position order, so the earliest ties win.
  std::vector<Pos> chosen{u[best_start]};
  for (std::size_t t = 0; t < take; ++t) chosen.push_back(u[order[t]]);
  out.set = FinSet(std::move(chosen));
  return out;
}

}  // namespace

WeightedSubset max_weight_subset(const std::map<Pos, Scalar>& weights, int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "negative Schreier level");
  std::vector<Pos> u;
  std::vector<Scalar> w;
  for (auto [p, v] : weights) {
    v.canonicalize();
    if (v < 0) throw Error(ErrorKind::Domain, "max_weight_subset needs nonnegative weights");
    if (p < 1) throw Error(ErrorKind::Domain, "positions must be >= 1");
    if (v > 0) {
      u.push_back(p);
      w.push_back(v);
    }
  }
  if (n == 0) return level0(u, w);
  if (n == 1) return level1(u, w);

  const Scalar optimum = general_max_weight(u, w, n);
  if (optimum == 0) return {0, {}};
  Scalar bonus(1);
  for (const auto& v : w) bonus += v;

  // Lexicographically least optimal set: extend the prefix by the smallest
  // element that still admits an optimal completion.
  std::vector<Pos> prefix;
  Scalar prefix_weight(0);
  std::size_t next = 0;
  while (prefix_weight != optimum) {
    bool extended = false;
    for (std::size_t e = next; e < u.size() && !extended; ++e) {
      std::vector<Pos> trial = prefix;
      trial.push_back(u[e]);
      if (!is_member(trial, n)) continue;
      std::vector<Pos> uu(trial);
      std::vector<Scalar> ww;
      for (std::size_t t = 0; t < trial.size(); ++t) {
        auto idx = static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), trial[t]) - u.begin());
        ww.push_back(w[idx] + bonus);
      }
      for (std::size_t t = e + 1; t < u.size(); ++t) {
        uu.push_back(u[t]);
        ww.push_back(w[t]);
      }
      Scalar with_prefix = general_max_weight(uu, ww, n) - bonus * static_cast<long>(trial.size());
      if (with_prefix == optimum) {
        prefix = std::move(trial);
        prefix_weight += w[e];
        next = e + 1;
        extended = true;
      }
    }
    if (!extended) throw Error(ErrorKind::Domain, "internal: lexicographic reconstruction failed");
  }
  return {optimum, FinSet(prefix)};
}

void enumerate(int n, Pos max_pos, const std::function<void(const FinSet&)>& visit,
               const EnumerationBound& bound) {
  if (n < 0 || max_pos < 0) throw Error(ErrorKind::Domain, "negative enumeration parameter");
  if (n > bound.max_level || max_pos > bound.max_pos) {
    throw Error(ErrorKind::BoundExceeded, "enumeration of S_" + std::to_string(n) + " up to " +
                                              std::to_string(max_pos) + " exceeds the configured bound");
  }
  std::vector<Pos> current;
  std::function<void()> walk = [&]() {
    visit(FinSet(current));
    Pos start = current.empty() ? 1 : current.back() + 1;
    for (Pos e = start; e <= max_pos; ++e) {
      current.push_back(e);
      if (is_member(current, n)) walk();
      current.pop_back();
    }
  };
  walk();
}

std::vector<FinSet> enumerate(int n, Pos max_pos, const EnumerationBound& bound) {
  std::vector<FinSet> out;
  enumerate(n, max_pos, [&](const FinSet& f) { out.push_back(f); }, bound);
  return out;
}

}  // namespace schreier
}  // namespace tsirelson
