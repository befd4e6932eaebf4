#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsirelson/scalar.hpp"
#include "tsirelson/vector.hpp"

namespace tsirelson {

struct NormDef;

/// A norm on c_00 used as the leaf of a tree norm. When
/// `declared_unconditional` is set the caller promises |Ex| <= |x| for all
/// restrictions, which licenses the interval-reduced evaluators.
struct BaseNorm {
  std::string name;
  std::function<Scalar(const FinVec&)> eval;
  bool declared_unconditional = true;
  /// When set, eval is this engine norm and interval values come from a
  /// single engine pass.
  std::shared_ptr<const NormDef> definition;

  Scalar operator()(const FinVec& x) const { return eval(x); }
};

/// Implicit-equation norm
///   ||x|| = ||x||_inf  v  sup_rules  weight_k * sum ||E_i x||
/// over k-admissible (E_i) with at least two parts.
struct ImplicitEq {
  struct Rule {
    int level;      // admissibility level k >= 1
    Scalar weight;  // in (0, 1]
  };
  /// weight(k) = coefficient(k) * theta^k for every k >= 1, coefficient in (0, 1].
  struct Generator {
    std::function<Scalar(int)> coefficient;
    Scalar theta;
  };

  std::vector<Rule> rules;
  std::optional<Generator> generator;
};

/// Tree norm: sup over admissible trees of sum ratio^level(E) * leaf(E x) over
/// terminal sets, with terminal levels restricted by `terminal`.
struct LevelTree {
  struct AllLevels {};
  /// Terminal levels are exactly {j, j+n, j+2n, ...}.
  struct Residue {
    int j = 0;
    int n = 1;
  };

  Scalar ratio{1, 2};
  std::variant<AllLevels, Residue> terminal = AllLevels{};
  /// Also take max with ||x||_inf at the root.
  bool sup_floor = false;
  /// Leaf norm on terminal sets; sup norm of the restriction when empty.
  std::optional<BaseNorm> leaf;
};

struct NormDef {
  std::string name;
  std::variant<ImplicitEq, LevelTree> mode;
  /// Admissibility is tested on {scale * min E_i}.
  Pos scale = 1;

  /// Throws Error{InvalidDef} when weights or terminal rules are out of range.
  void validate() const;

  bool is_implicit() const { return std::holds_alternative<ImplicitEq>(mode); }
  bool is_tree() const { return std::holds_alternative<LevelTree>(mode); }
  const ImplicitEq& implicit() const { return std::get<ImplicitEq>(mode); }
  const LevelTree& tree() const { return std::get<LevelTree>(mode); }

  /// Weight attached to one decomposition step at level k (ImplicitEq):
  /// the largest rule weight for k, or the generator weight.
  std::optional<Scalar> implicit_weight(int k) const;
  /// Whether a terminal set at `level` is permitted (LevelTree).
  bool terminal_allowed(int level) const;
};

namespace defs {

/// T(S_k, theta) in implicit form.
NormDef implicit(int k, const Scalar& theta);
/// ||.|| of T = T(S_1, 1/2), tree form (terminals at every level, sup floor).
NormDef tsirelson();
/// ||.||_n of T(S_n, 2^-n): terminals at levels 0, n, 2n, ...
NormDef norm_n(int n);
/// ||.||_j^n: terminals at j, j+n, ..., with the sup floor.
NormDef norm_jn(int j, int n);
/// |.|_j^n: as norm_jn without the floor.
NormDef seminorm_jn(int j, int n);
/// T((S_k, c_k theta^k)_k).
NormDef mixed(std::function<Scalar(int)> coefficient, const Scalar& theta);
/// |.|_Tr: tree norm over a base norm, terminals at every level.
NormDef tree_over(const BaseNorm& base);

}  // namespace defs
}  // namespace tsirelson
