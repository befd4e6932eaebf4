#include "tsirelson/norm_def.hpp"

#include <string>

#include "tsirelson/errors.hpp"

namespace tsirelson {

void NormDef::validate() const {
  if (scale < 1) throw Error(ErrorKind::InvalidDef, name + ": scale must be >= 1");
  if (const auto* imp = std::get_if<ImplicitEq>(&mode)) {
    if (imp->rules.empty() && !imp->generator) {
      throw Error(ErrorKind::InvalidDef, name + ": implicit norm needs at least one rule");
    }
    for (const auto& r : imp->rules) {
      if (r.level < 1) throw Error(ErrorKind::InvalidDef, name + ": rule level must be >= 1");
      if (r.weight <= 0 || r.weight > 1) throw Error(ErrorKind::InvalidDef, name + ": rule weight must lie in (0,1]");
    }
    if (imp->generator) {
      const auto& g = *imp->generator;
      if (!g.coefficient) throw Error(ErrorKind::InvalidDef, name + ": generator without coefficients");
      if (g.theta <= 0 || g.theta >= 1) throw Error(ErrorKind::InvalidDef, name + ": theta must lie in (0,1)");
    }
    return;
  }
  const auto& t = std::get<LevelTree>(mode);
  if (t.ratio <= 0 || t.ratio >= 1) throw Error(ErrorKind::InvalidDef, name + ": level ratio must lie in (0,1)");
  if (const auto* r = std::get_if<LevelTree::Residue>(&t.terminal)) {
    if (r->j < 0 || r->n < 1) throw Error(ErrorKind::InvalidDef, name + ": residue needs j >= 0 and n >= 1");
  }
  if (t.leaf && !t.leaf->eval) throw Error(ErrorKind::InvalidDef, name + ": leaf norm has no evaluator");
}

std::optional<Scalar> NormDef::implicit_weight(int k) const {
  const auto& imp = implicit();
  std::optional<Scalar> best;
  for (const auto& r : imp.rules) {
    if (r.level == k && (!best || r.weight > *best)) best = r.weight;
  }
  if (imp.generator && k >= 1) {
    Scalar c = imp.generator->coefficient(k);
    if (c <= 0 || c > 1) {
      throw Error(ErrorKind::InvalidDef, name + ": coefficient c_" + std::to_string(k) + " outside (0,1]");
    }
    Scalar w = c * pow(imp.generator->theta, k);
    if (!best || w > *best) best = w;
  }
  return best;
}

bool NormDef::terminal_allowed(int level) const {
  const auto& t = tree();
  if (std::holds_alternative<LevelTree::AllLevels>(t.terminal)) return level >= 0;
  const auto& r = std::get<LevelTree::Residue>(t.terminal);
  return level >= r.j && (level - r.j) % r.n == 0;
}

namespace defs {

NormDef implicit(int k, const Scalar& theta) {
  NormDef d;
  d.name = "T(S_" + std::to_string(k) + "," + to_exact_string(theta) + ")";
  d.mode = ImplicitEq{{{k, theta}}, std::nullopt};
  return d;
}

NormDef tsirelson() {
  NormDef d;
  d.name = "tsirelson";
  LevelTree t;
  t.sup_floor = true;
  d.mode = t;
  return d;
}

NormDef norm_n(int n) {
  NormDef d = norm_jn(0, n);
  d.name = "norm_n(" + std::to_string(n) + ")";
  return d;
}

NormDef norm_jn(int j, int n) {
  NormDef d = seminorm_jn(j, n);
  d.name = "norm_jn(" + std::to_string(j) + "," + std::to_string(n) + ")";
  std::get<LevelTree>(d.mode).sup_floor = true;
  return d;
}

NormDef seminorm_jn(int j, int n) {
  NormDef d;
  d.name = "seminorm_jn(" + std::to_string(j) + "," + std::to_string(n) + ")";
  LevelTree t;
  t.terminal = LevelTree::Residue{j, n};
  d.mode = t;
  return d;
}

NormDef mixed(std::function<Scalar(int)> coefficient, const Scalar& theta) {
  NormDef d;
  d.name = "mixed(theta=" + to_exact_string(theta) + ")";
  d.mode = ImplicitEq{{}, ImplicitEq::Generator{std::move(coefficient), theta}};
  return d;
}

NormDef tree_over(const BaseNorm& base) {
  NormDef d;
  d.name = "tree(" + base.name + ")";
  LevelTree t;
  t.leaf = base;
  d.mode = t;
  return d;
}

}  // namespace defs
}  // namespace tsirelson
