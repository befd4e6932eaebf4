#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsirelson/norm_def.hpp"
#include "tsirelson/schreier.hpp"
#include "tsirelson/vector.hpp"

namespace tsirelson {

/// Node of an admissible tree. For tree norms every split is one level
/// deep (rule == 1). For implicit norms a split by rule k places the
/// children k levels down and multiplies by that rule's weight.
struct CertNode {
  FinSet set;
  int level = 0;
  int rule = 0;  // 0 for terminal nodes
  std::vector<CertNode> children;
  std::optional<Scalar> leaf_value;  // terminal nodes only

  bool terminal() const { return children.empty(); }
  std::size_t node_count() const;
};

struct Certificate {
  /// Absent only for the zero vector.
  std::optional<CertNode> root;
  /// The value is ||x||_inf (root is a single terminal at level 0).
  bool sup_floor = false;

  std::size_t node_count() const { return root ? root->node_count() : 0; }
  /// Indented "set@level" lines, leaves annotated with their value.
  std::string render() const;
};

struct NormResult {
  Scalar value;
  Certificate certificate;
};

/// Recomputes the value certified by `cert` for x under `def`, checking
/// successiveness, partition, admissibility at every node, terminal levels,
/// and leaf values. Throws BadTree on the first violation.
Scalar check_certificate(const FinVec& x, const NormDef& def, const Certificate& cert);

}  // namespace tsirelson
