#include "tsirelson/certificate.hpp"

#include <sstream>

#include "tsirelson/errors.hpp"

namespace tsirelson {

std::size_t CertNode::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

namespace {

std::string set_string(const FinSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s.elements()[i];
  out << '}';
  return out.str();
}

void render_node(const CertNode& node, int depth, std::ostringstream& out) {
  out << std::string(2 * static_cast<std::size_t>(depth), ' ') << set_string(node.set) << '@' << node.level;
  if (node.rule > 1) out << " k=" << node.rule;
  if (node.leaf_value) out << " = " << to_exact_string(*node.leaf_value);
  out << '\n';
  for (const auto& c : node.children) render_node(c, depth + 1, out);
}

[[noreturn]] void bad(BadTreeReason reason, const CertNode& node, const std::string& what) {
  throw BadTree(reason, what + " at " + set_string(node.set) + "@" + std::to_string(node.level));
}

class Checker {
 public:
  Checker(const FinVec& x, const NormDef& def) : x_(x), def_(def) {}

  Scalar leaf_norm(const CertNode& node, bool sup_only) const {
    FinVec part = x_.restrict(node.set.elements());
    if (!sup_only && def_.is_tree() && def_.tree().leaf) return def_.tree().leaf->eval(part);
    return part.sup_norm();
  }

  // Returns the node's contribution relative to its own weight.
  Scalar visit(const CertNode& node, int level) const {
    if (node.set.empty()) bad(BadTreeReason::Malformed, node, "empty set");
    if (node.level != level) bad(BadTreeReason::Malformed, node, "level should be " + std::to_string(level));
    if (node.terminal()) {
      if (!node.leaf_value) bad(BadTreeReason::Malformed, node, "terminal without a leaf value");
      if (def_.is_tree() && !def_.terminal_allowed(level)) {
        bad(BadTreeReason::WrongTerminalLevel, node, "terminal level not permitted");
      }
      Scalar actual = leaf_norm(node, false);
      if (actual != *node.leaf_value) {
        bad(BadTreeReason::LeafValueMismatch, node, "leaf value " + to_exact_string(*node.leaf_value) +
                                                        " but the restriction has norm " + to_exact_string(actual));
      }
      return actual;
    }
    if (node.leaf_value) bad(BadTreeReason::Malformed, node, "interior node with a leaf value");
    const int k = node.rule;
    Scalar weight;
    if (def_.is_tree()) {
      if (k != 1) bad(BadTreeReason::Malformed, node, "tree splits use rule 1");
      weight = def_.tree().ratio;
    } else {
      auto w = k >= 1 ? def_.implicit_weight(k) : std::nullopt;
      if (!w) bad(BadTreeReason::Malformed, node, "no rule for level " + std::to_string(k));
      if (node.children.size() < 2) bad(BadTreeReason::AdmissibilityViolation, node, "needs at least two parts");
      weight = *w;
    }
    std::vector<FinSet> sets;
    std::vector<Pos> all;
    for (const auto& c : node.children) {
      if (c.set.empty()) bad(BadTreeReason::Malformed, c, "empty set");
      sets.push_back(c.set);
      all.insert(all.end(), c.set.elements().begin(), c.set.elements().end());
    }
    if (!SetSequence::is_successive(sets)) bad(BadTreeReason::NonSuccessive, node, "children are not successive");
    if (all != node.set.elements()) bad(BadTreeReason::NotAPartition, node, "children do not partition the set");
    if (!schreier::is_admissible(sets, k, def_.scale)) {
      bad(BadTreeReason::AdmissibilityViolation, node, "children are not " + std::to_string(k) + "-admissible");
    }
    Scalar sum = 0;
    for (const auto& c : node.children) sum += visit(c, level + k);
    return weight * sum;
  }

 private:
  const FinVec& x_;
  const NormDef& def_;
};

}  // namespace

std::string Certificate::render() const {
  if (!root) return "(empty)\n";
  std::ostringstream out;
  if (sup_floor) out << "sup floor\n";
  render_node(*root, 0, out);
  return out.str();
}

Scalar check_certificate(const FinVec& x, const NormDef& def, const Certificate& cert) {
  def.validate();
  if (!cert.root) {
    if (!x.empty()) throw BadTree(BadTreeReason::Malformed, "missing root for a nonzero vector");
    return 0;
  }
  Checker checker(x, def);
  const CertNode& root = *cert.root;
  if (cert.sup_floor) {
    if (!root.terminal() || root.level != 0) bad(BadTreeReason::Malformed, root, "sup floor needs a level-0 leaf");
    bool floor_allowed = def.is_implicit() || def.tree().sup_floor || def.terminal_allowed(0);
    if (!floor_allowed) bad(BadTreeReason::WrongTerminalLevel, root, "definition has no sup floor");
    Scalar actual = checker.leaf_norm(root, true);
    if (!root.leaf_value || actual != *root.leaf_value) {
      bad(BadTreeReason::LeafValueMismatch, root, "sup floor leaf value");
    }
    return actual;
  }
  return checker.visit(root, 0);
}

}  // namespace tsirelson
