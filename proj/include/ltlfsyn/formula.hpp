#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ltlfsyn/errors.hpp"

namespace ltlfsyn {

using PropId = uint32_t;
using FormulaId = uint32_t;
constexpr FormulaId kNoFormula = 0xffffffffu;

enum class Op : uint8_t {
  False,
  True,
  Lit,       // proposition or its negation
  And,
  Or,
  Next,      // strong next
  WeakNext,
  Until,
  Release,
  // The three below only appear in raw parse output; to_nnf removes them.
  Not,
  Implies,
  Equiv,
};

struct FormulaNode {
  Op op;
  bool positive = true;           // literal polarity
  PropId prop = 0;                // literal proposition
  FormulaId left = kNoFormula;    // unary child lives in `left`
  FormulaId right = kNoFormula;
};

// Hash-consed formula store.  Structurally identical formulas share one
// node, so equality of FormulaId is structural equality.  The store is
// append-only and confined to one solver instance.
class FormulaStore {
 public:
  FormulaStore();

  PropId intern_prop(std::string_view name);
  bool has_prop(std::string_view name) const;
  const std::string& prop_name(PropId p) const { return prop_names_[p]; }
  size_t prop_count() const { return prop_names_.size(); }

  FormulaId ff() const { return 0; }
  FormulaId tt() const { return 1; }
  FormulaId lit(PropId p, bool positive);
  FormulaId next(FormulaId f) { return unary(Op::Next, f); }
  FormulaId weak_next(FormulaId f) { return unary(Op::WeakNext, f); }
  FormulaId until(FormulaId l, FormulaId r) { return binary(Op::Until, l, r); }
  FormulaId release(FormulaId l, FormulaId r) { return binary(Op::Release, l, r); }

  // Raw connectives used by the parser; no simplification.
  FormulaId raw_and(FormulaId l, FormulaId r) { return binary(Op::And, l, r); }
  FormulaId raw_or(FormulaId l, FormulaId r) { return binary(Op::Or, l, r); }
  FormulaId raw_not(FormulaId f) { return unary(Op::Not, f); }
  FormulaId implies(FormulaId l, FormulaId r) { return binary(Op::Implies, l, r); }
  FormulaId equiv(FormulaId l, FormulaId r) { return binary(Op::Equiv, l, r); }

  // Simplifying conjunction/disjunction: constant absorption and
  // idempotence on shared nodes.  Only equivalences that are valid under
  // the propositional semantics, so one code path serves both the
  // folding and the strict equivalence modes.
  FormulaId mk_and(FormulaId l, FormulaId r);
  FormulaId mk_or(FormulaId l, FormulaId r);

  const FormulaNode& node(FormulaId f) const { return nodes_[f]; }
  Op op(FormulaId f) const { return nodes_[f].op; }

  // Negation normal form: eliminates ->, <-> and pushes negation onto
  // literals via the dualities.  Linear in the elimination output.
  FormulaId to_nnf(FormulaId f);

  // NNF negation.  Involution up to interning.
  FormulaId negate_nnf(FormulaId f);

  // Temporal closure tcl(f): every subformula that is a literal or has a
  // temporal root, deduplicated, in first-occurrence order of a
  // left-to-right depth-first walk.
  std::vector<FormulaId> temporal_closure(FormulaId f) const;

  // Propositions occurring in f, in first-occurrence DFS order.
  std::vector<PropId> props_of(FormulaId f) const;

  bool is_nnf(FormulaId f) const;
  // A temporal atom of the propositional semantics: literal or
  // temporal-rooted subformula.
  bool is_temporal_atom(FormulaId f) const;
  // Purely propositional (no temporal operator anywhere).
  bool is_boolean(FormulaId f) const;

  std::string to_string(FormulaId f) const;

 private:
  struct NodeKey {
    Op op;
    bool positive;
    PropId prop;
    FormulaId left, right;
    bool operator==(const NodeKey&) const = default;
  };
  struct NodeKeyHash {
    size_t operator()(const NodeKey& k) const {
      uint64_t h = static_cast<uint64_t>(k.op);
      h = h * 0x9e3779b97f4a7c15ull + k.prop * 2 + (k.positive ? 1 : 0);
      h = h * 0x9e3779b97f4a7c15ull + k.left;
      h = h * 0x9e3779b97f4a7c15ull + k.right;
      return static_cast<size_t>(h ^ (h >> 32));
    }
  };

  FormulaId intern(const NodeKey& k);
  FormulaId unary(Op op, FormulaId f);
  FormulaId binary(Op op, FormulaId l, FormulaId r);
  FormulaId nnf_rec(FormulaId f, bool positive,
                    std::unordered_map<uint64_t, FormulaId>& memo);
  void print_rec(FormulaId f, int parent_prec, bool right_side,
                 std::string& out) const;

  std::vector<std::string> prop_names_;
  std::unordered_map<std::string, PropId> prop_ids_;
  std::vector<FormulaNode> nodes_;
  std::unordered_map<NodeKey, FormulaId, NodeKeyHash> unique_;
  std::unordered_map<FormulaId, FormulaId> negate_cache_;
};

}  // namespace ltlfsyn
