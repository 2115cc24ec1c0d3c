#include "ltlfsyn/formula.hpp"

#include <algorithm>
#include <cassert>

namespace ltlfsyn {

FormulaStore::FormulaStore() {
  // ids 0 and 1 are pinned to ff / tt
  nodes_.push_back(FormulaNode{Op::False});
  nodes_.push_back(FormulaNode{Op::True});
}

PropId FormulaStore::intern_prop(std::string_view name) {
  auto it = prop_ids_.find(std::string(name));
  if (it != prop_ids_.end()) return it->second;
  PropId id = static_cast<PropId>(prop_names_.size());
  prop_names_.emplace_back(name);
  prop_ids_.emplace(std::string(name), id);
  return id;
}

bool FormulaStore::has_prop(std::string_view name) const {
  return prop_ids_.count(std::string(name)) != 0;
}

FormulaId FormulaStore::intern(const NodeKey& k) {
  auto it = unique_.find(k);
  if (it != unique_.end()) return it->second;
  FormulaId id = static_cast<FormulaId>(nodes_.size());
  nodes_.push_back(FormulaNode{k.op, k.positive, k.prop, k.left, k.right});
  unique_.emplace(k, id);
  return id;
}

FormulaId FormulaStore::lit(PropId p, bool positive) {
  return intern(NodeKey{Op::Lit, positive, p, kNoFormula, kNoFormula});
}

FormulaId FormulaStore::unary(Op op, FormulaId f) {
  return intern(NodeKey{op, true, 0, f, kNoFormula});
}

FormulaId FormulaStore::binary(Op op, FormulaId l, FormulaId r) {
  return intern(NodeKey{op, true, 0, l, r});
}

FormulaId FormulaStore::mk_and(FormulaId l, FormulaId r) {
  if (l == ff() || r == ff()) return ff();
  if (l == tt()) return r;
  if (r == tt()) return l;
  if (l == r) return l;
  return binary(Op::And, l, r);
}

FormulaId FormulaStore::mk_or(FormulaId l, FormulaId r) {
  if (l == tt() || r == tt()) return tt();
  if (l == ff()) return r;
  if (r == ff()) return l;
  if (l == r) return l;
  return binary(Op::Or, l, r);
}

FormulaId FormulaStore::nnf_rec(FormulaId f, bool positive,
                                std::unordered_map<uint64_t, FormulaId>& memo) {
  uint64_t key = (static_cast<uint64_t>(f) << 1) | (positive ? 1 : 0);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const FormulaNode n = nodes_[f];
  FormulaId out;
  switch (n.op) {
    case Op::True:
      out = positive ? tt() : ff();
      break;
    case Op::False:
      out = positive ? ff() : tt();
      break;
    case Op::Lit:
      out = lit(n.prop, positive == n.positive);
      break;
    case Op::Not:
      out = nnf_rec(n.left, !positive, memo);
      break;
    case Op::And:
      out = positive ? mk_and(nnf_rec(n.left, true, memo), nnf_rec(n.right, true, memo))
                     : mk_or(nnf_rec(n.left, false, memo), nnf_rec(n.right, false, memo));
      break;
    case Op::Or:
      out = positive ? mk_or(nnf_rec(n.left, true, memo), nnf_rec(n.right, true, memo))
                     : mk_and(nnf_rec(n.left, false, memo), nnf_rec(n.right, false, memo));
      break;
    case Op::Next:
      // !X f == N !f
      out = positive ? next(nnf_rec(n.left, true, memo))
                     : weak_next(nnf_rec(n.left, false, memo));
      break;
    case Op::WeakNext:
      out = positive ? weak_next(nnf_rec(n.left, true, memo))
                     : next(nnf_rec(n.left, false, memo));
      break;
    case Op::Until:
      // !(l U r) == (!l) R (!r)
      out = positive ? until(nnf_rec(n.left, true, memo), nnf_rec(n.right, true, memo))
                     : release(nnf_rec(n.left, false, memo), nnf_rec(n.right, false, memo));
      break;
    case Op::Release:
      out = positive ? release(nnf_rec(n.left, true, memo), nnf_rec(n.right, true, memo))
                     : until(nnf_rec(n.left, false, memo), nnf_rec(n.right, false, memo));
      break;
    case Op::Implies:
      // l -> r == !l | r
      out = positive ? mk_or(nnf_rec(n.left, false, memo), nnf_rec(n.right, true, memo))
                     : mk_and(nnf_rec(n.left, true, memo), nnf_rec(n.right, false, memo));
      break;
    case Op::Equiv:
      // l <-> r == (l & r) | (!l & !r); the negation is the xor form.
      out = positive
                ? mk_or(mk_and(nnf_rec(n.left, true, memo), nnf_rec(n.right, true, memo)),
                        mk_and(nnf_rec(n.left, false, memo), nnf_rec(n.right, false, memo)))
                : mk_or(mk_and(nnf_rec(n.left, true, memo), nnf_rec(n.right, false, memo)),
                        mk_and(nnf_rec(n.left, false, memo), nnf_rec(n.right, true, memo)));
      break;
    default:
      throw DomainError("to_nnf: unexpected operator");
  }
  memo.emplace(key, out);
  return out;
}

FormulaId FormulaStore::to_nnf(FormulaId f) {
  std::unordered_map<uint64_t, FormulaId> memo;
  return nnf_rec(f, true, memo);
}

FormulaId FormulaStore::negate_nnf(FormulaId f) {
  auto it = negate_cache_.find(f);
  if (it != negate_cache_.end()) return it->second;
  const FormulaNode n = nodes_[f];
  FormulaId out;
  switch (n.op) {
    case Op::True:
      out = ff();
      break;
    case Op::False:
      out = tt();
      break;
    case Op::Lit:
      out = lit(n.prop, !n.positive);
      break;
    case Op::And:
      out = mk_or(negate_nnf(n.left), negate_nnf(n.right));
      break;
    case Op::Or:
      out = mk_and(negate_nnf(n.left), negate_nnf(n.right));
      break;
    case Op::Next:
      out = weak_next(negate_nnf(n.left));
      break;
    case Op::WeakNext:
      out = next(negate_nnf(n.left));
      break;
    case Op::Until:
      out = release(negate_nnf(n.left), negate_nnf(n.right));
      break;
    case Op::Release:
      out = until(negate_nnf(n.left), negate_nnf(n.right));
      break;
    default:
      throw DomainError("negate_nnf: formula not in NNF");
  }
  negate_cache_.emplace(f, out);
  negate_cache_.emplace(out, f);
  return out;
}

std::vector<FormulaId> FormulaStore::temporal_closure(FormulaId f) const {
  std::vector<FormulaId> out;
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<FormulaId> stack{f};
  // Explicit stack pre-order walk, left child first.
  while (!stack.empty()) {
    FormulaId g = stack.back();
    stack.pop_back();
    if (seen[g]) continue;
    seen[g] = 1;
    const FormulaNode& n = nodes_[g];
    if (is_temporal_atom(g)) out.push_back(g);
    if (n.right != kNoFormula) stack.push_back(n.right);
    if (n.left != kNoFormula) stack.push_back(n.left);
  }
  return out;
}

std::vector<PropId> FormulaStore::props_of(FormulaId f) const {
  std::vector<PropId> out;
  std::vector<char> seen_node(nodes_.size(), 0);
  std::vector<char> seen_prop(prop_names_.size(), 0);
  std::vector<FormulaId> stack{f};
  while (!stack.empty()) {
    FormulaId g = stack.back();
    stack.pop_back();
    if (seen_node[g]) continue;
    seen_node[g] = 1;
    const FormulaNode& n = nodes_[g];
    if (n.op == Op::Lit && !seen_prop[n.prop]) {
      seen_prop[n.prop] = 1;
      out.push_back(n.prop);
    }
    if (n.right != kNoFormula) stack.push_back(n.right);
    if (n.left != kNoFormula) stack.push_back(n.left);
  }
  return out;
}

bool FormulaStore::is_nnf(FormulaId f) const {
  const FormulaNode& n = nodes_[f];
  switch (n.op) {
    case Op::Not:
    case Op::Implies:
    case Op::Equiv:
      return false;
    case Op::True:
    case Op::False:
    case Op::Lit:
      return true;
    default:
      if (n.left != kNoFormula && !is_nnf(n.left)) return false;
      if (n.right != kNoFormula && !is_nnf(n.right)) return false;
      return true;
  }
}

bool FormulaStore::is_temporal_atom(FormulaId f) const {
  switch (nodes_[f].op) {
    case Op::Lit:
    case Op::Next:
    case Op::WeakNext:
    case Op::Until:
    case Op::Release:
      return true;
    default:
      return false;
  }
}

bool FormulaStore::is_boolean(FormulaId f) const {
  const FormulaNode& n = nodes_[f];
  switch (n.op) {
    case Op::Next:
    case Op::WeakNext:
    case Op::Until:
    case Op::Release:
      return false;
    case Op::True:
    case Op::False:
    case Op::Lit:
      return true;
    default:
      return (n.left == kNoFormula || is_boolean(n.left)) &&
             (n.right == kNoFormula || is_boolean(n.right));
  }
}

namespace {
// Precedence: unary (4) > U/R (3) > & (2) > | (1) > ->/<-> (0).
int prec_of(Op op) {
  switch (op) {
    case Op::Implies:
    case Op::Equiv:
      return 0;
    case Op::Or:
      return 1;
    case Op::And:
      return 2;
    case Op::Until:
    case Op::Release:
      return 3;
    default:
      return 4;
  }
}
bool right_assoc_level(int prec) { return prec == 3 || prec == 0; }
}  // namespace

void FormulaStore::print_rec(FormulaId f, int parent_prec, bool right_side,
                             std::string& out) const {
  const FormulaNode& n = nodes_[f];
  int prec = prec_of(n.op);
  bool parens;
  if (prec > parent_prec) {
    parens = false;
  } else if (prec < parent_prec) {
    parens = true;
  } else {
    // Same level: U/R and ->/<-> associate to the right only; & and |
    // chains can be printed flat.
    parens = right_assoc_level(prec) ? !right_side : false;
  }
  if (parens) out += '(';
  switch (n.op) {
    case Op::True:
      out += "true";
      break;
    case Op::False:
      out += "false";
      break;
    case Op::Lit:
      if (!n.positive) out += '!';
      out += prop_names_[n.prop];
      break;
    case Op::Not:
      out += '!';
      print_rec(n.left, 4, true, out);
      break;
    case Op::Next:
      out += "X ";
      print_rec(n.left, 4, true, out);
      break;
    case Op::WeakNext:
      out += "N ";
      print_rec(n.left, 4, true, out);
      break;
    case Op::And:
      print_rec(n.left, 2, false, out);
      out += " & ";
      print_rec(n.right, 2, true, out);
      break;
    case Op::Or:
      print_rec(n.left, 1, false, out);
      out += " | ";
      print_rec(n.right, 1, true, out);
      break;
    case Op::Until:
      print_rec(n.left, 3, false, out);
      out += " U ";
      print_rec(n.right, 3, true, out);
      break;
    case Op::Release:
      print_rec(n.left, 3, false, out);
      out += " R ";
      print_rec(n.right, 3, true, out);
      break;
    case Op::Implies:
      print_rec(n.left, 0, false, out);
      out += " -> ";
      print_rec(n.right, 0, true, out);
      break;
    case Op::Equiv:
      print_rec(n.left, 0, false, out);
      out += " <-> ";
      print_rec(n.right, 0, true, out);
      break;
  }
  if (parens) out += ')';
}

std::string FormulaStore::to_string(FormulaId f) const {
  std::string out;
  print_rec(f, -1, true, out);
  return out;
}

}  // namespace ltlfsyn
