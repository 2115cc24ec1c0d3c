#include "ltlfsyn/states.hpp"

#include <cassert>

namespace ltlfsyn {

namespace {
// Atom table keys: literals fold onto the proposition in Fold mode and
// stay per-node in Strict mode; temporal subformulas key by node id.
constexpr uint64_t kPropTag = uint64_t{1} << 40;
inline uint64_t prop_key(PropId p) { return kPropTag | p; }
inline uint64_t node_key(FormulaId f) { return f; }

inline uint64_t pair_key(uint32_t a, uint32_t b) {
  return (static_cast<uint64_t>(a) << 32) | b;
}
}  // namespace

StateSpace::StateSpace(FormulaStore& store, VarOrder alphabet, EquivMode mode,
                       FormulaId seed)
    : store_(store), alphabet_(std::move(alphabet)), mode_(mode) {
  rep_.emplace(key_ff(), store_.ff());
  rep_.emplace(key_tt(), store_.tt());
  // Pre-assign atom variables in the root formula's DFS order so the
  // diagram ordering is independent of later query order.
  if (seed != kNoFormula)
    for (FormulaId atom : store_.temporal_closure(seed)) atom_variable(atom);
}

uint32_t StateSpace::atom_variable(FormulaId atom) {
  const FormulaNode& n = store_.node(atom);
  uint64_t key = (n.op == Op::Lit && mode_ == EquivMode::Fold) ? prop_key(n.prop)
                                                               : node_key(atom);
  auto it = atom_vars_.find(key);
  if (it != atom_vars_.end()) return it->second;
  uint32_t v = next_var_++;
  atom_vars_.emplace(key, v);
  return v;
}

BddRef StateSpace::canon_rec(FormulaId f) {
  auto it = canon_cache_.find(f);
  if (it != canon_cache_.end()) return it->second;
  const FormulaNode& n = store_.node(f);
  BddRef r;
  switch (n.op) {
    case Op::True:
      r = BddManager::kTrue;
      break;
    case Op::False:
      r = BddManager::kFalse;
      break;
    case Op::Lit:
      if (mode_ == EquivMode::Fold)
        r = n.positive ? state_bdds_.var(atom_variable(f))
                       : state_bdds_.nvar(atom_variable(f));
      else
        r = state_bdds_.var(atom_variable(f));
      break;
    case Op::And:
      r = state_bdds_.apply_and(canon_rec(n.left), canon_rec(n.right));
      break;
    case Op::Or:
      r = state_bdds_.apply_or(canon_rec(n.left), canon_rec(n.right));
      break;
    case Op::Next:
    case Op::WeakNext:
    case Op::Until:
    case Op::Release:
      r = state_bdds_.var(atom_variable(f));
      break;
    default:
      throw DomainError("canonicalize: formula not in NNF");
  }
  canon_cache_.emplace(f, r);
  return r;
}

StateKey StateSpace::canonicalize(FormulaId f) {
  StateKey k = canon_rec(f);
  rep_.emplace(k, f);  // first formula to hit the key wins
  return k;
}

bool StateSpace::prop_equiv(FormulaId f, FormulaId g) {
  return canonicalize(f) == canonicalize(g);
}

FormulaId StateSpace::representative(StateKey k) const {
  auto it = rep_.find(k);
  if (it == rep_.end()) throw DomainError("representative: unknown state key");
  return it->second;
}

FormulaId StateSpace::progress(FormulaId f, Letter sigma) {
  uint64_t key = (static_cast<uint64_t>(f) << kMaxVars) | sigma;
  auto it = progress_cache_.find(key);
  if (it != progress_cache_.end()) return it->second;
  const FormulaNode& n = store_.node(f);
  FormulaId out;
  switch (n.op) {
    case Op::True:
    case Op::False:
      out = f;
      break;
    case Op::Lit: {
      int bit = alphabet_.bit_of(n.prop);
      if (bit < 0)
        throw DomainError("progress: proposition '" + store_.prop_name(n.prop) +
                          "' outside the declared alphabet");
      bool val = (sigma >> bit) & 1u;
      out = (val == n.positive) ? store_.tt() : store_.ff();
      break;
    }
    case Op::And:
      out = store_.mk_and(progress(n.left, sigma), progress(n.right, sigma));
      break;
    case Op::Or:
      out = store_.mk_or(progress(n.left, sigma), progress(n.right, sigma));
      break;
    case Op::Next:
    case Op::WeakNext:
      out = n.left;
      break;
    case Op::Until:
      // fp(l U r) = fp(r) | (fp(l) & (l U r))
      out = store_.mk_or(progress(n.right, sigma),
                         store_.mk_and(progress(n.left, sigma), f));
      break;
    case Op::Release:
      // fp(l R r) = fp(r) & (fp(l) | (l R r))
      out = store_.mk_and(progress(n.right, sigma),
                          store_.mk_or(progress(n.left, sigma), f));
      break;
    default:
      throw DomainError("progress: formula not in NNF");
  }
  progress_cache_.emplace(key, out);
  return out;
}

FormulaId StateSpace::progress_trace(FormulaId f, const Trace& trace) {
  for (Letter sigma : trace.letters) f = progress(f, sigma);
  return f;
}

StateKey StateSpace::successor(StateKey k, Letter sigma) {
  uint64_t key = (static_cast<uint64_t>(k) << kMaxVars) | sigma;
  auto it = succ_cache_.find(key);
  if (it != succ_cache_.end()) return it->second;
  StateKey out = canonicalize(progress(representative(k), sigma));
  succ_cache_.emplace(key, out);
  return out;
}

bool StateSpace::eval1(FormulaId f, Letter sigma) const {
  const FormulaNode& n = store_.node(f);
  switch (n.op) {
    case Op::True:
      return true;
    case Op::False:
      return false;
    case Op::Lit: {
      int bit = alphabet_.bit_of(n.prop);
      if (bit < 0)
        throw DomainError("eval1: proposition outside the declared alphabet");
      bool val = (sigma >> bit) & 1u;
      return val == n.positive;
    }
    case Op::And:
      return eval1(n.left, sigma) && eval1(n.right, sigma);
    case Op::Or:
      return eval1(n.left, sigma) || eval1(n.right, sigma);
    case Op::Next:
      return false;  // needs a successor instant
    case Op::WeakNext:
      return true;  // vacuously true at the last instant
    case Op::Until:
    case Op::Release:
      return eval1(n.right, sigma);  // both collapse to the right operand
    default:
      throw DomainError("eval1: formula not in NNF");
  }
}

bool StateSpace::one_step_accepts(StateKey k, Letter sigma) {
  return eval1(representative(k), sigma);
}

BddRef StateSpace::letter_fun(FormulaId f) {
  auto it = letter_fun_cache_.find(f);
  if (it != letter_fun_cache_.end()) return it->second;
  const FormulaNode& n = store_.node(f);
  BddRef r;
  switch (n.op) {
    case Op::True:
      r = BddManager::kTrue;
      break;
    case Op::False:
      r = BddManager::kFalse;
      break;
    case Op::Lit: {
      int bit = alphabet_.bit_of(n.prop);
      if (bit < 0)
        throw DomainError("acceptance_function: proposition outside the alphabet");
      r = n.positive ? letter_bdds_.var(static_cast<uint32_t>(bit))
                     : letter_bdds_.nvar(static_cast<uint32_t>(bit));
      break;
    }
    case Op::And:
      r = letter_bdds_.apply_and(letter_fun(n.left), letter_fun(n.right));
      break;
    case Op::Or:
      r = letter_bdds_.apply_or(letter_fun(n.left), letter_fun(n.right));
      break;
    case Op::Next:
      r = BddManager::kFalse;
      break;
    case Op::WeakNext:
      r = BddManager::kTrue;
      break;
    case Op::Until:
    case Op::Release:
      r = letter_fun(n.right);
      break;
    default:
      throw DomainError("acceptance_function: formula not in NNF");
  }
  letter_fun_cache_.emplace(f, r);
  return r;
}

BddRef StateSpace::acceptance_function(StateKey k) {
  auto it = acc_fun_cache_.find(k);
  if (it != acc_fun_cache_.end()) return it->second;
  BddRef r = letter_fun(representative(k));
  acc_fun_cache_.emplace(k, r);
  return r;
}

Letter StateSpace::min_letter(BddRef f) {
  return letter_bdds_.min_sat(f, static_cast<uint32_t>(alphabet_.size()));
}

}  // namespace ltlfsyn
