#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ltlfsyn/bdd.hpp"
#include "ltlfsyn/formula.hpp"
#include "ltlfsyn/trace.hpp"

namespace ltlfsyn {

// Identity of a propositional-equivalence class; doubles as the
// automaton/game state identity.  Equal keys <=> propositionally
// equivalent formulas (under the configured folding mode).
using StateKey = BddRef;

enum class EquivMode {
  Fold,    // complementary literals share one diagram variable: p | !p ~ tt
  Strict,  // each literal is its own atom, as in the propositional semantics
};

// One solver instance's canonical state universe: variable table for
// temporal atoms, canonicalization, representatives, progression and the
// one-step acceptance test.  Single-threaded by construction.
class StateSpace {
 public:
  StateSpace(FormulaStore& store, VarOrder alphabet, EquivMode mode,
             FormulaId seed = kNoFormula);

  FormulaStore& store() { return store_; }
  const VarOrder& alphabet() const { return alphabet_; }
  EquivMode mode() const { return mode_; }

  StateKey key_tt() const { return BddManager::kTrue; }
  StateKey key_ff() const { return BddManager::kFalse; }

  // Interprets an NNF formula as a Boolean combination of its temporal
  // atoms; first formula to produce a key becomes its representative.
  StateKey canonicalize(FormulaId f);
  bool prop_equiv(FormulaId f, FormulaId g);
  FormulaId representative(StateKey k) const;
  bool known_key(StateKey k) const { return rep_.count(k) != 0; }

  // Formula progression over a single letter, with tt/ff absorption and
  // idempotence applied on the fly.  Result is in NNF.
  FormulaId progress(FormulaId f, Letter sigma);
  // Progression over a trace = left fold of single-letter progression.
  FormulaId progress_trace(FormulaId f, const Trace& trace);

  // Class-level successor: canonicalize(progress(representative(k), sigma)).
  StateKey successor(StateKey k, Letter sigma);

  // sigma |= s, i.e. the length-1 trace [sigma] satisfies the state.
  bool one_step_accepts(StateKey k, Letter sigma);
  // Direct single-instant evaluator; the hot path of acceptance checks.
  bool eval1(FormulaId f, Letter sigma) const;

  // Canonical Boolean function over the alphabet that agrees with
  // one_step_accepts on every letter; constant-false iff the state has
  // no accepting outgoing transition.
  BddRef acceptance_function(StateKey k);
  BddManager& letter_bdds() { return letter_bdds_; }
  // Minimal letter satisfying a non-false function over the alphabet.
  Letter min_letter(BddRef f);

 private:
  uint32_t atom_variable(FormulaId atom);
  BddRef canon_rec(FormulaId f);
  BddRef letter_fun(FormulaId f);

  FormulaStore& store_;
  VarOrder alphabet_;
  EquivMode mode_;

  BddManager state_bdds_;
  BddManager letter_bdds_;

  // Temporal-atom variable table.  In folding mode both literal
  // polarities of a proposition map onto one variable; indices are
  // assigned once, in first-occurrence order, and never change.
  std::unordered_map<uint64_t, uint32_t> atom_vars_;
  uint32_t next_var_ = 0;

  std::unordered_map<FormulaId, BddRef> canon_cache_;
  std::unordered_map<StateKey, FormulaId> rep_;
  std::unordered_map<uint64_t, FormulaId> progress_cache_;
  std::unordered_map<uint64_t, StateKey> succ_cache_;
  std::unordered_map<FormulaId, BddRef> letter_fun_cache_;
  std::unordered_map<StateKey, BddRef> acc_fun_cache_;
};

}  // namespace ltlfsyn
