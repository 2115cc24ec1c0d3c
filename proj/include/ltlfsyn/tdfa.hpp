#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "ltlfsyn/states.hpp"

namespace ltlfsyn {

constexpr size_t kDefaultStateBudget = 1'000'000;

// Explicit transition-based DFA: deterministic, total transition map
// over states x letters, acceptance on transitions.
struct Tdfa {
  uint32_t init = 0;
  std::vector<StateKey> states;                       // index -> key
  std::unordered_map<StateKey, uint32_t> index_of;    // key -> index
  std::vector<std::vector<uint32_t>> delta;           // [state][letter]
  std::vector<std::vector<char>> accepting;           // [state][letter]
  size_t letter_count = 0;

  size_t state_count() const { return states.size(); }
};

// Exhaustive breadth-first closure from [f] under progression over all
// letters.  Throws BudgetExceededError past the state budget.
Tdfa build_tdfa(StateSpace& space, FormulaId f,
                size_t state_budget = kDefaultStateBudget);

// Runs the trace; accepts iff it is non-empty and ends with an
// accepting transition.
bool tdfa_accepts(const Tdfa& aut, const Trace& trace);

// Deterministic DOT rendering; accepting transitions use a distinguished
// style, states are labeled with their representative formulas.
std::string export_dot(StateSpace& space, const Tdfa& aut);

}  // namespace ltlfsyn
