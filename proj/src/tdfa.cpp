#include "ltlfsyn/tdfa.hpp"

namespace ltlfsyn {

Tdfa build_tdfa(StateSpace& space, FormulaId f, size_t state_budget) {
  Tdfa aut;
  aut.letter_count = space.alphabet().letter_count();

  auto intern_state = [&](StateKey k) -> uint32_t {
    auto it = aut.index_of.find(k);
    if (it != aut.index_of.end()) return it->second;
    if (aut.states.size() >= state_budget)
      throw BudgetExceededError("build_tdfa: state budget of " +
                                std::to_string(state_budget) + " exhausted");
    uint32_t idx = static_cast<uint32_t>(aut.states.size());
    aut.states.push_back(k);
    aut.index_of.emplace(k, idx);
    return idx;
  };

  aut.init = intern_state(space.canonicalize(f));
  for (uint32_t s = 0; s < aut.states.size(); ++s) {  // queue by index
    StateKey k = aut.states[s];
    aut.delta.emplace_back(aut.letter_count);
    aut.accepting.emplace_back(aut.letter_count, 0);
    for (Letter sigma = 0; sigma < aut.letter_count; ++sigma) {
      aut.delta[s][sigma] = intern_state(space.successor(k, sigma));
      aut.accepting[s][sigma] = space.one_step_accepts(k, sigma) ? 1 : 0;
    }
  }
  return aut;
}

bool tdfa_accepts(const Tdfa& aut, const Trace& trace) {
  if (trace.empty()) return false;
  uint32_t s = aut.init;
  for (size_t i = 0; i + 1 < trace.size(); ++i) s = aut.delta[s][trace.letters[i]];
  return aut.accepting[s][trace.letters.back()] != 0;
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string export_dot(StateSpace& space, const Tdfa& aut) {
  const FormulaStore& store = space.store();
  std::string out;
  out += "digraph tdfa {\n";
  out += "  rankdir=LR;\n";
  out += "  __init [shape=point, label=\"\"];\n";
  for (uint32_t s = 0; s < aut.state_count(); ++s) {
    out += "  S" + std::to_string(s) + " [shape=circle, label=\"" +
           dot_escape(store.to_string(space.representative(aut.states[s]))) + "\"];\n";
  }
  out += "  __init -> S" + std::to_string(aut.init) + ";\n";
  for (uint32_t s = 0; s < aut.state_count(); ++s) {
    for (Letter sigma = 0; sigma < aut.letter_count; ++sigma) {
      out += "  S" + std::to_string(s) + " -> S" + std::to_string(aut.delta[s][sigma]);
      out += " [label=\"" + dot_escape(format_cube(store, space.alphabet(), sigma)) + "\"";
      if (aut.accepting[s][sigma]) out += ", style=bold, arrowhead=dot";
      out += "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace ltlfsyn
