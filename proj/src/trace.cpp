#include "ltlfsyn/trace.hpp"

#include <sstream>

namespace ltlfsyn {

VarOrder::VarOrder(std::vector<PropId> props) : props_(std::move(props)) {
  if (props_.size() > kMaxVars)
    throw InputError("proposition universe larger than " + std::to_string(kMaxVars) +
                     " variables");
  for (size_t i = 0; i < props_.size(); ++i) {
    if (!bits_.emplace(props_[i], static_cast<int>(i)).second)
      throw InputError("duplicate proposition in variable order");
  }
}

int VarOrder::bit_of(PropId p) const {
  auto it = bits_.find(p);
  return it == bits_.end() ? -1 : it->second;
}

namespace {

bool eval_at(const FormulaStore& store, FormulaId f, const VarOrder& vars,
             const Trace& rho, size_t i) {
  const FormulaNode& n = store.node(f);
  switch (n.op) {
    case Op::True:
      return true;
    case Op::False:
      return false;
    case Op::Lit: {
      int bit = vars.bit_of(n.prop);
      if (bit < 0)
        throw DomainError("eval_trace: proposition '" + store.prop_name(n.prop) +
                          "' is not part of the trace universe");
      bool val = (rho.letters[i] >> bit) & 1u;
      return n.positive ? val : !val;
    }
    case Op::And:
      return eval_at(store, n.left, vars, rho, i) &&
             eval_at(store, n.right, vars, rho, i);
    case Op::Or:
      return eval_at(store, n.left, vars, rho, i) ||
             eval_at(store, n.right, vars, rho, i);
    case Op::Next:
      return i + 1 < rho.size() && eval_at(store, n.left, vars, rho, i + 1);
    case Op::WeakNext:
      return i + 1 >= rho.size() || eval_at(store, n.left, vars, rho, i + 1);
    case Op::Until:
      // scan forward: right must hold eventually, left until then
      for (size_t k = i; k < rho.size(); ++k) {
        if (eval_at(store, n.right, vars, rho, k)) return true;
        if (!eval_at(store, n.left, vars, rho, k)) return false;
      }
      return false;
    case Op::Release:
      // right must hold up to and including a release point or the end
      for (size_t k = i; k < rho.size(); ++k) {
        if (!eval_at(store, n.right, vars, rho, k)) return false;
        if (eval_at(store, n.left, vars, rho, k)) return true;
      }
      return true;
    case Op::Not:
      return !eval_at(store, n.left, vars, rho, i);
    case Op::Implies:
      return !eval_at(store, n.left, vars, rho, i) ||
             eval_at(store, n.right, vars, rho, i);
    case Op::Equiv:
      return eval_at(store, n.left, vars, rho, i) ==
             eval_at(store, n.right, vars, rho, i);
  }
  return false;  // unreachable
}

}  // namespace

bool eval_trace(const FormulaStore& store, FormulaId f, const VarOrder& vars,
                const Trace& trace) {
  if (trace.empty()) throw DomainError("eval_trace: traces must be non-empty");
  return eval_at(store, f, vars, trace, 0);
}

std::string format_cube(const FormulaStore& store, const VarOrder& vars, Letter l) {
  if (vars.size() == 0) return "true";
  std::string out;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) out += " & ";
    if (!((l >> i) & 1u)) out += '!';
    out += store.prop_name(vars.prop(i));
  }
  return out;
}

std::string format_trace(const FormulaStore& store, const VarOrder& vars,
                         const Trace& trace) {
  std::string out;
  for (size_t i = 0; i < trace.size(); ++i) {
    if (i) out += " ; ";
    out += format_cube(store, vars, trace.letters[i]);
  }
  return out;
}

Trace parse_trace(FormulaStore& store, const VarOrder& vars, const std::string& text) {
  Trace trace;
  std::stringstream per_letter(text);
  std::string chunk;
  while (std::getline(per_letter, chunk, ';')) {
    Letter l = 0;
    std::stringstream per_lit(chunk);
    std::string tok;
    while (std::getline(per_lit, tok, '&')) {
      size_t b = tok.find_first_not_of(" \t\n\r");
      size_t e = tok.find_last_not_of(" \t\n\r");
      if (b == std::string::npos) throw InputError("empty literal in trace");
      std::string name = tok.substr(b, e - b + 1);
      bool positive = true;
      if (name[0] == '!') {
        positive = false;
        name = name.substr(1);
      }
      if (positive && name == "true") continue;  // empty-universe cube
      if (!store.has_prop(name))
        throw InputError("unknown proposition '" + name + "' in trace");
      int bit = vars.bit_of(store.intern_prop(name));
      if (bit < 0)
        throw InputError("proposition '" + name + "' outside the declared universe");
      if (positive) l |= (1u << bit);
    }
    trace.letters.push_back(l);
  }
  return trace;
}

}  // namespace ltlfsyn
