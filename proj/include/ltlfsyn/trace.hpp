#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ltlfsyn/formula.hpp"

namespace ltlfsyn {

// A letter is a total assignment over a declared, ordered proposition
// universe, packed as a bitvector: bit i <=> props[i] is true.
using Letter = uint32_t;
constexpr uint32_t kMaxVars = 24;

// Ordered proposition universe.  The declaration order fixes bit
// positions and therefore the "ascending bitvector order" used for
// deterministic letter/assignment enumeration everywhere.
class VarOrder {
 public:
  VarOrder() = default;
  explicit VarOrder(std::vector<PropId> props);

  size_t size() const { return props_.size(); }
  PropId prop(size_t bit) const { return props_[bit]; }
  const std::vector<PropId>& props() const { return props_; }
  // -1 when the proposition is not part of the universe.
  int bit_of(PropId p) const;
  bool contains(PropId p) const { return bit_of(p) >= 0; }
  size_t letter_count() const { return size_t{1} << props_.size(); }

 private:
  std::vector<PropId> props_;
  std::unordered_map<PropId, int> bits_;
};

struct Trace {
  std::vector<Letter> letters;
  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

// Direct recursive implementation of the finite-trace satisfaction
// relation; the ground-truth oracle for every other module.  Also
// accepts pre-NNF formulas (classical clauses for !, ->, <->).
// Throws DomainError on an empty trace.
bool eval_trace(const FormulaStore& store, FormulaId f, const VarOrder& vars,
                const Trace& trace);

// Cube/trace text format: letters are '&'-separated full literal cubes
// joined by ';', e.g. "a & !b ; !a & b".  The empty-universe cube prints
// as "true".
std::string format_cube(const FormulaStore& store, const VarOrder& vars, Letter l);
std::string format_trace(const FormulaStore& store, const VarOrder& vars,
                         const Trace& trace);
Trace parse_trace(FormulaStore& store, const VarOrder& vars, const std::string& text);

}  // namespace ltlfsyn
