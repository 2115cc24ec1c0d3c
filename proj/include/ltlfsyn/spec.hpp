#pragma once

#include <string>
#include <vector>

#include "ltlfsyn/formula.hpp"
#include "ltlfsyn/trace.hpp"

namespace ltlfsyn {

enum class SystemType { Moore, Mealy };

// Input/output partition as read from a .part file: two lines,
// `.inputs: a b` and `.outputs: c d`.  List order is significant — it
// fixes the bitvector variable order.
struct Partition {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

Partition parse_partition(const std::string& text);

// Bit-layout helper over an alphabet ordered inputs-then-outputs.
struct SplitLetters {
  uint32_t nx = 0;  // |X| bits, at positions [0, nx)
  uint32_t ny = 0;  // |Y| bits, at positions [nx, nx+ny)

  Letter compose(uint32_t x, uint32_t y) const { return x | (y << nx); }
  uint32_t x_of(Letter l) const { return l & ((1u << nx) - 1u); }
  uint32_t y_of(Letter l) const { return l >> nx; }
  uint32_t x_count() const { return 1u << nx; }
  uint32_t y_count() const { return 1u << ny; }
};

// A complete synthesis problem instance.
struct SpecInstance {
  FormulaId formula_raw = kNoFormula;
  FormulaId formula_nnf = kNoFormula;
  std::vector<PropId> inputs;
  std::vector<PropId> outputs;
  SystemType type = SystemType::Moore;
  VarOrder alphabet;  // inputs ++ outputs
  SplitLetters split;
};

// Validates and assembles an instance: disjoint partition, at least one
// controlled variable somewhere, and every formula proposition declared.
SpecInstance make_spec(FormulaStore& store, FormulaId raw, const Partition& part,
                       SystemType type);

}  // namespace ltlfsyn
