#pragma once

#include <string_view>

#include "ltlfsyn/formula.hpp"

namespace ltlfsyn {

// Parses the textual grammar into a raw AST (negation, implication and
// equivalence nodes survive; F/G sugar is eliminated into tt U / ff R).
// Throws ParseError with line/column on bad input.
FormulaId parse_formula(FormulaStore& store, std::string_view text);

}  // namespace ltlfsyn
