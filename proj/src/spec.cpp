#include "ltlfsyn/spec.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ltlfsyn {

Partition parse_partition(const std::string& text) {
  Partition part;
  bool saw_inputs = false, saw_outputs = false;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::stringstream words(line);
    std::string head;
    if (!(words >> head)) continue;  // blank line
    std::vector<std::string>* dst = nullptr;
    if (head == ".inputs:" || head == ".inputs") {
      if (saw_inputs) throw InputError("partition: duplicate .inputs line");
      saw_inputs = true;
      dst = &part.inputs;
    } else if (head == ".outputs:" || head == ".outputs") {
      if (saw_outputs) throw InputError("partition: duplicate .outputs line");
      saw_outputs = true;
      dst = &part.outputs;
    } else {
      throw InputError("partition: unexpected line starting with '" + head + "'");
    }
    std::string name;
    while (words >> name) dst->push_back(name);
  }
  if (!saw_inputs || !saw_outputs)
    throw InputError("partition: both .inputs: and .outputs: lines are required");
  return part;
}

SpecInstance make_spec(FormulaStore& store, FormulaId raw, const Partition& part,
                       SystemType type) {
  SpecInstance spec;
  spec.formula_raw = raw;
  spec.formula_nnf = store.to_nnf(raw);
  spec.type = type;

  std::set<std::string> seen;
  for (const auto& n : part.inputs) {
    if (!seen.insert(n).second)
      throw InputError("partition: variable '" + n + "' declared twice");
    spec.inputs.push_back(store.intern_prop(n));
  }
  for (const auto& n : part.outputs) {
    if (!seen.insert(n).second)
      throw InputError("partition: variable '" + n + "' appears in both lists");
    spec.outputs.push_back(store.intern_prop(n));
  }
  if (spec.inputs.empty() && spec.outputs.empty())
    throw InputError("partition: at least one variable must be declared");

  std::vector<PropId> order = spec.inputs;
  order.insert(order.end(), spec.outputs.begin(), spec.outputs.end());
  spec.alphabet = VarOrder(order);
  spec.split.nx = static_cast<uint32_t>(spec.inputs.size());
  spec.split.ny = static_cast<uint32_t>(spec.outputs.size());

  // Propositions in the formula but absent from the partition are a hard
  // error; declared-but-unused ones just enlarge the alphabet.
  for (PropId p : store.props_of(spec.formula_nnf))
    if (!spec.alphabet.contains(p))
      throw InputError("proposition '" + store.prop_name(p) +
                       "' is not declared in the partition");
  return spec;
}

}  // namespace ltlfsyn
