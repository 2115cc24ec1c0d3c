#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace ltlfsyn {

using BddRef = uint32_t;

// Reduced ordered BDD with hash-consed nodes: two functions are equal
// iff their refs are equal.  Variable index equals ordering position
// (smaller index nearer the root).  Nodes are never freed; managers are
// confined to one solver instance.
class BddManager {
 public:
  static constexpr BddRef kFalse = 0;
  static constexpr BddRef kTrue = 1;

  BddManager();

  BddRef var(uint32_t v);
  BddRef nvar(uint32_t v);
  BddRef apply_and(BddRef a, BddRef b);
  BddRef apply_or(BddRef a, BddRef b);
  BddRef negate(BddRef a);
  BddRef restrict1(BddRef a, uint32_t v, bool value);

  bool is_false(BddRef a) const { return a == kFalse; }
  bool is_true(BddRef a) const { return a == kTrue; }

  // Evaluates under a total assignment given as a bit query.
  bool eval(BddRef a, const std::function<bool(uint32_t)>& bit) const;

  // Minimal satisfying assignment over variables [0, nvars), where the
  // assignment is read as a bitvector with bit v weighted 2^v.  The
  // function must not be constant-false.
  uint32_t min_sat(BddRef a, uint32_t nvars);

  size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    uint32_t var;
    BddRef lo, hi;
  };

  BddRef mk(uint32_t var, BddRef lo, BddRef hi);
  BddRef apply(BddRef a, BddRef b, bool is_and);

  std::vector<Node> nodes_;
  std::unordered_map<uint64_t, BddRef> unique_;
  std::unordered_map<uint64_t, BddRef> and_cache_, or_cache_, not_cache_;
  std::unordered_map<uint64_t, BddRef> restrict_cache_;
};

}  // namespace ltlfsyn
