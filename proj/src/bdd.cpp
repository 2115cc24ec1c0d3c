#include "ltlfsyn/bdd.hpp"

#include <cassert>
#include <limits>

namespace ltlfsyn {

namespace {
constexpr uint32_t kTermVar = std::numeric_limits<uint32_t>::max();
inline uint64_t pack3(uint32_t a, uint32_t b, uint32_t c) {
  uint64_t h = a;
  h = h * 0x100000001b3ull ^ b;
  h = h * 0x100000001b3ull ^ c;
  return h;
}
inline uint64_t pack2(uint32_t a, uint32_t b) {
  return (static_cast<uint64_t>(a) << 32) | b;
}
}  // namespace

BddManager::BddManager() {
  nodes_.push_back(Node{kTermVar, kFalse, kFalse});  // 0: false terminal
  nodes_.push_back(Node{kTermVar, kTrue, kTrue});    // 1: true terminal
}

BddRef BddManager::mk(uint32_t var, BddRef lo, BddRef hi) {
  if (lo == hi) return lo;
  uint64_t key = pack3(var, lo, hi);
  auto it = unique_.find(key);
  if (it != unique_.end()) return it->second;
  BddRef id = static_cast<BddRef>(nodes_.size());
  nodes_.push_back(Node{var, lo, hi});
  unique_.emplace(key, id);
  return id;
}

BddRef BddManager::var(uint32_t v) { return mk(v, kFalse, kTrue); }
BddRef BddManager::nvar(uint32_t v) { return mk(v, kTrue, kFalse); }

BddRef BddManager::apply(BddRef a, BddRef b, bool is_and) {
  if (a == b) return a;
  if (is_and) {
    if (a == kFalse || b == kFalse) return kFalse;
    if (a == kTrue) return b;
    if (b == kTrue) return a;
  } else {
    if (a == kTrue || b == kTrue) return kTrue;
    if (a == kFalse) return b;
    if (b == kFalse) return a;
  }
  if (a > b) std::swap(a, b);
  auto& cache = is_and ? and_cache_ : or_cache_;
  uint64_t key = pack2(a, b);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const Node na = nodes_[a];
  const Node nb = nodes_[b];
  uint32_t v = na.var < nb.var ? na.var : nb.var;
  BddRef alo = na.var == v ? na.lo : a;
  BddRef ahi = na.var == v ? na.hi : a;
  BddRef blo = nb.var == v ? nb.lo : b;
  BddRef bhi = nb.var == v ? nb.hi : b;
  BddRef r = mk(v, apply(alo, blo, is_and), apply(ahi, bhi, is_and));
  cache.emplace(key, r);
  return r;
}

BddRef BddManager::apply_and(BddRef a, BddRef b) { return apply(a, b, true); }
BddRef BddManager::apply_or(BddRef a, BddRef b) { return apply(a, b, false); }

BddRef BddManager::negate(BddRef a) {
  if (a == kFalse) return kTrue;
  if (a == kTrue) return kFalse;
  auto it = not_cache_.find(a);
  if (it != not_cache_.end()) return it->second;
  const Node n = nodes_[a];
  BddRef r = mk(n.var, negate(n.lo), negate(n.hi));
  not_cache_.emplace(a, r);
  not_cache_.emplace(r, a);
  return r;
}

BddRef BddManager::restrict1(BddRef a, uint32_t v, bool value) {
  if (a == kFalse || a == kTrue) return a;
  const Node n = nodes_[a];
  if (n.var > v) return a;  // v does not occur
  if (n.var == v) return value ? n.hi : n.lo;
  uint64_t key = pack3(a, v, value ? 1u : 0u);
  auto it = restrict_cache_.find(key);
  if (it != restrict_cache_.end()) return it->second;
  BddRef r = mk(n.var, restrict1(n.lo, v, value), restrict1(n.hi, v, value));
  restrict_cache_.emplace(key, r);
  return r;
}

bool BddManager::eval(BddRef a, const std::function<bool(uint32_t)>& bit) const {
  while (a != kFalse && a != kTrue) {
    const Node& n = nodes_[a];
    a = bit(n.var) ? n.hi : n.lo;
  }
  return a == kTrue;
}

uint32_t BddManager::min_sat(BddRef a, uint32_t nvars) {
  assert(a != kFalse);
  uint32_t out = 0;
  // Fix high-significance bits to 0 first whenever that keeps the
  // function satisfiable; greedy and exact for the numeric order.
  for (uint32_t v = nvars; v-- > 0;) {
    BddRef lo = restrict1(a, v, false);
    if (lo != kFalse) {
      a = lo;
    } else {
      out |= (1u << v);
      a = restrict1(a, v, true);
    }
  }
  assert(a == kTrue);
  return out;
}

}  // namespace ltlfsyn
