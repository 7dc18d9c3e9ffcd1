#include "lpgram/derive.hpp"

#include <bit>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace lpgram {

namespace {

constexpr std::uint32_t kNoNode = std::numeric_limits<std::uint32_t>::max();

struct U64Hash {
  std::size_t operator()(std::uint64_t x) const noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

// Fact table keyed by a single machine word; usable when the state id plus
// the cap-bounded coordinates pack into 64 bits.
struct PackedTable {
  std::vector<unsigned> bits;
  unsigned state_bits = 0;
  std::unordered_map<std::uint64_t, std::uint32_t, U64Hash> map;

  static bool fits(std::size_t states, const Vec& cap) {
    unsigned total = std::bit_width(states - 1);
    for (auto c : cap) {
      total += std::bit_width(c);
      if (total > 64) return false;
    }
    return true;
  }

  PackedTable(std::size_t states, const Vec& cap) {
    state_bits = std::bit_width(states - 1);
    bits.reserve(cap.size());
    for (auto c : cap) bits.push_back(std::bit_width(c));
  }

  std::uint64_t encode(StateId s, const Vec& v) const {
    std::uint64_t x = s;
    for (std::size_t i = 0; i < v.size(); ++i) x = (x << bits[i]) | v[i];
    return x;
  }

  std::uint32_t& slot(StateId s, const Vec& v) {
    return map.try_emplace(encode(s, v), kNoNode).first->second;
  }
};

// Fallback fact table for systems whose fact space does not pack into a word.
struct WideTable {
  std::unordered_map<std::string, std::uint32_t> map;

  WideTable(std::size_t, const Vec&) {}

  std::uint32_t& slot(StateId s, const Vec& v) {
    std::string key(sizeof(StateId) + v.size() * sizeof(std::uint64_t), '\0');
    std::memcpy(key.data(), &s, sizeof(StateId));
    if (!v.empty())
      std::memcpy(key.data() + sizeof(StateId), v.data(),
                  v.size() * sizeof(std::uint64_t));
    return map.try_emplace(std::move(key), kNoNode).first->second;
  }
};

struct Node {
  StateId state;
  Vec vec;
  std::uint64_t best;
  std::uint32_t parent_a = kNoNode;
  std::uint32_t parent_b = kNoNode;
  std::uint32_t rule = 0;
  BvDerivation::Kind kind = BvDerivation::Kind::Axiom;
  bool settled = false;
};

// Componentwise bound on any fact worth storing: the goal plus, per rule
// application still available, the largest amount a single application or
// leaf can add.  When no rule can shrink a coordinate on the way to the
// root, that coordinate can further be clamped to the goal's.
Vec fact_cap(const BvassamSystem& sys, const Fact& goal,
             std::uint64_t max_size) {
  Vec cap = goal.vec;
  for (std::size_t i = 0; i < sys.full_dim; ++i) {
    std::uint64_t m = 0;
    for (const auto& ax : sys.axioms) m = std::max(m, ax.vec[i]);
    for (const auto& r : sys.unary) m = std::max(m, r.delta2[i]);
    std::uint64_t slack;
    if (m != 0 && max_size > (std::numeric_limits<std::uint64_t>::max() -
                              cap[i]) / m)
      slack = std::numeric_limits<std::uint64_t>::max() - cap[i];
    else
      slack = max_size * m;
    bool monotone = true;
    for (const auto& r : sys.unary)
      if (r.delta2[i] < r.delta1[i]) monotone = false;
    if (!monotone) cap[i] += slack;
  }
  return cap;
}

template <class Table>
BvDerivPtr run_search(const BvassamSystem& sys, const Fact& goal,
                      std::uint64_t max_size, const DeriveOptions& opts,
                      const Vec& cap) {
  Table table(sys.states.size(), cap);
  std::vector<Node> nodes;
  std::vector<std::vector<std::uint32_t>> buckets(max_size + 1);
  std::vector<std::vector<std::uint32_t>> settled_by_state(sys.states.size());
  std::vector<std::vector<std::uint32_t>> unary_by_source(sys.states.size());
  for (std::uint32_t r = 0; r < sys.unary.size(); ++r)
    unary_by_source[sys.unary[r].source].push_back(r);

  std::uint64_t probes = 0;
  auto relax = [&](StateId state, Vec vec, std::uint64_t size,
                   BvDerivation::Kind kind, std::uint32_t rule,
                   std::uint32_t pa, std::uint32_t pb) {
    if (++probes > opts.max_expansions && opts.max_expansions != 0)
      throw BudgetExceeded("derivation search budget exhausted");
    std::uint32_t& idx = table.slot(state, vec);
    if (idx == kNoNode) {
      idx = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back(Node{state, std::move(vec), size, pa, pb, rule, kind});
      buckets[size].push_back(idx);
    } else if (!nodes[idx].settled && size < nodes[idx].best) {
      Node& n = nodes[idx];
      n.best = size;
      n.parent_a = pa;
      n.parent_b = pb;
      n.rule = rule;
      n.kind = kind;
      buckets[size].push_back(idx);
    }
  };

  for (std::uint32_t i = 0; i < sys.axioms.size(); ++i) {
    const auto& ax = sys.axioms[i];
    if (vec_leq(ax.vec, cap))
      relax(ax.state, ax.vec, 0, BvDerivation::Kind::Axiom, i, kNoNode, kNoNode);
  }

  std::uint32_t goal_idx = kNoNode;
  for (std::uint64_t s = 0; s <= max_size && goal_idx == kNoNode; ++s) {
    for (std::size_t at = 0; at < buckets[s].size(); ++at) {
      std::uint32_t idx = buckets[s][at];
      if (nodes[idx].settled || nodes[idx].best != s) continue;
      nodes[idx].settled = true;
      settled_by_state[nodes[idx].state].push_back(idx);
      if (nodes[idx].state == goal.state && nodes[idx].vec == goal.vec) {
        goal_idx = idx;
        break;
      }
      if (s == max_size) continue;  // nothing built on top can fit

      for (std::uint32_t r : unary_by_source[nodes[idx].state]) {
        const auto& rule = sys.unary[r];
        auto base = vec_sub(nodes[idx].vec, rule.delta1);
        if (!base) continue;
        Vec nv = vec_add(*base, rule.delta2);
        if (!vec_leq(nv, cap)) continue;
        relax(rule.target, std::move(nv), s + 1, BvDerivation::Kind::Unary, r,
              idx, kNoNode);
      }
      for (std::uint32_t r = 0; r < sys.binary.size(); ++r) {
        const auto& rule = sys.binary[r];
        if (rule.left == nodes[idx].state) {
          const auto& partners = settled_by_state[rule.right];
          for (std::size_t p = 0; p < partners.size(); ++p) {
            std::uint32_t other = partners[p];
            std::uint64_t ns = s + nodes[other].best + 1;
            if (ns > max_size) continue;
            Vec nv = vec_add(nodes[idx].vec, nodes[other].vec);
            if (!vec_leq(nv, cap)) continue;
            relax(rule.target, std::move(nv), ns, BvDerivation::Kind::Binary,
                  r, idx, other);
          }
        }
        if (rule.right == nodes[idx].state) {
          const auto& partners = settled_by_state[rule.left];
          for (std::size_t p = 0; p < partners.size(); ++p) {
            std::uint32_t other = partners[p];
            if (other == idx) continue;  // covered by the left-premise loop
            std::uint64_t ns = s + nodes[other].best + 1;
            if (ns > max_size) continue;
            Vec nv = vec_add(nodes[other].vec, nodes[idx].vec);
            if (!vec_leq(nv, cap)) continue;
            relax(rule.target, std::move(nv), ns, BvDerivation::Kind::Binary,
                  r, other, idx);
          }
        }
      }
    }
  }

  if (goal_idx == kNoNode) return nullptr;
  std::unordered_map<std::uint32_t, BvDerivPtr> built;
  auto rebuild = [&](auto&& self, std::uint32_t idx) -> BvDerivPtr {
    auto it = built.find(idx);
    if (it != built.end()) return it->second;
    const Node& n = nodes[idx];
    BvDerivPtr a = n.parent_a == kNoNode ? nullptr : self(self, n.parent_a);
    BvDerivPtr b = n.parent_b == kNoNode ? nullptr : self(self, n.parent_b);
    auto out = std::make_shared<BvDerivation>(BvDerivation{
        n.kind, n.rule, Fact{n.state, n.vec}, std::move(a), std::move(b)});
    built.emplace(idx, out);
    return out;
  };
  return rebuild(rebuild, goal_idx);
}

}  // namespace

BvDerivPtr derive(const BvassamSystem& sys, const Fact& goal,
                  std::uint64_t max_size, const DeriveOptions& opts) {
  validate(sys);
  if (max_size == 0)
    throw std::invalid_argument("derivation size bound must be positive");
  if (goal.state >= sys.states.size())
    throw std::invalid_argument("goal state out of range");
  if (goal.vec.size() != sys.full_dim)
    throw std::invalid_argument("goal vector length differs from dimension");
  Vec cap = fact_cap(sys, goal, max_size);
  if (PackedTable::fits(sys.states.size(), cap))
    return run_search<PackedTable>(sys, goal, max_size, opts, cap);
  return run_search<WideTable>(sys, goal, max_size, opts, cap);
}

bool derivable(const BvassamSystem& sys, const Fact& goal,
               std::uint64_t max_size, const DeriveOptions& opts) {
  return derive(sys, goal, max_size, opts) != nullptr;
}

BvDerivPtr member(const LBvassam& g, const Vec& visible,
                  const DeriveOptions& opts) {
  validate(g);
  if (visible.size() != g.system.visible_dim)
    throw std::invalid_argument("vector length differs from visible dimension");
  std::uint64_t n = vec_size(visible);
  if (n == 0) return nullptr;
  if (n > std::numeric_limits<std::uint64_t>::max() / g.linear_bound)
    throw std::invalid_argument("derivation size bound overflows");
  Fact goal{g.system.accepting, pad_vector(visible, g.system.full_dim)};
  return derive(g.system, goal, g.linear_bound * n, opts);
}

bool is_member(const LBvassam& g, const Vec& visible,
               const DeriveOptions& opts) {
  return member(g, visible, opts) != nullptr;
}

std::vector<Vec> enumerate_language(const LBvassam& g, const Vec& cap,
                                    const DeriveOptions& opts) {
  validate(g);
  if (cap.size() != g.system.visible_dim)
    throw std::invalid_argument("cap length differs from visible dimension");
  std::vector<Vec> out;
  if (cap.empty()) return out;
  Vec v(cap.size(), 0);
  while (true) {
    if (vec_size(v) > 0 && is_member(g, v, opts)) out.push_back(v);
    // Advance the last coordinate first: ascending lexicographic order.
    std::size_t i = v.size();
    while (i-- > 0) {
      if (v[i] < cap[i]) {
        ++v[i];
        break;
      }
      v[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace lpgram
