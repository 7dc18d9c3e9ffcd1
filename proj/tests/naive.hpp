#pragma once

// Brute-force derivability oracle: computes the minimal number of rule
// applications for every fact reachable within a step budget by saturating
// the rule set, with no search heuristics shared with the engine.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lpgram/bvassam.hpp"

namespace naive {

using Key = std::pair<lpgram::StateId, lpgram::Vec>;

// Facts derivable with at most max_size rule applications, mapped to their
// minimal application count.
inline std::map<Key, std::uint64_t> min_sizes(const lpgram::BvassamSystem& sys,
                                              std::uint64_t max_size) {
  std::map<Key, std::uint64_t> best;
  for (const auto& ax : sys.axioms) {
    Key k{ax.state, ax.vec};
    auto it = best.find(k);
    if (it == best.end() || it->second > 0) best[k] = 0;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    auto snapshot = best;
    auto update = [&](Key k, std::uint64_t size) {
      if (size > max_size) return;
      auto it = best.find(k);
      if (it == best.end() || size < it->second) {
        best[std::move(k)] = size;
        changed = true;
      }
    };
    for (const auto& [fact, size] : snapshot) {
      if (size >= max_size) continue;
      for (const auto& r : sys.unary) {
        if (r.source != fact.first) continue;
        auto base = lpgram::vec_sub(fact.second, r.delta1);
        if (!base) continue;
        update({r.target, lpgram::vec_add(*base, r.delta2)}, size + 1);
      }
    }
    for (const auto& [lf, ls] : snapshot)
      for (const auto& [rf, rs] : snapshot) {
        if (ls + rs + 1 > max_size) continue;
        for (const auto& r : sys.binary) {
          if (r.left != lf.first || r.right != rf.first) continue;
          update({r.target, lpgram::vec_add(lf.second, rf.second)},
                 ls + rs + 1);
        }
      }
  }
  return best;
}

}  // namespace naive
