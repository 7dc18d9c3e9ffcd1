#pragma once

#include "lpgram/bvassam.hpp"
#include "lpgram/error.hpp"

namespace lpgram {

struct DeriveOptions {
  // Relaxation steps allowed before giving up with BudgetExceeded.
  // 0 disables the cap.
  std::uint64_t max_expansions = 1'000'000;
};

// Smallest derivation of `goal` using at most `max_size` rule applications,
// or null when there is none.  Ties break by a fixed deterministic order:
// axiom index, then rule index, then discovery order of the premises.
// Pre: max_size >= 1.
BvDerivPtr derive(const BvassamSystem& sys, const Fact& goal,
                  std::uint64_t max_size, const DeriveOptions& opts = {});
bool derivable(const BvassamSystem& sys, const Fact& goal,
               std::uint64_t max_size, const DeriveOptions& opts = {});

// Membership of a visible vector v: the accepting state must derive v padded
// with zero memory, within linear_bound * |v| rule applications.  The empty
// vector is never a member.
BvDerivPtr member(const LBvassam& g, const Vec& visible,
                  const DeriveOptions& opts = {});
bool is_member(const LBvassam& g, const Vec& visible,
               const DeriveOptions& opts = {});

// All member vectors componentwise below `cap`, in ascending lexicographic
// order.
std::vector<Vec> enumerate_language(const LBvassam& g, const Vec& cap,
                                    const DeriveOptions& opts = {});

}  // namespace lpgram
