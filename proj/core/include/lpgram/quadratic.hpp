#pragma once

#include "lpgram/derive.hpp"

#include <utility>

namespace lpgram {

// A two-symbol system whose language is {(l, n) : n > 0, l <= n*n}, with
// coordinate 0 counting `a` and coordinate 1 counting `b`.  Five memory
// coordinates stage the computation; the linear bound is 4.
LBvassam quadratic_system();

bool quadratic_oracle(std::uint64_t n, std::uint64_t l);

// The staged chain derivation: mark n slots, then run n rounds where round i
// spends `spend[i]` slots into a's and restores `restore[i]` of them.
// Requires spend[i] <= slots currently live and restore[i] <= slots spent so
// far; throws std::invalid_argument otherwise.  The result is a pure unary
// chain of exactly 3n + spend-total + restore-total + 1 rule applications.
BvDerivPtr typical_derivation(std::uint64_t n,
                              const std::vector<std::uint64_t>& spend,
                              const std::vector<std::uint64_t>& restore);

// Round schedule that realises (l, n) membership: fill rounds with n spends
// each until l is exhausted, restoring everything each round.
// Pre: n > 0 and l <= n*n.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
typical_schedule(std::uint64_t n, std::uint64_t l);

// True when the derivation is a unary chain following the staged discipline
// (any prefix of it counts as well).
bool is_typical(const BvDerivPtr& d);

struct QuadraticCheck {
  struct Item {
    std::uint64_t n;
    std::uint64_t l;
    bool member;
    bool expected;
  };
  bool agree = true;
  std::vector<Item> disagreements;
};

// Compares membership against the closed form on the full (n, l) grid.
QuadraticCheck check_quadratic_language(std::uint64_t n_max,
                                        std::uint64_t l_max,
                                        const DeriveOptions& opts = {});

}  // namespace lpgram
