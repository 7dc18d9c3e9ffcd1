#include "lpgram/quadratic.hpp"

#include <stdexcept>

namespace lpgram {

namespace {

// Coordinate layout: 0 = a, 1 = b, then memory 2 = setup marker,
// 3 = running marker, 4 = paused marker, 5 = round ticket, 6 = spent slot.
enum : std::size_t { A, B, IDLE, RUN, PAUSE, TICKET, SPENT, DIM };

Vec unit(std::size_t i) {
  Vec v(DIM, 0);
  v[i] = 1;
  return v;
}

Vec units(std::initializer_list<std::size_t> is) {
  Vec v(DIM, 0);
  for (auto i : is) ++v[i];
  return v;
}

// Rule indices in the order they are declared below.
enum : std::size_t {
  kLoad,     // idle -> idle, minting a slot and a ticket
  kCommit,   // idle -> running
  kSpend,    // running: turn a live slot into an a plus a spent marker
  kPause,    // running + ticket -> paused
  kRestore,  // paused: turn a spent marker back into a live slot
  kResume,   // paused -> running
  kFinish,   // drop the running marker
};

}  // namespace

LBvassam quadratic_system() {
  BvassamSystem sys;
  sys.states = {"s"};
  sys.visible_dim = 2;
  sys.full_dim = DIM;
  sys.accepting = 0;
  sys.axioms.push_back(BvAxiom{0, unit(IDLE)});
  auto rule = [&](Vec d1, Vec d2) {
    sys.unary.push_back(BvUnary{0, 0, std::move(d1), std::move(d2)});
  };
  rule(unit(IDLE), units({IDLE, B, TICKET}));      // kLoad
  rule(unit(IDLE), units({RUN, B, TICKET}));       // kCommit
  rule(units({RUN, B}), units({RUN, SPENT, A}));   // kSpend
  rule(units({RUN, TICKET}), unit(PAUSE));         // kPause
  rule(units({PAUSE, SPENT}), units({PAUSE, B}));  // kRestore
  rule(unit(PAUSE), unit(RUN));                    // kResume
  rule(unit(RUN), Vec(DIM, 0));                    // kFinish
  return LBvassam{std::move(sys), 4};
}

bool quadratic_oracle(std::uint64_t n, std::uint64_t l) {
  return n > 0 && l <= n * n;
}

BvDerivPtr typical_derivation(std::uint64_t n,
                              const std::vector<std::uint64_t>& spend,
                              const std::vector<std::uint64_t>& restore) {
  if (n == 0) throw std::invalid_argument("round count must be positive");
  if (spend.size() != n || restore.size() != n)
    throw std::invalid_argument("schedule length differs from round count");
  // live = b's at the start of a round, spent = markers available to restore.
  std::uint64_t live = n;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (spend[i] > live)
      throw std::invalid_argument("round spends more slots than are live");
    if (restore[i] > n - live + spend[i])
      throw std::invalid_argument("round restores more slots than were spent");
    live = live - spend[i] + restore[i];
  }

  LBvassam g = quadratic_system();
  const auto& sys = g.system;
  BvDerivPtr d = make_axiom_node(sys, 0);
  for (std::uint64_t i = 1; i < n; ++i) d = apply_unary(sys, kLoad, d);
  d = apply_unary(sys, kCommit, d);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < spend[i]; ++j) d = apply_unary(sys, kSpend, d);
    d = apply_unary(sys, kPause, d);
    for (std::uint64_t j = 0; j < restore[i]; ++j)
      d = apply_unary(sys, kRestore, d);
    d = apply_unary(sys, kResume, d);
  }
  return apply_unary(sys, kFinish, d);
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
typical_schedule(std::uint64_t n, std::uint64_t l) {
  if (!quadratic_oracle(n, l))
    throw std::invalid_argument("no schedule outside the language");
  std::vector<std::uint64_t> spend(n, 0);
  std::uint64_t full = l / n;
  for (std::uint64_t i = 0; i < full; ++i) spend[i] = n;
  if (full < n) spend[full] = l - full * n;
  return {spend, spend};
}

bool is_typical(const BvDerivPtr& d) {
  if (!d) return false;
  std::vector<std::size_t> labels;
  const BvDerivation* at = d.get();
  while (at->kind == BvDerivation::Kind::Unary) {
    labels.push_back(at->rule_index);
    at = at->child_a.get();
  }
  if (at->kind != BvDerivation::Kind::Axiom) return false;
  // Leaf to root, the labels must read as a prefix of
  // load* commit (spend* pause restore* resume)* finish.
  enum { Idle, Running, Paused, Done } st = Idle;
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    switch (st) {
      case Idle:
        if (*it == kLoad) continue;
        if (*it == kCommit) { st = Running; continue; }
        return false;
      case Running:
        if (*it == kSpend) continue;
        if (*it == kPause) { st = Paused; continue; }
        if (*it == kFinish) { st = Done; continue; }
        return false;
      case Paused:
        if (*it == kRestore) continue;
        if (*it == kResume) { st = Running; continue; }
        return false;
      case Done:
        return false;
    }
  }
  return true;
}

QuadraticCheck check_quadratic_language(std::uint64_t n_max,
                                        std::uint64_t l_max,
                                        const DeriveOptions& opts) {
  LBvassam g = quadratic_system();
  QuadraticCheck out;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    for (std::uint64_t l = 0; l <= l_max; ++l) {
      bool got = is_member(g, Vec{l, n}, opts);
      bool want = quadratic_oracle(n, l);
      if (got != want) {
        out.agree = false;
        out.disagreements.push_back(QuadraticCheck::Item{n, l, got, want});
      }
    }
  }
  return out;
}

}  // namespace lpgram
