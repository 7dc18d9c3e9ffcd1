#pragma once

#include <cstdint>
#include <unordered_map>

#include "lpgram/proof.hpp"
#include "lpgram/sequent.hpp"

namespace lpgram {

struct ProveOptions {
  // Number of distinct sequents the backward search may expand per query.
  // 0 disables the cap.  Exceeding it throws BudgetExceeded.
  std::uint64_t max_expansions = 1'000'000;
  // When false the prover only records verdicts, which keeps the memo small
  // for bulk sweeps; prove() is then unavailable.
  bool witnesses = true;
};

// Decision procedure for derivability.  Backward search from the goal is
// exhaustive and terminates because every rule's premises jointly shed one
// symbol of sequent length.  Invertible rules (product on the left, division
// on the right) are applied eagerly, which preserves completeness.  Results
// are memoized across queries, so a long-lived instance amortizes sweeps over
// overlapping sequents.
class Prover {
 public:
  explicit Prover(ProveOptions opts = {});

  bool provable(const Sequent& s);

  // Returns a checked derivation tree, or null when the sequent has none.
  // Requires the instance to have been created with witnesses enabled.
  ProofPtr prove(const Sequent& s);

  std::uint64_t last_expansions() const { return expansions_; }
  std::size_t memo_entries() const { return memo_.size(); }

 private:
  struct Entry {
    bool ok;
    ProofPtr proof;
  };

  Entry decide(const Sequent& s);
  Entry search_div_left(const Sequent& s);
  Entry search_prod_right(const Sequent& s);
  void bump();

  std::uint64_t max_expansions_;
  bool witnesses_;
  std::uint64_t expansions_ = 0;
  std::unordered_map<Sequent, Entry, SequentHash> memo_;
};

}  // namespace lpgram
