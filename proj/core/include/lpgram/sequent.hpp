#pragma once

#include <string>

#include "lpgram/multiset.hpp"
#include "lpgram/type.hpp"

namespace lpgram {

// A sequent "A1, ..., An -> B" with a nonempty antecedent multiset.  Treated
// as immutable once constructed; the hash is computed eagerly so sequents are
// cheap memoization keys.
class Sequent {
public:
  Sequent(TypeMultiset antecedent, TypeRef succedent);

  const TypeMultiset& antecedent() const { return antecedent_; }
  TypeRef succedent() const { return succedent_; }

  // Total length of all antecedent members plus the succedent.
  std::size_t length() const { return length_; }

  std::size_t hash() const { return hash_; }

  std::string to_string() const;

  bool operator==(const Sequent& other) const {
    return succedent_ == other.succedent_ && antecedent_ == other.antecedent_;
  }
  bool operator<(const Sequent& other) const;

private:
  TypeMultiset antecedent_;
  TypeRef succedent_;
  std::size_t length_;
  std::size_t hash_;
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const { return s.hash(); }
};

inline std::size_t sequent_length(const Sequent& s) { return s.length(); }

// Net primitive counts cancel between antecedent and succedent in every
// provable sequent; an unbalanced sequent is unprovable.
bool is_balanced(const Sequent& s);

// Replaces the designated antecedent occurrence of a product A*B by the two
// members A, B.  The member must be present and must be a product.
Sequent invert_prod_left(const Sequent& s, TypeRef member);

// Turns "Pi -> B/A" into "Pi, A -> B".  The succedent must be a division.
Sequent invert_div_right(const Sequent& s);

}  // namespace lpgram
