#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpgram/prover.hpp"
#include "lpgram/sequent.hpp"

namespace lpgram {

// Words are commutative here: derivability is stable under permuting the
// antecedent, so membership only depends on how many times each symbol
// occurs.
using Word = std::map<std::string, std::uint32_t>;

std::size_t word_length(const Word& w);

// A categorial grammar: finitely many type assignments per symbol plus a
// distinguished goal type.  A word belongs to the language when some choice
// of one assigned type per occurrence yields a derivable sequent against the
// goal type.
struct LpGrammar {
  std::vector<std::string> alphabet;
  std::vector<std::pair<std::string, TypeRef>> lexicon;
  TypeRef distinguished;
};

// Throws std::invalid_argument on duplicate or non-identifier alphabet
// entries, lexicon symbols outside the alphabet, or missing types.
void validate(const LpGrammar& g);

using TypeSet = std::set<TypeRef, TypeBefore>;

// Subtype occurrences split by polarity.  The goal type seeds the positive
// side, lexicon types the negative side; a division flips the polarity of its
// denominator, a product keeps both factors.
struct SubtypeSets {
  TypeSet positive;
  TypeSet negative;
};

void collect_subtypes(TypeRef t, bool positive, SubtypeSets& out);
SubtypeSets subtype_sets(const LpGrammar& g);

// Words are multisets, so the witness records the chosen types as a multiset
// rather than attributing one to each occurrence.
struct MembershipWitness {
  TypeMultiset types;
  ProofPtr proof;
};

bool is_member(const LpGrammar& g, const Word& w, Prover& prover);
std::optional<MembershipWitness> member(const LpGrammar& g, const Word& w,
                                        Prover& prover);

// All words of length 1..max_len in the language, iterated in graded
// lexicographic order of their count vectors.  Rejects max_len = 0.
std::vector<Word> enumerate_language(const LpGrammar& g, std::size_t max_len,
                                     Prover& prover);

// Word <-> occurrence-count vector over the grammar's alphabet order.
std::vector<std::uint64_t> parikh(const LpGrammar& g, const Word& w);
Word inverse_parikh(const LpGrammar& g, const std::vector<std::uint64_t>& v);

}  // namespace lpgram
