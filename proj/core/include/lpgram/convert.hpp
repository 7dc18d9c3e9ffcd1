#pragma once

#include "lpgram/derive.hpp"
#include "lpgram/grammar.hpp"
#include "lpgram/prover.hpp"

#include <map>

namespace lpgram {

// Primitive names used when a system is encoded as a grammar: one counter
// name per coordinate plus a probe name.  Names must be distinct identifiers
// and must not collide with the system's state names.
struct EncodingNames {
  std::vector<std::string> g;
  std::string f;
};

// g1..gK and f, each suffixed with a number if a state already uses the name.
EncodingNames default_names(const BvassamSystem& sys);

// The product of v[i] copies of each counter primitive, combed to the right
// in coordinate order.  Rejects the zero vector, which has no product form.
TypeRef g_power(const Vec& v, const EncodingNames& names);
// The same counters as a multiset; empty for the zero vector.
TypeMultiset g_multiset(const Vec& v, const EncodingNames& names);

// Types standing for single rules: an axiom q(v) becomes f/g^v/q, a unary
// rule q(x+d2) <- p(x+d1) becomes (p*g^d1)/g^d2/q, and a binary rule
// q(x+y) <- p(x), r(y) becomes f/(f/r)/(f/p)/q.  Zero deltas drop their
// division or product step.
TypeRef encode_axiom(const BvassamSystem& sys, const BvAxiom& ax,
                     const EncodingNames& names);
TypeRef encode_unary(const BvassamSystem& sys, const BvUnary& r,
                     const EncodingNames& names);
TypeRef encode_binary(const BvassamSystem& sys, const BvBinary& r,
                      const EncodingNames& names);

// Grammar with the same language as the system, up to reading words as count
// vectors: symbol ai carries either its counter gi alone or gi times a
// multiset of up to linear_bound rule types.  Distinguished type f/s.
// Requires all state names to be identifiers.
LpGrammar lpg_of(const LBvassam& g);
LpGrammar lpg_of(const LBvassam& g, const EncodingNames& names);

// Rewrites a type whose products occur only inside denominators into an
// equiderivable product-free type: A/(B*C) becomes A/B/C, recursively.
// Rejects a product anywhere else.
TypeRef eliminate_products(TypeRef t);

// Like lpg_of but with every lexicon type product-free.  Each rule bundle A
// yields two entries: f/(f/(s*A))/s, which threads the final s through a
// chain of occurrences, and f/(f/A), which lets a lone occurrence stand on
// its own (the threaded form needs a second antecedent member to discharge
// its inner division, so by itself it derives no one-letter word).  Products
// are then eliminated from both.
LpGrammar lpg_division_only(const LBvassam& g);
LpGrammar lpg_division_only(const LBvassam& g, const EncodingNames& names);

// System built from a grammar.  States are the positive subtypes, the
// negative primitive subtypes, and the quotients C/A of a positive C by a
// negative A; one memory coordinate counts each negative subtype.
struct LbamConstruction {
  LBvassam lbam;
  // The type each state stands for, by state id.
  std::vector<TypeRef> state_types;
  // The negative subtype each memory coordinate counts; null on the visible
  // coordinates.
  std::vector<TypeRef> coordinate_types;
  std::map<TypeRef, std::size_t, TypeBefore> coordinate_of;
  // Unary rules that trade a lexicon type for its symbol, by rule index.
  std::vector<bool> lexicon_unary;
};

LbamConstruction lbam_of(const LpGrammar& g);

// The multiset counted by the memory coordinates of u.  Requires the visible
// coordinates of u to be zero.
TypeMultiset types_of_vector(const Vec& u, const LbamConstruction& con);

// Rebuilds a derivation so that every lexicon-trading rule application sits
// at the root end of the tree.  Preserves the derived fact and validity.
BvDerivPtr postpone_lexicon_rules(const LbamConstruction& con,
                                  const BvDerivPtr& d);

struct EquivMismatch {
  Vec vector;
  bool in_system;
  bool in_grammar;
};

struct EquivReport {
  bool agree = true;
  std::vector<EquivMismatch> mismatches;
};

// Compares the language of a system against the language of its grammar
// encoding, over all vectors componentwise below cap.
EquivReport check_theorem_bvass_to_lp(const LBvassam& g, const Vec& cap,
                                      const DeriveOptions& dopts = {},
                                      const ProveOptions& popts = {});

// Compares the language of a grammar against the language of its system
// encoding, over all words of length at most max_len.
EquivReport check_theorem_lp_to_bvass(const LpGrammar& g, std::size_t max_len,
                                      const DeriveOptions& dopts = {},
                                      const ProveOptions& popts = {});

}  // namespace lpgram
