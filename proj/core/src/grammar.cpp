#include "lpgram/grammar.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpgram {

std::size_t word_length(const Word& w) {
  std::size_t n = 0;
  for (const auto& [sym, cnt] : w) {
    (void)sym;
    n += cnt;
  }
  return n;
}

void validate(const LpGrammar& g) {
  if (!g.distinguished)
    throw std::invalid_argument("grammar lacks a distinguished type");
  std::set<std::string> seen;
  for (const auto& sym : g.alphabet) {
    if (!is_identifier(sym))
      throw std::invalid_argument("alphabet symbol is not an identifier: " + sym);
    if (!seen.insert(sym).second)
      throw std::invalid_argument("duplicate alphabet symbol: " + sym);
  }
  for (const auto& [sym, t] : g.lexicon) {
    if (!seen.count(sym))
      throw std::invalid_argument("lexicon symbol outside alphabet: " + sym);
    if (!t) throw std::invalid_argument("lexicon entry lacks a type");
  }
}

void collect_subtypes(TypeRef t, bool positive, SubtypeSets& out) {
  (positive ? out.positive : out.negative).insert(t);
  if (t->is_div()) {
    collect_subtypes(t->left(), positive, out);
    collect_subtypes(t->right(), !positive, out);
  } else if (t->is_prod()) {
    collect_subtypes(t->left(), positive, out);
    collect_subtypes(t->right(), positive, out);
  }
}

SubtypeSets subtype_sets(const LpGrammar& g) {
  SubtypeSets out;
  collect_subtypes(g.distinguished, true, out);
  for (const auto& [sym, t] : g.lexicon) {
    (void)sym;
    collect_subtypes(t, false, out);
  }
  return out;
}

namespace {

// Deduplicated types assigned to each symbol, in canonical type order.
std::map<std::string, std::vector<TypeRef>> assignments_by_symbol(
    const LpGrammar& g) {
  std::map<std::string, TypeSet> sets;
  for (const auto& [sym, t] : g.lexicon) sets[sym].insert(t);
  std::map<std::string, std::vector<TypeRef>> out;
  for (auto& [sym, set] : sets)
    out.emplace(sym, std::vector<TypeRef>(set.begin(), set.end()));
  return out;
}

struct SymbolChoice {
  std::string symbol;
  std::uint32_t count;
  std::vector<TypeRef> options;
  // Nondecreasing option indices, one per occurrence: a multiset of size
  // `count` drawn from `options`.
  std::vector<std::size_t> pick;
};

bool first_pick(SymbolChoice& sc) {
  if (sc.options.empty()) return false;
  sc.pick.assign(sc.count, 0);
  return true;
}

// Next nondecreasing index vector in lexicographic order.
bool next_pick(SymbolChoice& sc) {
  std::size_t k = sc.options.size();
  for (std::size_t i = sc.pick.size(); i-- > 0;) {
    if (sc.pick[i] + 1 < k) {
      std::size_t v = sc.pick[i] + 1;
      for (std::size_t j = i; j < sc.pick.size(); ++j) sc.pick[j] = v;
      return true;
    }
  }
  return false;
}

template <typename Visit>
bool for_each_assignment(const LpGrammar& g, const Word& w, Visit&& visit) {
  std::vector<SymbolChoice> choices;
  auto table = assignments_by_symbol(g);
  for (const auto& [sym, cnt] : w) {
    if (cnt == 0) continue;
    auto it = table.find(sym);
    if (it == table.end()) return false;  // no assignment can cover sym
    choices.push_back(SymbolChoice{sym, cnt, it->second, {}});
  }
  if (choices.empty()) return false;
  for (auto& sc : choices)
    if (!first_pick(sc)) return false;

  while (true) {
    if (visit(choices)) return true;
    // Advance the last symbol's pick first.
    std::size_t i = choices.size();
    while (i-- > 0) {
      if (next_pick(choices[i])) break;
      first_pick(choices[i]);
      if (i == 0) return false;
    }
  }
}

void require_known_symbols(const LpGrammar& g, const Word& w) {
  for (const auto& [sym, cnt] : w) {
    if (cnt == 0) continue;
    if (std::find(g.alphabet.begin(), g.alphabet.end(), sym) ==
        g.alphabet.end())
      throw std::invalid_argument("word symbol outside alphabet: " + sym);
  }
}

}  // namespace

bool is_member(const LpGrammar& g, const Word& w, Prover& prover) {
  require_known_symbols(g, w);
  if (word_length(w) == 0) return false;
  return for_each_assignment(g, w, [&](const std::vector<SymbolChoice>& cs) {
    TypeMultiset ante;
    for (const auto& sc : cs)
      for (std::size_t idx : sc.pick) ante.add(sc.options[idx]);
    return prover.provable(Sequent(std::move(ante), g.distinguished));
  });
}

std::optional<MembershipWitness> member(const LpGrammar& g, const Word& w,
                                        Prover& prover) {
  require_known_symbols(g, w);
  if (word_length(w) == 0) return std::nullopt;
  std::optional<MembershipWitness> found;
  for_each_assignment(g, w, [&](const std::vector<SymbolChoice>& cs) {
    TypeMultiset ante;
    for (const auto& sc : cs)
      for (std::size_t idx : sc.pick) ante.add(sc.options[idx]);
    ProofPtr proof = prover.prove(Sequent(ante, g.distinguished));
    if (!proof) return false;
    found = MembershipWitness{std::move(ante), std::move(proof)};
    return true;
  });
  return found;
}

std::vector<Word> enumerate_language(const LpGrammar& g, std::size_t max_len,
                                     Prover& prover) {
  if (max_len == 0) throw std::invalid_argument("enumeration bound must be positive");
  std::vector<Word> out;
  std::vector<std::uint32_t> counts(g.alphabet.size(), 0);

  auto emit_if_member = [&]() {
    Word w;
    for (std::size_t i = 0; i < counts.size(); ++i)
      if (counts[i]) w[g.alphabet[i]] = counts[i];
    if (is_member(g, w, prover)) out.push_back(std::move(w));
  };

  // Distribute n occurrences across the alphabet so the count vectors of a
  // given length come out in ascending lexicographic order.
  auto distribute = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == counts.size()) {
      counts[pos] = left;
      emit_if_member();
      return;
    }
    for (std::uint32_t c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };

  for (std::size_t n = 1; n <= max_len; ++n) {
    if (g.alphabet.empty()) break;
    distribute(distribute, 0, static_cast<std::uint32_t>(n));
  }
  return out;
}

std::vector<std::uint64_t> parikh(const LpGrammar& g, const Word& w) {
  std::vector<std::uint64_t> v(g.alphabet.size(), 0);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.alphabet.size(); ++i) index[g.alphabet[i]] = i;
  for (const auto& [sym, cnt] : w) {
    auto it = index.find(sym);
    if (it == index.end())
      throw std::invalid_argument("word symbol outside alphabet: " + sym);
    v[it->second] = cnt;
  }
  return v;
}

Word inverse_parikh(const LpGrammar& g, const std::vector<std::uint64_t>& v) {
  if (v.size() != g.alphabet.size())
    throw std::invalid_argument("count vector length differs from alphabet");
  Word w;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) w[g.alphabet[i]] = static_cast<std::uint32_t>(v[i]);
  return w;
}

}  // namespace lpgram
