#include "lpgram/convert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace lpgram {

namespace {

bool is_zero(const Vec& v) {
  for (auto c : v)
    if (c) return false;
  return true;
}

bool name_taken(const std::vector<std::string>& states,
                const std::vector<std::string>& chosen,
                const std::string& name) {
  return std::find(states.begin(), states.end(), name) != states.end() ||
         std::find(chosen.begin(), chosen.end(), name) != chosen.end();
}

std::string fresh_name(const std::vector<std::string>& states,
                       const std::vector<std::string>& chosen,
                       const std::string& base) {
  if (!name_taken(states, chosen, base)) return base;
  for (std::uint64_t i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!name_taken(states, chosen, cand)) return cand;
  }
}

void check_names(const BvassamSystem& sys, const EncodingNames& names) {
  if (names.g.size() != sys.full_dim)
    throw std::invalid_argument("counter name count differs from dimension");
  std::vector<std::string> seen;
  for (const auto& n : names.g) {
    if (!is_identifier(n))
      throw std::invalid_argument("counter name is not an identifier: " + n);
    if (name_taken(sys.states, seen, n))
      throw std::invalid_argument("counter name collides: " + n);
    seen.push_back(n);
  }
  if (!is_identifier(names.f))
    throw std::invalid_argument("probe name is not an identifier: " + names.f);
  if (name_taken(sys.states, seen, names.f))
    throw std::invalid_argument("probe name collides: " + names.f);
}

// Multisets of rule indices of size 0..max_size, each as a nondecreasing
// index sequence, smallest sizes first and lexicographically within a size.
template <class Emit>
void for_each_rule_multiset(std::size_t nrules, std::uint64_t max_size,
                            Emit&& emit) {
  std::vector<std::size_t> pick;
  emit(pick);
  if (nrules == 0) return;
  for (std::uint64_t j = 1; j <= max_size; ++j) {
    pick.assign(j, 0);
    while (true) {
      emit(pick);
      std::size_t i = pick.size();
      bool advanced = false;
      while (i-- > 0) {
        if (pick[i] + 1 < nrules) {
          std::size_t v = pick[i] + 1;
          for (std::size_t t = i; t < pick.size(); ++t) pick[t] = v;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
}

TypeRef comb_product(TypeRef head, const std::vector<TypeRef>& rest) {
  if (rest.empty()) return head;
  TypeRef acc = rest.back();
  for (std::size_t i = rest.size() - 1; i-- > 0;) acc = Type::prod(rest[i], acc);
  return Type::prod(head, acc);
}

}  // namespace

EncodingNames default_names(const BvassamSystem& sys) {
  EncodingNames out;
  std::vector<std::string> chosen;
  for (std::size_t i = 0; i < sys.full_dim; ++i) {
    std::string name =
        fresh_name(sys.states, chosen, "g" + std::to_string(i + 1));
    chosen.push_back(name);
    out.g.push_back(std::move(name));
  }
  out.f = fresh_name(sys.states, chosen, "f");
  return out;
}

TypeRef g_power(const Vec& v, const EncodingNames& names) {
  if (v.size() != names.g.size())
    throw std::invalid_argument("vector length differs from counter names");
  std::vector<TypeRef> factors;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::uint64_t j = 0; j < v[i]; ++j)
      factors.push_back(Type::prim(names.g[i]));
  if (factors.empty())
    throw std::invalid_argument("zero vector has no product form");
  TypeRef acc = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;)
    acc = Type::prod(factors[i], acc);
  return acc;
}

TypeMultiset g_multiset(const Vec& v, const EncodingNames& names) {
  if (v.size() != names.g.size())
    throw std::invalid_argument("vector length differs from counter names");
  TypeMultiset out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) out.add(Type::prim(names.g[i]), static_cast<std::uint32_t>(v[i]));
  return out;
}

TypeRef encode_axiom(const BvassamSystem& sys, const BvAxiom& ax,
                     const EncodingNames& names) {
  TypeRef t = Type::prim(names.f);
  if (!is_zero(ax.vec)) t = Type::div(t, g_power(ax.vec, names));
  return Type::div(t, Type::prim(sys.states[ax.state]));
}

TypeRef encode_unary(const BvassamSystem& sys, const BvUnary& r,
                     const EncodingNames& names) {
  TypeRef t = Type::prim(sys.states[r.source]);
  if (!is_zero(r.delta1)) t = Type::prod(t, g_power(r.delta1, names));
  if (!is_zero(r.delta2)) t = Type::div(t, g_power(r.delta2, names));
  return Type::div(t, Type::prim(sys.states[r.target]));
}

TypeRef encode_binary(const BvassamSystem& sys, const BvBinary& r,
                      const EncodingNames& names) {
  TypeRef f = Type::prim(names.f);
  TypeRef t = Type::div(f, Type::div(f, Type::prim(sys.states[r.right])));
  t = Type::div(t, Type::div(f, Type::prim(sys.states[r.left])));
  return Type::div(t, Type::prim(sys.states[r.target]));
}

namespace {

// The unary encoding with its product lifted into a denominator:
// (f/(f/(p*g^d1)))/g^d2/q instead of (p*g^d1)/g^d2/q.
TypeRef encode_unary_lifted(const BvassamSystem& sys, const BvUnary& r,
                            const EncodingNames& names) {
  TypeRef f = Type::prim(names.f);
  TypeRef inner = Type::prim(sys.states[r.source]);
  if (!is_zero(r.delta1)) inner = Type::prod(inner, g_power(r.delta1, names));
  TypeRef t = Type::div(f, Type::div(f, inner));
  if (!is_zero(r.delta2)) t = Type::div(t, g_power(r.delta2, names));
  return Type::div(t, Type::prim(sys.states[r.target]));
}

std::vector<TypeRef> encoded_rules(const LBvassam& g,
                                   const EncodingNames& names, bool lifted) {
  std::vector<TypeRef> out;
  for (const auto& ax : g.system.axioms)
    out.push_back(encode_axiom(g.system, ax, names));
  for (const auto& r : g.system.unary)
    out.push_back(lifted ? encode_unary_lifted(g.system, r, names)
                         : encode_unary(g.system, r, names));
  for (const auto& r : g.system.binary)
    out.push_back(encode_binary(g.system, r, names));
  return out;
}

void check_encodable(const LBvassam& g, const EncodingNames& names) {
  validate(g);
  for (const auto& st : g.system.states)
    if (!is_identifier(st))
      throw std::invalid_argument("state name is not an identifier: " + st);
  check_names(g.system, names);
}

}  // namespace

LpGrammar lpg_of(const LBvassam& g) {
  return lpg_of(g, default_names(g.system));
}

LpGrammar lpg_of(const LBvassam& g, const EncodingNames& names) {
  check_encodable(g, names);
  const auto& sys = g.system;
  std::vector<TypeRef> rules = encoded_rules(g, names, false);

  LpGrammar out;
  TypeRef f = Type::prim(names.f);
  out.distinguished = Type::div(f, Type::prim(sys.states[sys.accepting]));
  for (std::size_t i = 0; i < sys.visible_dim; ++i)
    out.alphabet.push_back("a" + std::to_string(i + 1));

  for (std::size_t i = 0; i < sys.visible_dim; ++i) {
    TypeRef gi = Type::prim(names.g[i]);
    std::set<TypeRef> seen;
    for_each_rule_multiset(
        rules.size(), g.linear_bound, [&](const std::vector<std::size_t>& pick) {
          std::vector<TypeRef> chosen;
          for (std::size_t r : pick) chosen.push_back(rules[r]);
          TypeRef entry = comb_product(gi, chosen);
          if (seen.insert(entry).second)
            out.lexicon.emplace_back(out.alphabet[i], entry);
        });
  }
  validate(out);
  return out;
}

TypeRef eliminate_products(TypeRef t) {
  if (!t) throw std::invalid_argument("missing type");
  if (t->is_prim()) return t;
  if (t->is_prod())
    throw std::invalid_argument("product outside a denominator: " + t->text());
  TypeRef den = t->right();
  if (!den->is_prod())
    return Type::div(eliminate_products(t->left()), eliminate_products(den));
  std::vector<TypeRef> factors;
  auto collect = [&](auto&& self, TypeRef x) -> void {
    if (x->is_prod()) {
      self(self, x->left());
      self(self, x->right());
    } else {
      factors.push_back(x);
    }
  };
  collect(collect, den);
  TypeRef acc = eliminate_products(t->left());
  for (TypeRef fct : factors) acc = Type::div(acc, eliminate_products(fct));
  return acc;
}

LpGrammar lpg_division_only(const LBvassam& g) {
  return lpg_division_only(g, default_names(g.system));
}

LpGrammar lpg_division_only(const LBvassam& g, const EncodingNames& names) {
  check_encodable(g, names);
  const auto& sys = g.system;
  std::vector<TypeRef> rules = encoded_rules(g, names, true);

  LpGrammar out;
  TypeRef f = Type::prim(names.f);
  TypeRef s = Type::prim(sys.states[sys.accepting]);
  out.distinguished = Type::div(f, s);
  for (std::size_t i = 0; i < sys.visible_dim; ++i)
    out.alphabet.push_back("a" + std::to_string(i + 1));

  for (std::size_t i = 0; i < sys.visible_dim; ++i) {
    TypeRef gi = Type::prim(names.g[i]);
    std::set<TypeRef> seen;
    for_each_rule_multiset(
        rules.size(), g.linear_bound, [&](const std::vector<std::size_t>& pick) {
          std::vector<TypeRef> chosen;
          for (std::size_t r : pick) chosen.push_back(rules[r]);
          TypeRef group = comb_product(gi, chosen);
          TypeRef wrapped =
              Type::div(Type::div(f, Type::div(f, Type::prod(s, group))), s);
          TypeRef entry = eliminate_products(wrapped);
          if (seen.insert(entry).second)
            out.lexicon.emplace_back(out.alphabet[i], entry);
          TypeRef lone = eliminate_products(Type::div(f, Type::div(f, group)));
          if (seen.insert(lone).second)
            out.lexicon.emplace_back(out.alphabet[i], lone);
        });
  }
  validate(out);
  return out;
}

LbamConstruction lbam_of(const LpGrammar& g) {
  validate(g);
  SubtypeSets st = subtype_sets(g);
  const TypeSet& pos = st.positive;
  const TypeSet& neg = st.negative;

  std::vector<std::pair<std::string, TypeRef>> lex;
  {
    std::set<std::pair<std::string, TypeRef>> seen;
    for (const auto& e : g.lexicon)
      if (seen.insert(e).second) lex.push_back(e);
  }

  TypeSet state_set = pos;
  for (TypeRef t : neg)
    if (t->is_prim()) state_set.insert(t);
  for (TypeRef c : pos)
    for (TypeRef a : neg) state_set.insert(Type::div(c, a));

  LbamConstruction con;
  auto& sys = con.lbam.system;
  std::map<TypeRef, StateId, TypeBefore> state_of;
  for (TypeRef t : state_set) {
    state_of.emplace(t, static_cast<StateId>(sys.states.size()));
    sys.states.push_back(t->text());
    con.state_types.push_back(t);
  }

  const std::size_t k = g.alphabet.size();
  const std::size_t K = k + neg.size();
  sys.visible_dim = k;
  sys.full_dim = K;
  con.coordinate_types.assign(K, nullptr);
  {
    std::size_t c = k;
    for (TypeRef t : neg) {
      con.coordinate_of.emplace(t, c);
      con.coordinate_types[c] = t;
      ++c;
    }
  }
  auto unit_of = [&](TypeRef t) {
    Vec v(K, 0);
    v[con.coordinate_of.at(t)] = 1;
    return v;
  };
  std::map<std::string, std::size_t> symbol_coord;
  for (std::size_t i = 0; i < k; ++i) symbol_coord[g.alphabet[i]] = i;

  sys.accepting = state_of.at(g.distinguished);

  for (TypeRef t : neg)
    if (t->is_prim()) sys.axioms.push_back(BvAxiom{state_of.at(t), unit_of(t)});

  // Fold the two counters of a counted product into the product's counter,
  // at any state.
  for (TypeRef t : neg) {
    if (!t->is_prod()) continue;
    Vec d1(K, 0);
    d1[con.coordinate_of.at(t->left())] += 1;
    d1[con.coordinate_of.at(t->right())] += 1;
    for (TypeRef c : pos)
      sys.unary.push_back(
          BvUnary{state_of.at(c), state_of.at(c), d1, unit_of(t)});
  }
  // Enter a division state from its numerator by paying the denominator's
  // counter, and leave it again the other way.
  for (TypeRef t : state_set) {
    if (!t->is_div()) continue;
    sys.unary.push_back(BvUnary{state_of.at(t), state_of.at(t->left()),
                                unit_of(t->right()), Vec(K, 0)});
  }
  for (TypeRef t : state_set) {
    if (!t->is_div()) continue;
    sys.unary.push_back(BvUnary{state_of.at(t->left()), state_of.at(t),
                                Vec(K, 0), unit_of(t->right())});
  }
  con.lexicon_unary.assign(sys.unary.size(), false);
  // Trade a lexicon type's counter for its symbol, at the accepting state.
  for (const auto& [sym, t] : lex) {
    Vec d2(K, 0);
    d2[symbol_coord.at(sym)] = 1;
    sys.unary.push_back(
        BvUnary{sys.accepting, sys.accepting, unit_of(t), std::move(d2)});
    con.lexicon_unary.push_back(true);
  }

  for (TypeRef t : pos)
    if (t->is_prod())
      sys.binary.push_back(BvBinary{state_of.at(t), state_of.at(t->left()),
                                    state_of.at(t->right())});
  for (TypeRef t : neg) {
    if (!t->is_div()) continue;
    for (TypeRef c : pos)
      sys.binary.push_back(BvBinary{state_of.at(Type::div(c, t)),
                                    state_of.at(Type::div(c, t->left())),
                                    state_of.at(t->right())});
  }

  std::size_t m = type_length(g.distinguished);
  for (const auto& [sym, t] : lex) {
    (void)sym;
    m = std::max(m, type_length(t));
  }
  con.lbam.linear_bound = 7 * m;
  validate(con.lbam);
  return con;
}

TypeMultiset types_of_vector(const Vec& u, const LbamConstruction& con) {
  const auto& sys = con.lbam.system;
  if (u.size() != sys.full_dim)
    throw std::invalid_argument("vector length differs from dimension");
  for (std::size_t i = 0; i < sys.visible_dim; ++i)
    if (u[i]) throw std::invalid_argument("visible coordinates must be zero");
  TypeMultiset out;
  for (std::size_t i = sys.visible_dim; i < sys.full_dim; ++i)
    if (u[i])
      out.add(con.coordinate_types[i], static_cast<std::uint32_t>(u[i]));
  return out;
}

BvDerivPtr postpone_lexicon_rules(const LbamConstruction& con,
                                  const BvDerivPtr& d) {
  const auto& sys = con.lbam.system;
  if (!check_derivation(sys, d))
    throw std::invalid_argument("derivation does not validate");
  struct Res {
    BvDerivPtr node;
    std::map<std::size_t, std::uint64_t> removed;
  };
  std::unordered_map<const BvDerivation*, Res> memo;
  auto walk = [&](auto&& self, const BvDerivPtr& node) -> Res {
    auto it = memo.find(node.get());
    if (it != memo.end()) return it->second;
    Res r;
    switch (node->kind) {
      case BvDerivation::Kind::Axiom:
        r.node = node;
        break;
      case BvDerivation::Kind::Unary: {
        Res c = self(self, node->child_a);
        r.removed = std::move(c.removed);
        if (con.lexicon_unary[node->rule_index]) {
          r.node = std::move(c.node);
          ++r.removed[node->rule_index];
        } else {
          r.node = apply_unary(sys, node->rule_index, std::move(c.node));
        }
        break;
      }
      case BvDerivation::Kind::Binary: {
        Res a = self(self, node->child_a);
        Res b = self(self, node->child_b);
        r.node = apply_binary(sys, node->rule_index, std::move(a.node),
                              std::move(b.node));
        r.removed = std::move(a.removed);
        for (const auto& [idx, cnt] : b.removed) r.removed[idx] += cnt;
        break;
      }
    }
    memo.emplace(node.get(), r);
    return r;
  };
  Res top = walk(walk, d);
  BvDerivPtr out = std::move(top.node);
  for (const auto& [idx, cnt] : top.removed)
    for (std::uint64_t i = 0; i < cnt; ++i) out = apply_unary(sys, idx, out);
  return out;
}

namespace {

// Visits every vector componentwise below cap in ascending lexicographic
// order.
template <class Visit>
void for_each_below(const Vec& cap, Visit&& visit) {
  if (cap.empty()) return;
  Vec v(cap.size(), 0);
  while (true) {
    visit(v);
    std::size_t i = v.size();
    while (i-- > 0) {
      if (v[i] < cap[i]) {
        ++v[i];
        break;
      }
      v[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

EquivReport check_theorem_bvass_to_lp(const LBvassam& g, const Vec& cap,
                                      const DeriveOptions& dopts,
                                      const ProveOptions& popts) {
  validate(g);
  if (cap.size() != g.system.visible_dim)
    throw std::invalid_argument("cap length differs from visible dimension");
  EquivReport rep;
  if (is_zero(cap)) return rep;  // only the empty vector, in neither language

  std::set<Vec> in_sys;
  for (const Vec& v : enumerate_language(g, cap, dopts)) in_sys.insert(v);

  LpGrammar lpg = lpg_of(g);
  Prover prover(popts);
  std::set<Vec> in_gram;
  for (const Word& w : enumerate_language(lpg, vec_size(cap), prover)) {
    Vec v = parikh(lpg, w);
    if (vec_leq(v, cap)) in_gram.insert(v);
  }

  for_each_below(cap, [&](const Vec& v) {
    bool s = in_sys.count(v) > 0;
    bool gr = in_gram.count(v) > 0;
    if (s != gr) {
      rep.agree = false;
      rep.mismatches.push_back(EquivMismatch{v, s, gr});
    }
  });
  return rep;
}

EquivReport check_theorem_lp_to_bvass(const LpGrammar& g, std::size_t max_len,
                                      const DeriveOptions& dopts,
                                      const ProveOptions& popts) {
  validate(g);
  if (max_len == 0)
    throw std::invalid_argument("length bound must be positive");
  LbamConstruction con = lbam_of(g);

  Prover prover(popts);
  std::set<Vec> in_gram;
  for (const Word& w : enumerate_language(g, max_len, prover))
    in_gram.insert(parikh(g, w));

  EquivReport rep;
  std::set<Vec> in_sys;
  Vec cap(g.alphabet.size(), max_len);
  for_each_below(cap, [&](const Vec& v) {
    std::uint64_t n = vec_size(v);
    if (n == 0 || n > max_len) return;
    if (is_member(con.lbam, v, dopts)) in_sys.insert(v);
  });
  for_each_below(cap, [&](const Vec& v) {
    if (vec_size(v) > max_len) return;
    bool s = in_sys.count(v) > 0;
    bool gr = in_gram.count(v) > 0;
    if (s != gr) {
      rep.agree = false;
      rep.mismatches.push_back(EquivMismatch{v, s, gr});
    }
  });
  return rep;
}

}  // namespace lpgram
