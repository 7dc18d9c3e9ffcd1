#include "lpgram/bvassam.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lpgram {

std::uint64_t vec_size(const Vec& v) {
  std::uint64_t n = 0;
  for (auto c : v) n += c;
  return n;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::optional<Vec> vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return std::nullopt;
    out[i] = a[i] - b[i];
  }
  return out;
}

bool vec_leq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

Vec pad_vector(const Vec& visible, std::size_t full_dim) {
  if (visible.size() > full_dim)
    throw std::invalid_argument("visible vector longer than full dimension");
  Vec out(full_dim, 0);
  for (std::size_t i = 0; i < visible.size(); ++i) out[i] = visible[i];
  return out;
}

void validate(const BvassamSystem& sys) {
  if (sys.states.empty()) throw std::invalid_argument("system has no states");
  std::set<std::string> seen;
  for (const auto& name : sys.states) {
    if (name.empty()) throw std::invalid_argument("empty state name");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate state name: " + name);
  }
  if (sys.visible_dim > sys.full_dim)
    throw std::invalid_argument("visible dimension exceeds full dimension");
  auto check_state = [&](StateId q, const char* what) {
    if (q >= sys.states.size())
      throw std::invalid_argument(std::string(what) + " state out of range");
  };
  auto check_vec = [&](const Vec& v, const char* what) {
    if (v.size() != sys.full_dim)
      throw std::invalid_argument(std::string(what) +
                                  " vector length differs from dimension");
  };
  check_state(sys.accepting, "accepting");
  for (const auto& ax : sys.axioms) {
    check_state(ax.state, "axiom");
    check_vec(ax.vec, "axiom");
  }
  for (const auto& r : sys.unary) {
    check_state(r.target, "unary target");
    check_state(r.source, "unary source");
    check_vec(r.delta1, "unary");
    check_vec(r.delta2, "unary");
  }
  for (const auto& r : sys.binary) {
    check_state(r.target, "binary target");
    check_state(r.left, "binary left");
    check_state(r.right, "binary right");
  }
}

void validate(const LBvassam& g) {
  validate(g.system);
  if (g.linear_bound == 0)
    throw std::invalid_argument("linear bound must be positive");
}

bool operator==(const Fact& a, const Fact& b) {
  return a.state == b.state && a.vec == b.vec;
}

bool operator!=(const Fact& a, const Fact& b) { return !(a == b); }

std::string fact_to_string(const BvassamSystem& sys, const Fact& f) {
  std::string name = f.state < sys.states.size() ? sys.states[f.state]
                                                 : "?" + std::to_string(f.state);
  return name + vec_to_string(f.vec);
}

BvDerivPtr make_axiom_node(const BvassamSystem& sys, std::size_t axiom_index) {
  if (axiom_index >= sys.axioms.size())
    throw std::invalid_argument("axiom index out of range");
  const auto& ax = sys.axioms[axiom_index];
  return std::make_shared<BvDerivation>(BvDerivation{
      BvDerivation::Kind::Axiom, axiom_index, Fact{ax.state, ax.vec}, {}, {}});
}

BvDerivPtr apply_unary(const BvassamSystem& sys, std::size_t rule_index,
                       BvDerivPtr premise) {
  if (rule_index >= sys.unary.size())
    throw std::invalid_argument("unary rule index out of range");
  if (!premise) throw std::invalid_argument("missing premise");
  const auto& r = sys.unary[rule_index];
  if (premise->fact.state != r.source)
    throw std::invalid_argument("premise state differs from rule source");
  auto base = vec_sub(premise->fact.vec, r.delta1);
  if (!base) throw std::invalid_argument("premise vector under rule threshold");
  return std::make_shared<BvDerivation>(
      BvDerivation{BvDerivation::Kind::Unary, rule_index,
                   Fact{r.target, vec_add(*base, r.delta2)},
                   std::move(premise), {}});
}

BvDerivPtr apply_binary(const BvassamSystem& sys, std::size_t rule_index,
                        BvDerivPtr left, BvDerivPtr right) {
  if (rule_index >= sys.binary.size())
    throw std::invalid_argument("binary rule index out of range");
  if (!left || !right) throw std::invalid_argument("missing premise");
  const auto& r = sys.binary[rule_index];
  if (left->fact.state != r.left)
    throw std::invalid_argument("left premise state differs from rule");
  if (right->fact.state != r.right)
    throw std::invalid_argument("right premise state differs from rule");
  return std::make_shared<BvDerivation>(
      BvDerivation{BvDerivation::Kind::Binary, rule_index,
                   Fact{r.target, vec_add(left->fact.vec, right->fact.vec)},
                   std::move(left), std::move(right)});
}

std::uint64_t derivation_size(const BvDerivPtr& d) {
  // Shared subtrees count once per occurrence; memoise by node identity.
  std::unordered_map<const BvDerivation*, std::uint64_t> memo;
  auto walk = [&](auto&& self, const BvDerivPtr& node) -> std::uint64_t {
    if (!node) return 0;
    auto it = memo.find(node.get());
    if (it != memo.end()) return it->second;
    std::uint64_t n = node->kind == BvDerivation::Kind::Axiom ? 0 : 1;
    n += self(self, node->child_a);
    n += self(self, node->child_b);
    memo.emplace(node.get(), n);
    return n;
  };
  return walk(walk, d);
}

bool check_derivation(const BvassamSystem& sys, const BvDerivPtr& d) {
  if (!d) return false;
  std::unordered_map<const BvDerivation*, bool> memo;
  auto walk = [&](auto&& self, const BvDerivPtr& node) -> bool {
    auto it = memo.find(node.get());
    if (it != memo.end()) return it->second;
    bool ok = false;
    switch (node->kind) {
      case BvDerivation::Kind::Axiom: {
        ok = !node->child_a && !node->child_b &&
             node->rule_index < sys.axioms.size() &&
             node->fact.state == sys.axioms[node->rule_index].state &&
             node->fact.vec == sys.axioms[node->rule_index].vec;
        break;
      }
      case BvDerivation::Kind::Unary: {
        if (!node->child_a || node->child_b ||
            node->rule_index >= sys.unary.size() || !self(self, node->child_a))
          break;
        const auto& r = sys.unary[node->rule_index];
        const auto& prem = node->child_a->fact;
        if (prem.state != r.source) break;
        auto base = vec_sub(prem.vec, r.delta1);
        ok = base && node->fact.state == r.target &&
             node->fact.vec == vec_add(*base, r.delta2);
        break;
      }
      case BvDerivation::Kind::Binary: {
        if (!node->child_a || !node->child_b ||
            node->rule_index >= sys.binary.size() ||
            !self(self, node->child_a) || !self(self, node->child_b))
          break;
        const auto& r = sys.binary[node->rule_index];
        ok = node->child_a->fact.state == r.left &&
             node->child_b->fact.state == r.right &&
             node->fact.state == r.target &&
             node->fact.vec ==
                 vec_add(node->child_a->fact.vec, node->child_b->fact.vec);
        break;
      }
    }
    memo.emplace(node.get(), ok);
    return ok;
  };
  return walk(walk, d);
}

}  // namespace lpgram
