#include "lpgram/type.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace lpgram {
namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  // Boost-style combine.
  return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

// Merge two signed primitive-count vectors, scaling the second by sign.
std::vector<std::pair<const Type*, int>> merge_balance(
    const std::vector<std::pair<const Type*, int>>& a,
    const std::vector<std::pair<const Type*, int>>& b, int sign) {
  std::vector<std::pair<const Type*, int>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign * b[j].second);
      ++j;
    } else {
      int v = a[i].second + sign * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

// Process-wide intern table.  Creation is mutex-protected; lookups of already
// constructed types never touch the table again since TypeRef is the handle.
class TypeTable {
public:
  static TypeTable& instance() {
    static TypeTable table;
    return table;
  }

  TypeRef prim(std::string_view name) {
    if (!is_identifier(name))
      throw std::invalid_argument("invalid primitive name: '" + std::string(name) + "'");
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = prims_.find(std::string(name));
    if (it != prims_.end()) return it->second;
    Type& t = nodes_.emplace_back(Type::Passkey{});
    t.kind_ = TypeKind::Prim;
    t.name_ = std::string(name);
    t.length_ = 1;
    t.text_ = t.name_;
    t.hash_ = mix(std::hash<std::string>{}(t.name_), 0x1);
    t.balance_ = {{&t, 1}};
    prims_.emplace(t.name_, &t);
    return &t;
  }

  TypeRef binary(TypeKind kind, TypeRef a, TypeRef b) {
    std::lock_guard<std::mutex> lock(mutex_);
    Key key{kind, a, b};
    auto it = composites_.find(key);
    if (it != composites_.end()) return it->second;
    Type& t = nodes_.emplace_back(Type::Passkey{});
    t.kind_ = kind;
    t.left_ = a;
    t.right_ = b;
    t.length_ = a->length() + b->length() + 1;
    t.text_ = print(kind, a, b);
    t.hash_ = mix(mix(a->hash(), b->hash()), kind == TypeKind::Div ? 0x2 : 0x3);
    t.balance_ = merge_balance(a->balance(), b->balance(), kind == TypeKind::Div ? -1 : 1);
    composites_.emplace(key, &t);
    return &t;
  }

private:
  struct Key {
    TypeKind kind;
    TypeRef a;
    TypeRef b;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return mix(mix(k.a->hash(), k.b->hash()), static_cast<std::size_t>(k.kind));
    }
  };

  // Printing policy: '/' is left associative, '*' is right associative and
  // binds tighter.  A product adjacent to '/' and a division inside anything
  // get parentheses, which reproduces the conventional notation
  // (e.g. "f/(f/r)/(f/p)/q", "(p*g1)/g2/q", "g1*(f/g1/s)").
  static std::string print(TypeKind kind, TypeRef a, TypeRef b) {
    auto wrap = [](TypeRef t, bool need) {
      return need ? "(" + t->text() + ")" : t->text();
    };
    if (kind == TypeKind::Div)
      return wrap(a, a->is_prod()) + "/" + wrap(b, !b->is_prim());
    return wrap(a, !a->is_prim()) + "*" + wrap(b, b->is_div());
  }

  std::mutex mutex_;
  std::deque<Type> nodes_;
  std::unordered_map<std::string, TypeRef> prims_;
  std::unordered_map<Key, TypeRef, KeyHash> composites_;
};

TypeRef Type::prim(std::string_view name) { return TypeTable::instance().prim(name); }

TypeRef Type::div(TypeRef numerator, TypeRef denominator) {
  return TypeTable::instance().binary(TypeKind::Div, numerator, denominator);
}

TypeRef Type::prod(TypeRef left, TypeRef right) {
  return TypeTable::instance().binary(TypeKind::Prod, left, right);
}

bool Type::before(TypeRef a, TypeRef b) {
  if (a == b) return false;
  if (a->length() != b->length()) return a->length() < b->length();
  return a->text() < b->text();
}

std::size_t type_depth(TypeRef t) {
  switch (t->kind()) {
    case TypeKind::Prim:
      return 0;
    case TypeKind::Div: {
      std::size_t num = type_depth(t->left());
      std::size_t den = type_depth(t->right()) + 1;
      return num > den ? num : den;
    }
    case TypeKind::Prod:
      throw std::invalid_argument("depth is defined for division-only types; got " + t->text());
  }
  return 0;  // unreachable
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace lpgram
