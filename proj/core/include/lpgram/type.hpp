#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpgram {

class Type;
using TypeRef = const Type*;

enum class TypeKind : std::uint8_t { Prim, Div, Prod };

// An interned type of the product/division calculus: a primitive, a division
// A/B, or a product A*B.  Instances are created through the factories below,
// are immutable, and live for the lifetime of the process, so pointer equality
// is structural equality and TypeRef can be used freely as a map key.
class Type {
public:
  TypeKind kind() const { return kind_; }
  bool is_prim() const { return kind_ == TypeKind::Prim; }
  bool is_div() const { return kind_ == TypeKind::Div; }
  bool is_prod() const { return kind_ == TypeKind::Prod; }

  // Prim only.
  const std::string& name() const { return name_; }

  // Div: numerator / Prod: left factor.
  TypeRef left() const { return left_; }
  // Div: denominator / Prod: right factor.
  TypeRef right() const { return right_; }

  // Number of primitive occurrences plus connectives: |p| = 1,
  // |A/B| = |A*B| = |A| + |B| + 1.
  std::size_t length() const { return length_; }

  // Canonical printed form; parsing it yields this type back.
  const std::string& text() const { return text_; }

  std::size_t hash() const { return hash_; }

  // Net occurrence count of every primitive, counted +1 in positive position
  // and -1 in negative position (the denominator flips sign).  Sorted by
  // primitive id.  Provable sequents balance these, which makes the vector a
  // cheap refutation filter.
  const std::vector<std::pair<const Type*, int>>& balance() const { return balance_; }

  // The canonical order used everywhere a deterministic arrangement of types
  // is needed: by length first, then by printed form.
  static bool before(TypeRef a, TypeRef b);

  static TypeRef prim(std::string_view name);
  static TypeRef div(TypeRef numerator, TypeRef denominator);
  static TypeRef prod(TypeRef left, TypeRef right);

  Type(const Type&) = delete;
  Type& operator=(const Type&) = delete;

private:
  // Construction passkey: only the intern table can mint instances, but the
  // container's allocator still needs a public constructor to call.
  struct Passkey {
    explicit Passkey() = default;
  };

public:
  explicit Type(Passkey) {}

private:
  friend class TypeTable;

  TypeKind kind_ = TypeKind::Prim;
  std::string name_;
  TypeRef left_ = nullptr;
  TypeRef right_ = nullptr;
  std::size_t length_ = 1;
  std::size_t hash_ = 0;
  std::string text_;
  std::vector<std::pair<const Type*, int>> balance_;
};

struct TypeBefore {
  bool operator()(TypeRef a, TypeRef b) const { return Type::before(a, b); }
};

inline std::size_t type_length(TypeRef t) { return t->length(); }

// Depth of a division-only type: d(p) = 0, d(A/B) = max(d(A), d(B) + 1).
// Rejects any type containing a product.
std::size_t type_depth(TypeRef t);

// True if the string is a valid primitive name: nonempty, [A-Za-z0-9_] only.
bool is_identifier(std::string_view s);

}  // namespace lpgram
