#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "lpgram/type.hpp"

namespace lpgram {

// A finite multiset of types kept in canonical (length, text) order, so two
// multisets are equal exactly when their item vectors are.  This is what makes
// the permutation rule implicit: antecedents are stored canonically and any
// reordering of the same types produces the same object.
class TypeMultiset {
public:
  using Item = std::pair<TypeRef, std::uint32_t>;

  TypeMultiset() = default;
  TypeMultiset(std::initializer_list<TypeRef> types);

  void add(TypeRef t, std::uint32_t n = 1);
  // Removes one occurrence; returns false (and leaves the multiset unchanged)
  // if the type is absent.
  bool remove_one(TypeRef t);

  std::uint32_t count(TypeRef t) const;
  bool contains(TypeRef t) const { return count(t) > 0; }

  // Number of elements counted with multiplicity.
  std::size_t total() const { return total_; }
  bool empty() const { return items_.empty(); }

  // Distinct types with their multiplicities, in canonical order.
  const std::vector<Item>& items() const { return items_; }

  // Sum of the lengths of all elements, with multiplicity.
  std::size_t total_length() const;

  TypeMultiset united(const TypeMultiset& other) const;

  std::size_t hash() const;

  bool operator==(const TypeMultiset& other) const { return items_ == other.items_; }

  // Deterministic order (canonical item order, then counts); for use in
  // ordered containers.
  bool operator<(const TypeMultiset& other) const;

private:
  std::vector<Item> items_;
  std::size_t total_ = 0;
};

// Replaces every product A*B by its factors, recursively, until no element is
// a product.  Division subterms are left untouched.
TypeMultiset flatten_products(const TypeMultiset& m);

}  // namespace lpgram
