#include "lpgram/multiset.hpp"

#include <algorithm>

namespace lpgram {
namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

TypeMultiset::TypeMultiset(std::initializer_list<TypeRef> types) {
  for (TypeRef t : types) add(t);
}

void TypeMultiset::add(TypeRef t, std::uint32_t n) {
  if (n == 0) return;
  auto it = std::lower_bound(items_.begin(), items_.end(), t,
                             [](const Item& item, TypeRef v) { return Type::before(item.first, v); });
  if (it != items_.end() && it->first == t)
    it->second += n;
  else
    items_.insert(it, {t, n});
  total_ += n;
}

bool TypeMultiset::remove_one(TypeRef t) {
  auto it = std::lower_bound(items_.begin(), items_.end(), t,
                             [](const Item& item, TypeRef v) { return Type::before(item.first, v); });
  if (it == items_.end() || it->first != t) return false;
  if (--it->second == 0) items_.erase(it);
  --total_;
  return true;
}

std::uint32_t TypeMultiset::count(TypeRef t) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), t,
                             [](const Item& item, TypeRef v) { return Type::before(item.first, v); });
  return (it != items_.end() && it->first == t) ? it->second : 0;
}

std::size_t TypeMultiset::total_length() const {
  std::size_t n = 0;
  for (const auto& [t, c] : items_) n += t->length() * c;
  return n;
}

TypeMultiset TypeMultiset::united(const TypeMultiset& other) const {
  TypeMultiset out = *this;
  for (const auto& [t, c] : other.items_) out.add(t, c);
  return out;
}

std::size_t TypeMultiset::hash() const {
  std::size_t h = 0x517cc1b727220a95ull;
  for (const auto& [t, c] : items_) h = mix(mix(h, t->hash()), c);
  return h;
}

bool TypeMultiset::operator<(const TypeMultiset& other) const {
  auto cmp = [](const Item& a, const Item& b) {
    if (a.first != b.first) return Type::before(a.first, b.first) ? -1 : 1;
    if (a.second != b.second) return a.second < b.second ? -1 : 1;
    return 0;
  };
  std::size_t n = std::min(items_.size(), other.items_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(items_[i], other.items_[i]);
    if (c != 0) return c < 0;
  }
  return items_.size() < other.items_.size();
}

TypeMultiset flatten_products(const TypeMultiset& m) {
  TypeMultiset out;
  // Iterative worklist; each product splits into its two factors.
  std::vector<TypeMultiset::Item> work(m.items().begin(), m.items().end());
  while (!work.empty()) {
    auto [t, c] = work.back();
    work.pop_back();
    if (t->is_prod()) {
      work.push_back({t->left(), c});
      work.push_back({t->right(), c});
    } else {
      out.add(t, c);
    }
  }
  return out;
}

}  // namespace lpgram
