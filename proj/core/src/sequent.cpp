#include "lpgram/sequent.hpp"

#include <map>
#include <stdexcept>

namespace lpgram {

Sequent::Sequent(TypeMultiset antecedent, TypeRef succedent)
    : antecedent_(std::move(antecedent)), succedent_(succedent) {
  if (antecedent_.empty()) throw std::invalid_argument("sequent antecedent must be nonempty");
  length_ = antecedent_.total_length() + succedent_->length();
  hash_ = antecedent_.hash() * 0x9e3779b97f4a7c15ull + succedent_->hash();
}

std::string Sequent::to_string() const {
  std::string out;
  bool first = true;
  for (const auto& [t, c] : antecedent_.items()) {
    for (std::uint32_t i = 0; i < c; ++i) {
      if (!first) out += ", ";
      out += t->text();
      first = false;
    }
  }
  out += " -> ";
  out += succedent_->text();
  return out;
}

bool Sequent::operator<(const Sequent& other) const {
  if (succedent_ != other.succedent_)
    return Type::before(succedent_, other.succedent_);
  return antecedent_ < other.antecedent_;
}

bool is_balanced(const Sequent& s) {
  // Sum the signed primitive counts over the antecedent and subtract the
  // succedent's; provability requires an exact cancellation.
  std::map<const Type*, long long> acc;
  for (const auto& [t, c] : s.antecedent().items())
    for (const auto& [p, v] : t->balance()) acc[p] += static_cast<long long>(v) * c;
  for (const auto& [p, v] : s.succedent()->balance()) acc[p] -= v;
  for (const auto& [p, v] : acc)
    if (v != 0) return false;
  return true;
}

Sequent invert_prod_left(const Sequent& s, TypeRef member) {
  if (!member->is_prod())
    throw std::invalid_argument("designated member is not a product: " + member->text());
  TypeMultiset ant = s.antecedent();
  if (!ant.remove_one(member))
    throw std::invalid_argument("designated member not present in antecedent: " + member->text());
  ant.add(member->left());
  ant.add(member->right());
  return Sequent(std::move(ant), s.succedent());
}

Sequent invert_div_right(const Sequent& s) {
  TypeRef succ = s.succedent();
  if (!succ->is_div())
    throw std::invalid_argument("succedent is not a division: " + succ->text());
  TypeMultiset ant = s.antecedent();
  ant.add(succ->right());
  return Sequent(std::move(ant), succ->left());
}

}  // namespace lpgram
