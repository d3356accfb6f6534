#include "psc/atoms.hpp"

#include <algorithm>
#include <cctype>

#include "psc/errors.hpp"

namespace psc {

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

bool Atom::valid_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  std::size_t i = 1;
  while (i < name.size() && is_ident_char(name[i])) ++i;
  if (i == name.size()) return true;
  // optional "(digits)" suffix, nothing after it
  if (name[i] != '(') return false;
  std::size_t j = i + 1;
  while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
  if (j == i + 1) return false;
  return j + 1 == name.size() && name[j] == ')';
}

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!valid_name(name_)) {
    throw Error(ErrorCode::SemanticError, "invalid atom name: '" + name_ + "'");
  }
}

AtomSet::AtomSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

AtomSet::AtomSet(std::initializer_list<Atom> atoms)
    : AtomSet(std::vector<Atom>(atoms)) {}

AtomSet AtomSet::of(std::initializer_list<std::string_view> names) {
  std::vector<Atom> atoms;
  atoms.reserve(names.size());
  for (auto name : names) atoms.emplace_back(std::string(name));
  return AtomSet(std::move(atoms));
}

bool AtomSet::contains(const Atom& a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

bool AtomSet::subset_of(const AtomSet& other) const {
  return std::includes(other.atoms_.begin(), other.atoms_.end(),
                       atoms_.begin(), atoms_.end());
}

AtomSet AtomSet::intersect(const AtomSet& other) const {
  std::vector<Atom> out;
  std::set_intersection(atoms_.begin(), atoms_.end(),
                        other.atoms_.begin(), other.atoms_.end(),
                        std::back_inserter(out));
  AtomSet result;
  result.atoms_ = std::move(out);  // inputs sorted-unique, so is the output
  return result;
}

AtomSet AtomSet::unite(const AtomSet& other) const {
  std::vector<Atom> out;
  std::set_union(atoms_.begin(), atoms_.end(),
                 other.atoms_.begin(), other.atoms_.end(),
                 std::back_inserter(out));
  AtomSet result;
  result.atoms_ = std::move(out);
  return result;
}

AtomSet AtomSet::difference(const AtomSet& other) const {
  std::vector<Atom> out;
  std::set_difference(atoms_.begin(), atoms_.end(),
                      other.atoms_.begin(), other.atoms_.end(),
                      std::back_inserter(out));
  AtomSet result;
  result.atoms_ = std::move(out);
  return result;
}

std::strong_ordering operator<=>(const AtomSet& a, const AtomSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.atoms_ <=> b.atoms_;
}

}  // namespace psc
