#ifndef PSC_NORMAL_HPP
#define PSC_NORMAL_HPP

#include <vector>

#include "psc/atoms.hpp"

namespace psc {

/// A rule of a normal logic program:
/// head <- body_pos..., not body_neg...
struct NormalRule {
  Atom head;
  std::vector<Atom> body_pos;
  std::vector<Atom> body_neg;

  friend bool operator==(const NormalRule& a, const NormalRule& b) = default;
};

class NormalProgram {
 public:
  NormalProgram() = default;
  explicit NormalProgram(std::vector<NormalRule> rules) : rules_(std::move(rules)) {}

  const std::vector<NormalRule>& rules() const { return rules_; }
  void add(NormalRule rule) { rules_.push_back(std::move(rule)); }

  /// Every atom occurring in some rule.
  AtomSet atoms() const {
    std::vector<Atom> out;
    for (const NormalRule& rule : rules_) {
      out.push_back(rule.head);
      out.insert(out.end(), rule.body_pos.begin(), rule.body_pos.end());
      out.insert(out.end(), rule.body_neg.begin(), rule.body_neg.end());
    }
    return AtomSet(std::move(out));
  }

  friend bool operator==(const NormalProgram& a, const NormalProgram& b) = default;

 private:
  std::vector<NormalRule> rules_;
};

}  // namespace psc

#endif
