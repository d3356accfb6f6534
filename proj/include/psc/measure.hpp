#ifndef PSC_MEASURE_HPP
#define PSC_MEASURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "psc/atoms.hpp"

namespace psc {

/// Addition over the extended reals [-inf, +inf]. A sum mixing +inf and
/// -inf is rejected with Error(MixedInfinity).
double extended_sum(double a, double b);

/// A measure function on subsets of a base set, valued in [-inf, +inf].
class Measure {
 public:
  enum class Kind { Weights, Indicator, Linear };

  /// Explicit per-set values; the fallback, if given, covers the rest.
  static Measure weights(std::vector<std::pair<AtomSet, double>> values,
                         std::optional<double> fallback);

  /// value(A) = if_in when the pivot atom is in A, else if_out.
  static Measure indicator(Atom pivot, double if_in, double if_out);

  /// value(A) = offset + sum of the per-atom weights of the atoms in A;
  /// atoms without an entry contribute 0.
  static Measure linear(std::vector<std::pair<Atom, double>> atom_weights,
                        double offset);

  Kind kind() const { return kind_; }
  const std::vector<std::pair<AtomSet, double>>& weight_entries() const { return values_; }
  std::optional<double> weight_fallback() const { return fallback_; }
  const Atom& pivot() const { return *pivot_; }
  double if_in() const { return if_in_; }
  double if_out() const { return if_out_; }
  const std::vector<std::pair<Atom, double>>& linear_weights() const { return atom_weights_; }
  double linear_offset() const { return offset_; }

  /// Throws Error(OrderDomain) for a Weights lookup with no entry and
  /// no fallback.
  double value(const AtomSet& a) const;

  friend bool operator==(const Measure& a, const Measure& b);

 private:
  Measure() = default;

  Kind kind_ = Kind::Weights;
  std::vector<std::pair<AtomSet, double>> values_;  // sorted by key
  std::optional<double> fallback_;
  std::optional<Atom> pivot_;
  double if_in_ = 0, if_out_ = 0;
  std::vector<std::pair<Atom, double>> atom_weights_;  // sorted by atom
  double offset_ = 0;
};

}  // namespace psc

#endif
