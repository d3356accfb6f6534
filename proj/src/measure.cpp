#include "psc/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "psc/errors.hpp"

namespace psc {

double extended_sum(double a, double b) {
  if (std::isinf(a) && std::isinf(b) && std::signbit(a) != std::signbit(b)) {
    throw Error(ErrorCode::MixedInfinity, "sum mixes +inf and -inf");
  }
  return a + b;
}

namespace {

void reject_nan(double v, const char* what) {
  if (std::isnan(v)) throw Error(ErrorCode::SemanticError, std::string(what) + " is NaN");
}

}  // namespace

Measure Measure::weights(std::vector<std::pair<AtomSet, double>> values,
                         std::optional<double> fallback) {
  std::sort(values.begin(), values.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i].first == values[i - 1].first) {
      throw Error(ErrorCode::SemanticError, "measure lists a set twice");
    }
  }
  for (const auto& [set, v] : values) {
    (void)set;
    reject_nan(v, "measure value");
  }
  if (fallback) reject_nan(*fallback, "measure fallback");
  Measure m;
  m.kind_ = Kind::Weights;
  m.values_ = std::move(values);
  m.fallback_ = fallback;
  return m;
}

Measure Measure::indicator(Atom pivot, double if_in, double if_out) {
  reject_nan(if_in, "indicator value");
  reject_nan(if_out, "indicator value");
  Measure m;
  m.kind_ = Kind::Indicator;
  m.pivot_ = std::move(pivot);
  m.if_in_ = if_in;
  m.if_out_ = if_out;
  return m;
}

Measure Measure::linear(std::vector<std::pair<Atom, double>> atom_weights, double offset) {
  std::sort(atom_weights.begin(), atom_weights.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < atom_weights.size(); ++i) {
    if (atom_weights[i].first == atom_weights[i - 1].first) {
      throw Error(ErrorCode::SemanticError, "linear measure lists an atom twice");
    }
  }
  for (const auto& [atom, w] : atom_weights) {
    (void)atom;
    reject_nan(w, "linear weight");
    if (std::isinf(w)) {
      throw Error(ErrorCode::SemanticError, "linear weights must be finite");
    }
  }
  reject_nan(offset, "linear offset");
  if (std::isinf(offset)) {
    throw Error(ErrorCode::SemanticError, "linear offset must be finite");
  }
  Measure m;
  m.kind_ = Kind::Linear;
  m.atom_weights_ = std::move(atom_weights);
  m.offset_ = offset;
  return m;
}

double Measure::value(const AtomSet& a) const {
  switch (kind_) {
    case Kind::Weights: {
      auto it = std::lower_bound(
          values_.begin(), values_.end(), a,
          [](const auto& entry, const AtomSet& key) { return entry.first < key; });
      if (it != values_.end() && it->first == a) return it->second;
      if (fallback_) return *fallback_;
      throw Error(ErrorCode::OrderDomain, "measure has no value for a set");
    }
    case Kind::Indicator:
      return a.contains(*pivot_) ? if_in_ : if_out_;
    case Kind::Linear: {
      double sum = offset_;
      for (const auto& [atom, w] : atom_weights_)
        if (a.contains(atom)) sum += w;
      return sum;
    }
  }
  return 0;
}

bool operator==(const Measure& a, const Measure& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Measure::Kind::Weights:
      return a.values_ == b.values_ && a.fallback_ == b.fallback_;
    case Measure::Kind::Indicator:
      return a.pivot_ == b.pivot_ && a.if_in_ == b.if_in_ && a.if_out_ == b.if_out_;
    case Measure::Kind::Linear:
      return a.atom_weights_ == b.atom_weights_ && a.offset_ == b.offset_;
  }
  return false;
}

}  // namespace psc
