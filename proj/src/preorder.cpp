#include "psc/preorder.hpp"

#include <algorithm>
#include <cmath>

#include "psc/errors.hpp"

namespace psc {

Preorder Preorder::chain(std::vector<AtomSet> stages) {
  auto sorted = stages;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::SemanticError, "chain lists the same set twice");
  }
  Preorder p;
  p.kind_ = Kind::Chain;
  p.stages_ = std::move(stages);
  return p;
}

Preorder Preorder::pairs(std::vector<std::pair<AtomSet, AtomSet>> entries) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());

  Preorder p;
  p.kind_ = Kind::Pairs;
  p.pairs_ = std::move(entries);

  for (const auto& [a, b] : p.pairs_) {
    p.nodes_.push_back(a);
    p.nodes_.push_back(b);
  }
  std::sort(p.nodes_.begin(), p.nodes_.end());
  p.nodes_.erase(std::unique(p.nodes_.begin(), p.nodes_.end()), p.nodes_.end());

  const std::size_t n = p.nodes_.size();
  p.closure_.assign(n, std::vector<bool>(n, false));
  auto index_of = [&](const AtomSet& s) {
    return static_cast<std::size_t>(
        std::lower_bound(p.nodes_.begin(), p.nodes_.end(), s) - p.nodes_.begin());
  };
  for (std::size_t i = 0; i < n; ++i) p.closure_[i][i] = true;
  for (const auto& [a, b] : p.pairs_) p.closure_[index_of(a)][index_of(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.closure_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.closure_[k][j]) p.closure_[i][j] = true;
  return p;
}

Preorder Preorder::rank(std::vector<std::pair<AtomSet, double>> weights,
                        std::optional<double> fallback) {
  std::sort(weights.begin(), weights.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i].first == weights[i - 1].first) {
      throw Error(ErrorCode::SemanticError, "rank weights list a set twice");
    }
  }
  for (const auto& [set, w] : weights) {
    (void)set;
    if (std::isnan(w)) throw Error(ErrorCode::SemanticError, "rank weight is NaN");
  }
  if (fallback && std::isnan(*fallback)) {
    throw Error(ErrorCode::SemanticError, "rank fallback is NaN");
  }
  Preorder p;
  p.kind_ = Kind::Rank;
  p.weights_ = std::move(weights);
  p.fallback_ = fallback;
  return p;
}

Preorder Preorder::table(AtomSet base,
                         const std::function<bool(const AtomSet&, const AtomSet&)>& leq) {
  const std::size_t n = base.size();
  if (n > 20) {
    throw Error(ErrorCode::WidthExceeded, "relation table base too wide");
  }
  const std::size_t count = std::size_t{1} << n;

  std::vector<AtomSet> subsets(count);
  const auto& atoms = base.atoms();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Atom> picked;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) picked.push_back(atoms[i]);
    subsets[mask] = AtomSet(std::move(picked));
  }

  Preorder p;
  p.kind_ = Kind::Table;
  p.table_base_ = std::move(base);
  p.table_bits_.assign(count * count, false);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      p.table_bits_[a * count + b] = leq(subsets[a], subsets[b]);
  return p;
}

std::size_t Preorder::table_index(const AtomSet& s) const {
  const auto& atoms = table_base_.atoms();
  std::size_t mask = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (s.contains(atoms[i])) mask |= std::size_t{1} << i;
  return mask;
}

bool Preorder::leq(const AtomSet& a, const AtomSet& b) const {
  if (kind_ != Kind::Table && a == b) return true;  // reflexive closure
  switch (kind_) {
    case Kind::Chain: {
      auto pa = std::find(stages_.begin(), stages_.end(), a);
      auto pb = std::find(stages_.begin(), stages_.end(), b);
      return pa != stages_.end() && pb != stages_.end() && pa <= pb;
    }
    case Kind::Pairs:
      return pairs_reachable(a, b);
    case Kind::Rank: {
      auto weight = [&](const AtomSet& s) -> double {
        auto it = std::lower_bound(
            weights_.begin(), weights_.end(), s,
            [](const auto& entry, const AtomSet& key) { return entry.first < key; });
        if (it != weights_.end() && it->first == s) return it->second;
        if (fallback_) return *fallback_;
        throw Error(ErrorCode::OrderDomain, "rank order has no weight for a set");
      };
      return weight(a) <= weight(b);
    }
    case Kind::Table: {
      if (!a.subset_of(table_base_) || !b.subset_of(table_base_)) return a == b;
      const std::size_t count = std::size_t{1} << table_base_.size();
      return table_bits_[table_index(a) * count + table_index(b)];
    }
  }
  return false;
}

bool Preorder::pairs_reachable(const AtomSet& from, const AtomSet& to) const {
  auto find = [&](const AtomSet& s) {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), s);
    return (it != nodes_.end() && *it == s)
               ? static_cast<std::ptrdiff_t>(it - nodes_.begin())
               : std::ptrdiff_t{-1};
  };
  auto i = find(from);
  auto j = find(to);
  if (i < 0 || j < 0) return false;
  return closure_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::vector<AtomSet> Preorder::mentioned_sets() const {
  std::vector<AtomSet> out;
  switch (kind_) {
    case Kind::Chain:
      out = stages_;
      break;
    case Kind::Pairs:
      out = nodes_;
      break;
    case Kind::Rank:
      for (const auto& [set, w] : weights_) {
        (void)w;
        out.push_back(set);
      }
      break;
    case Kind::Table:
      break;  // covers all subsets of the base by construction
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool operator==(const Preorder& a, const Preorder& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Preorder::Kind::Chain:
      return a.stages_ == b.stages_;
    case Preorder::Kind::Pairs:
      return a.pairs_ == b.pairs_;
    case Preorder::Kind::Rank:
      return a.weights_ == b.weights_ && a.fallback_ == b.fallback_;
    case Preorder::Kind::Table:
      return a.table_base_ == b.table_base_ && a.table_bits_ == b.table_bits_;
  }
  return false;
}

PreorderCheck check_preorder(const Preorder& order, const std::vector<AtomSet>& sets) {
  PreorderCheck result;
  for (const AtomSet& s : sets) {
    if (!order.leq(s, s)) {
      result.reflexive = false;
      ++result.violations;
    }
  }
  for (const AtomSet& a : sets)
    for (const AtomSet& b : sets) {
      if (!order.leq(a, b)) continue;
      for (const AtomSet& c : sets) {
        if (order.leq(b, c) && !order.leq(a, c)) {
          result.transitive = false;
          ++result.violations;
        }
      }
    }
  return result;
}

}  // namespace psc
