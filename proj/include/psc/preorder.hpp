#ifndef PSC_PREORDER_HPP
#define PSC_PREORDER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "psc/atoms.hpp"

namespace psc {

/// A pre-order on subsets of a base set. Chain, Pairs and Rank are the
/// user-facing kinds; the relation they induce is the reflexive-transitive
/// closure of the listed data, so it is a pre-order by construction.
/// Table holds an explicit relation over all subsets of a fixed base,
/// taken verbatim (reflexivity and transitivity are NOT added); it is
/// produced programmatically, never by the parser.
class Preorder {
 public:
  enum class Kind { Chain, Pairs, Rank, Table };

  /// stage[0] <= stage[1] <= ... ; stages must be distinct.
  static Preorder chain(std::vector<AtomSet> stages);

  /// Explicit "first <= second" pairs, closed under reflexivity and
  /// transitivity over the mentioned sets.
  static Preorder pairs(std::vector<std::pair<AtomSet, AtomSet>> entries);

  /// A <= B iff weight(A) <= weight(B); the fallback weight, when given,
  /// applies to sets without an explicit entry.
  static Preorder rank(std::vector<std::pair<AtomSet, double>> weights,
                       std::optional<double> fallback);

  /// Materializes `leq` over all subsets of `base` into a bit matrix.
  static Preorder table(AtomSet base,
                        const std::function<bool(const AtomSet&, const AtomSet&)>& leq);

  Kind kind() const { return kind_; }

  /// The induced relation. Throws Error(OrderDomain) when a Rank query
  /// hits a set with no weight and no fallback.
  bool leq(const AtomSet& a, const AtomSet& b) const;

  /// Every set that appears in the defining data (chain stages, pair
  /// components, rank keys); used for domain validation.
  std::vector<AtomSet> mentioned_sets() const;

  const std::vector<AtomSet>& chain_stages() const { return stages_; }
  const std::vector<std::pair<AtomSet, AtomSet>>& pair_entries() const { return pairs_; }
  const std::vector<std::pair<AtomSet, double>>& rank_weights() const { return weights_; }
  std::optional<double> rank_fallback() const { return fallback_; }
  const AtomSet& table_base() const { return table_base_; }
  const std::vector<bool>& table_bits() const { return table_bits_; }

  friend bool operator==(const Preorder& a, const Preorder& b);

 private:
  Preorder() = default;

  bool pairs_reachable(const AtomSet& from, const AtomSet& to) const;
  std::size_t table_index(const AtomSet& s) const;

  Kind kind_ = Kind::Pairs;
  std::vector<AtomSet> stages_;                       // chain
  std::vector<std::pair<AtomSet, AtomSet>> pairs_;    // pairs (raw, canonical order)
  std::vector<AtomSet> nodes_;                        // pairs: mentioned sets, sorted
  std::vector<std::vector<bool>> closure_;            // pairs: closed adjacency
  std::vector<std::pair<AtomSet, double>> weights_;   // rank, sorted by key
  std::optional<double> fallback_;                    // rank
  AtomSet table_base_;                                // table
  std::vector<bool> table_bits_;                      // table: 2^n x 2^n row-major
};

/// Result of checking the pre-order axioms of a relation by enumeration.
struct PreorderCheck {
  bool reflexive = true;
  bool transitive = true;
  std::size_t violations = 0;
};

/// Enumerates `sets` and checks reflexivity and transitivity of `leq`.
PreorderCheck check_preorder(const Preorder& order, const std::vector<AtomSet>& sets);

}  // namespace psc

#endif
