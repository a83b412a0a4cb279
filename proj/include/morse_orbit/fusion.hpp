#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "morse_orbit/collections.hpp"
#include "morse_orbit/orbit_nerve.hpp"

namespace morse_orbit {

/// The fusion system F_S(G) of a finite group at a Sylow p-subgroup S.
class FusionSystem {
 public:
  /// Throws NotASubgroup unless `sylow` is a Sylow p-subgroup of G.
  FusionSystem(std::shared_ptr<const FiniteGroup> group, Subgroup sylow, unsigned prime);
  /// Uses the deterministic Sylow search. Throws PrimeDoesNotDivide.
  static FusionSystem of_group(std::shared_ptr<const FiniteGroup> group, unsigned prime);

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const Subgroup& sylow() const { return sylow_; }
  unsigned prime() const { return prime_; }
  /// Every nontrivial subgroup of S, sorted by key.
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  Subgroup sylow_;
  unsigned prime_;
  std::vector<Subgroup> subgroups_;
};

/// The restriction of c_g to P, landing in Q, as a value table on P's members.
struct FusionMorphism {
  Subgroup domain;
  Subgroup codomain;
  std::vector<Element> values;  // values[k] = image of domain.members()[k]
  Element conjugator = 0;

  bool is_isomorphism() const { return domain.order() == codomain.order(); }
  /// The subgroup of Q hit by the map.
  Subgroup image(std::size_t group_order) const { return Subgroup(values, group_order); }
};

/// Hom_F(P, Q): distinct maps c_g with P^g <= Q. Throws NotInsideS.
std::vector<FusionMorphism> hom_F(const FusionSystem& fusion, const Subgroup& p, const Subgroup& q);

/// Some g in G carries each P_i onto Q_i. Throws LengthMismatch or NotInsideS.
bool f_equivalent(const FusionSystem& fusion, std::span<const Subgroup> a, std::span<const Subgroup> b);

/// All subgroups of S containing a G-conjugate of some seed: the smallest
/// closed F-collection meeting the class of every seed.
std::vector<Subgroup> closed_f_collection_above(const FusionSystem& fusion, const std::vector<Subgroup>& seeds);

inline constexpr MemberId kNoMember = static_cast<MemberId>(-1);

/// F-class of a strict chain of members of an F-collection.
struct FusionCell {
  std::vector<MemberId> representative;  // ids into FusionQuotient::members()

  int dimension() const { return static_cast<int>(representative.size()) - 1; }

  friend bool operator==(const FusionCell&, const FusionCell&) = default;
  friend auto operator<=>(const FusionCell&, const FusionCell&) = default;
};

/// N(C)/F for a closed F-collection C.
class FusionQuotient {
 public:
  /// Throws NotInsideS or NotClosed.
  FusionQuotient(const FusionSystem& fusion, std::vector<Subgroup> collection);

  const FusionSystem& fusion() const { return fusion_; }
  const std::vector<Subgroup>& members() const { return members_; }
  std::optional<MemberId> find(const Subgroup& s) const;

  int top_dimension() const { return static_cast<int>(cells_.size()) - 1; }
  std::vector<std::size_t> counts_by_dimension() const;
  const std::vector<FusionCell>& cells(int dim) const { return cells_.at(dim); }

  /// Least F-equivalent chain (by member keys).
  FusionCell canonicalize(const std::vector<MemberId>& chain) const;
  /// Index within dimension dim - 1 of d_j of a cell.
  std::size_t face_of(int dim, std::size_t index, std::size_t j) const;
  std::size_t index_of(const FusionCell& cell) const;

  /// Every strict chain of members, grouped by length.
  const std::vector<std::vector<std::vector<MemberId>>>& all_chains() const { return chains_; }
  std::vector<Subgroup> subgroups_of(const std::vector<MemberId>& chain) const;

 private:
  FusionSystem fusion_;
  std::vector<Subgroup> members_;
  std::unordered_map<Subgroup, MemberId, SubgroupHash> index_;
  std::vector<MemberId> conj_;  // conj_[id * |G| + g], kNoMember when P^g leaves C
  std::vector<std::vector<std::vector<MemberId>>> chains_;
  std::vector<std::vector<FusionCell>> cells_;
  std::vector<std::map<std::vector<MemberId>, std::size_t>> cell_index_;
};

/// Outcome of mapping [gamma]_F to [gamma]_G in N(C-hat)/G.
struct FusionComparison {
  std::vector<std::size_t> fusion_counts;
  std::vector<std::size_t> orbit_counts;
  bool well_defined = false;
  bool bijective = false;
  bool faces_commute = false;
  bool ok() const { return well_defined && bijective && faces_commute; }
};

/// Builds both quotients and checks the canonical map is an isomorphism of
/// the nondegenerate parts, compatible with every face map.
FusionComparison compare_quotients(const FusionSystem& fusion, const std::vector<Subgroup>& collection,
                                   unsigned threads = 1);

}  // namespace morse_orbit
