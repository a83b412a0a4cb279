#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "morse_orbit/group.hpp"

namespace morse_orbit {

using MemberId = std::uint32_t;

/// A G-conjugation-closed family of nontrivial p-subgroups.
///
/// Members are sorted by key, so comparing member ids compares keys. The
/// conjugation action and the strict inclusion order are tabulated at
/// construction.
class Collection {
 public:
  /// Throws NotAPGroup for trivial or non-p members and NotClosed when the
  /// family is not a union of full conjugacy classes.
  Collection(std::shared_ptr<const FiniteGroup> group, unsigned prime, std::vector<Subgroup> members);

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  unsigned prime() const { return prime_; }

  std::size_t size() const { return members_.size(); }
  const Subgroup& member(MemberId id) const { return members_[id]; }
  const std::vector<Subgroup>& members() const { return members_; }
  std::optional<MemberId> find(const Subgroup& subgroup) const;

  MemberId conjugate(MemberId id, Element g) const { return conj_[id * group_->order() + g]; }
  /// a < b strictly.
  bool strictly_below(MemberId a, MemberId b) const { return below_[a * members_.size() + b]; }
  const std::vector<MemberId>& strictly_above(MemberId id) const { return above_[id]; }

  /// G-conjugacy classes, each sorted, ordered by smallest member.
  const std::vector<std::vector<MemberId>>& classes() const { return classes_; }
  std::size_t class_of(MemberId id) const { return class_of_[id]; }

  /// Largest member order; the Sylow order for a nonempty closed collection.
  std::size_t max_member_order() const;

  /// Re-checks p-subgroup, conjugation and p-overgroup closure directly.
  /// Returns human-readable violations (empty when all hold).
  std::vector<std::string> closure_violations() const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  unsigned prime_;
  std::vector<Subgroup> members_;
  std::unordered_map<Subgroup, MemberId, SubgroupHash> index_;
  std::vector<MemberId> conj_;
  std::vector<bool> below_;
  std::vector<std::vector<MemberId>> above_;
  std::vector<std::vector<MemberId>> classes_;
  std::vector<std::size_t> class_of_;
};

/// Every nontrivial subgroup of the p-group S, sorted by key.
std::vector<Subgroup> nontrivial_subgroups_of_p_group(const FiniteGroup& group, const Subgroup& s, unsigned p);

/// S_p(G). Throws PrimeDoesNotDivide.
Collection all_p_subgroups(std::shared_ptr<const FiniteGroup> group, unsigned p);

/// Smallest collection containing the seeds that is closed under conjugacy
/// and passage to p-overgroups. Throws EmptySeed or NotAPGroup.
Collection close_upward(std::shared_ptr<const FiniteGroup> group, unsigned p, const std::vector<Subgroup>& seeds);

/// Partition of the members by G-conjugacy, tested by brute force over G.
std::vector<std::vector<MemberId>> conjugacy_classes(const Collection& collection);

/// Union of the G-classes of subgroups of S. Throws NotInsideS.
Collection hat_collection(std::shared_ptr<const FiniteGroup> group, unsigned p, const Subgroup& sylow,
                          const std::vector<Subgroup>& members_of_s);

}  // namespace morse_orbit
