#include "morse_orbit/collections.hpp"

#include <algorithm>
#include <set>

namespace morse_orbit {

Collection::Collection(std::shared_ptr<const FiniteGroup> group, unsigned prime, std::vector<Subgroup> members)
    : group_(std::move(group)), prime_(prime), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto& m = members_[i];
    if (m.is_trivial() || !is_p_power(m.order(), prime_))
      throw Error(ErrorCode::NotAPGroup, "member " + describe_subgroup(*group_, m) + " is not a nontrivial " +
                                             std::to_string(prime_) + "-subgroup");
    index_.emplace(m, static_cast<MemberId>(i));
  }

  const std::size_t n = members_.size();
  const std::size_t order = group_->order();
  conj_.resize(n * order);
  for (MemberId id = 0; id < n; ++id) {
    for (Element g = 0; g < order; ++g) {
      auto image = conjugate_subgroup(*group_, members_[id], g);
      auto it = index_.find(image);
      if (it == index_.end())
        throw Error(ErrorCode::NotClosed, "conjugate of " + describe_subgroup(*group_, members_[id]) +
                                              " is missing from the collection");
      conj_[id * order + g] = it->second;
    }
  }

  below_.assign(n * n, false);
  above_.resize(n);
  for (MemberId a = 0; a < n; ++a)
    for (MemberId b = 0; b < n; ++b)
      if (members_[a].order() < members_[b].order() && members_[a].is_subset_of(members_[b])) {
        below_[a * n + b] = true;
        above_[a].push_back(b);
      }

  class_of_.assign(n, n);
  for (MemberId id = 0; id < n; ++id) {
    if (class_of_[id] != n) continue;
    std::set<MemberId> orbit;
    for (Element g = 0; g < order; ++g) orbit.insert(conjugate(id, g));
    for (auto m : orbit) class_of_[m] = classes_.size();
    classes_.emplace_back(orbit.begin(), orbit.end());
  }
}

std::optional<MemberId> Collection::find(const Subgroup& subgroup) const {
  auto it = index_.find(subgroup);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Collection::max_member_order() const {
  std::size_t best = 0;
  for (const auto& m : members_) best = std::max(best, m.order());
  return best;
}

std::vector<std::string> Collection::closure_violations() const {
  std::vector<std::string> out;
  const auto& g = *group_;
  for (const auto& m : members_) {
    auto name = describe_subgroup(g, m);
    if (m.is_trivial() || !is_p_power(m.order(), prime_)) out.push_back(name + " is not a nontrivial p-subgroup");
    if (!m.contains(g.identity())) out.push_back(name + " lacks the identity");
    for (auto a : m.members())
      for (auto b : m.members())
        if (!m.contains(g.mul(a, g.inv(b)))) {
          out.push_back(name + " is not closed under x*y^-1");
          goto next_member;
        }
    for (Element x = 0; x < g.order(); ++x)
      if (!find(conjugate_subgroup(g, m, x))) {
        out.push_back(name + " has a conjugate outside the collection");
        break;
      }
  next_member:;
  }
  if (members_.empty() || g.order() % prime_ != 0) return out;
  auto everything = all_p_subgroups(group_, prime_);
  for (const auto& q : everything.members()) {
    if (find(q)) continue;
    for (const auto& m : members_)
      if (m.is_subset_of(q)) {
        out.push_back("p-overgroup " + describe_subgroup(g, q) + " of " + describe_subgroup(g, m) + " is missing");
        break;
      }
  }
  return out;
}

std::vector<Subgroup> nontrivial_subgroups_of_p_group(const FiniteGroup& group, const Subgroup& s, unsigned p) {
  if (!is_p_power(s.order(), p)) throw Error(ErrorCode::NotAPGroup, "S is not a p-group");
  std::set<Subgroup> found;
  std::vector<Subgroup> level;
  {
    std::set<Subgroup> first;
    for (auto x : s.members())
      if (group.element_order(x) == p) first.insert(subgroup_closure(group, std::span<const Element>(&x, 1)));
    level.assign(first.begin(), first.end());
  }
  while (!level.empty()) {
    found.insert(level.begin(), level.end());
    std::set<Subgroup> next;
    for (const auto& h : level) {
      auto gens = generating_set(group, h);
      for (auto x : s.members()) {
        if (h.contains(x) || !normalizes(group, x, h)) continue;
        auto extended = gens;
        extended.push_back(x);
        auto k = subgroup_closure(group, extended);
        if (k.order() == h.order() * p) next.insert(std::move(k));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return {found.begin(), found.end()};
}

Collection all_p_subgroups(std::shared_ptr<const FiniteGroup> group, unsigned p) {
  if (!is_prime(p) || group->order() % p != 0)
    throw Error(ErrorCode::PrimeDoesNotDivide,
                std::to_string(p) + " is not a prime dividing " + std::to_string(group->order()));
  const auto& g = *group;
  auto s = sylow_subgroup(g, Subgroup::whole(g), p);
  std::set<Subgroup> all;
  for (const auto& h : nontrivial_subgroups_of_p_group(g, s, p))
    for (Element x = 0; x < g.order(); ++x) all.insert(conjugate_subgroup(g, h, x));
  return Collection(std::move(group), p, std::vector<Subgroup>(all.begin(), all.end()));
}

Collection close_upward(std::shared_ptr<const FiniteGroup> group, unsigned p, const std::vector<Subgroup>& seeds) {
  if (seeds.empty()) throw Error(ErrorCode::EmptySeed, "no seed subgroups given");
  for (const auto& seed : seeds)
    if (seed.is_trivial() || !is_p_power(seed.order(), p))
      throw Error(ErrorCode::NotAPGroup, "seed " + describe_subgroup(*group, seed) + " is not a nontrivial " +
                                             std::to_string(p) + "-subgroup");
  auto everything = all_p_subgroups(group, p);
  const auto& g = *group;
  std::set<Subgroup> seed_conjugates;
  for (const auto& seed : seeds)
    for (Element x = 0; x < g.order(); ++x) seed_conjugates.insert(conjugate_subgroup(g, seed, x));
  std::vector<Subgroup> members;
  for (const auto& q : everything.members())
    if (std::any_of(seed_conjugates.begin(), seed_conjugates.end(),
                    [&](const Subgroup& s) { return s.is_subset_of(q); }))
      members.push_back(q);
  return Collection(std::move(group), p, std::move(members));
}

std::vector<std::vector<MemberId>> conjugacy_classes(const Collection& collection) {
  const auto& g = collection.group();
  const std::size_t n = collection.size();
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<MemberId>> classes;
  for (MemberId a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    std::vector<MemberId> cls{a};
    assigned[a] = true;
    for (MemberId b = a + 1; b < n; ++b) {
      if (assigned[b] || collection.member(a).order() != collection.member(b).order()) continue;
      for (Element x = 0; x < g.order(); ++x)
        if (conjugate_subgroup(g, collection.member(a), x) == collection.member(b)) {
          cls.push_back(b);
          assigned[b] = true;
          break;
        }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

Collection hat_collection(std::shared_ptr<const FiniteGroup> group, unsigned p, const Subgroup& sylow,
                          const std::vector<Subgroup>& members_of_s) {
  const auto& g = *group;
  std::set<Subgroup> all;
  for (const auto& m : members_of_s) {
    if (!m.is_subset_of(sylow))
      throw Error(ErrorCode::NotInsideS, describe_subgroup(g, m) + " is not contained in S");
    for (Element x = 0; x < g.order(); ++x) all.insert(conjugate_subgroup(g, m, x));
  }
  return Collection(std::move(group), p, std::vector<Subgroup>(all.begin(), all.end()));
}

}  // namespace morse_orbit
