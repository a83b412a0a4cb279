#include "morse_orbit/fusion.hpp"

#include <algorithm>
#include <set>

namespace morse_orbit {

FusionSystem::FusionSystem(std::shared_ptr<const FiniteGroup> group, Subgroup sylow, unsigned prime)
    : group_(std::move(group)), sylow_(std::move(sylow)), prime_(prime) {
  if (!is_sylow_in(sylow_, Subgroup::whole(*group_), prime_))
    throw Error(ErrorCode::NotASubgroup, "S is not a Sylow " + std::to_string(prime_) + "-subgroup");
  subgroups_ = nontrivial_subgroups_of_p_group(*group_, sylow_, prime_);
}

FusionSystem FusionSystem::of_group(std::shared_ptr<const FiniteGroup> group, unsigned prime) {
  if (!is_prime(prime) || group->order() % prime != 0)
    throw Error(ErrorCode::PrimeDoesNotDivide,
                std::to_string(prime) + " is not a prime dividing " + std::to_string(group->order()));
  auto s = sylow_subgroup(*group, Subgroup::whole(*group), prime);
  return FusionSystem(std::move(group), std::move(s), prime);
}

namespace {

void require_inside(const FusionSystem& fusion, const Subgroup& p) {
  if (!p.is_subset_of(fusion.sylow()))
    throw Error(ErrorCode::NotInsideS, describe_subgroup(fusion.group(), p) + " is not contained in S");
}

}  // namespace

std::vector<FusionMorphism> hom_F(const FusionSystem& fusion, const Subgroup& p, const Subgroup& q) {
  require_inside(fusion, p);
  require_inside(fusion, q);
  const auto& g = fusion.group();
  std::vector<FusionMorphism> out;
  std::set<std::vector<Element>> seen;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> values;
    values.reserve(p.order());
    bool lands = true;
    for (auto m : p.members()) {
      auto v = g.conj(m, x);
      if (!q.contains(v)) {
        lands = false;
        break;
      }
      values.push_back(v);
    }
    if (!lands || !seen.insert(values).second) continue;
    out.push_back(FusionMorphism{p, q, std::move(values), x});
  }
  return out;
}

bool f_equivalent(const FusionSystem& fusion, std::span<const Subgroup> a, std::span<const Subgroup> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "chains have different lengths");
  for (const auto& s : a) require_inside(fusion, s);
  for (const auto& s : b) require_inside(fusion, s);
  const auto& g = fusion.group();
  for (Element x = 0; x < g.order(); ++x) {
    bool all = true;
    for (std::size_t i = 0; i < a.size() && all; ++i) all = conjugate_subgroup(g, a[i], x) == b[i];
    if (all) return true;
  }
  return false;
}

std::vector<Subgroup> closed_f_collection_above(const FusionSystem& fusion, const std::vector<Subgroup>& seeds) {
  if (seeds.empty()) throw Error(ErrorCode::EmptySeed, "no seed subgroups given");
  const auto& g = fusion.group();
  std::set<Subgroup> conjugates;
  for (const auto& seed : seeds) {
    if (seed.is_trivial() || !is_p_power(seed.order(), fusion.prime()))
      throw Error(ErrorCode::NotAPGroup, describe_subgroup(g, seed) + " is not a nontrivial p-subgroup");
    for (Element x = 0; x < g.order(); ++x) {
      auto c = conjugate_subgroup(g, seed, x);
      if (c.is_subset_of(fusion.sylow())) conjugates.insert(std::move(c));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& q : fusion.subgroups())
    if (std::any_of(conjugates.begin(), conjugates.end(), [&](const Subgroup& c) { return c.is_subset_of(q); }))
      out.push_back(q);
  return out;
}

// ---------------------------------------------------------------------------
// FusionQuotient

FusionQuotient::FusionQuotient(const FusionSystem& fusion, std::vector<Subgroup> collection)
    : fusion_(fusion), members_(std::move(collection)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const auto& g = fusion_.group();
  for (std::size_t i = 0; i < members_.size(); ++i) {
    require_inside(fusion_, members_[i]);
    if (members_[i].is_trivial()) throw Error(ErrorCode::NotClosed, "F-collections hold nontrivial subgroups");
    index_.emplace(members_[i], static_cast<MemberId>(i));
  }

  // Closed: union of F-classes and closed under overgroups inside S.
  const std::size_t order = g.order();
  conj_.assign(members_.size() * order, kNoMember);
  for (MemberId id = 0; id < members_.size(); ++id)
    for (Element x = 0; x < order; ++x) {
      auto image = conjugate_subgroup(g, members_[id], x);
      if (!image.is_subset_of(fusion_.sylow())) continue;
      auto it = index_.find(image);
      if (it == index_.end())
        throw Error(ErrorCode::NotClosed, "F-conjugate " + describe_subgroup(g, image) + " is missing");
      conj_[id * order + x] = it->second;
    }
  for (const auto& q : fusion_.subgroups()) {
    if (index_.count(q)) continue;
    for (const auto& m : members_)
      if (m.is_subset_of(q))
        throw Error(ErrorCode::NotClosed, "overgroup " + describe_subgroup(g, q) + " in S is missing");
  }

  // All strict chains, level by level.
  std::vector<std::vector<MemberId>> level;
  for (MemberId id = 0; id < members_.size(); ++id) level.push_back({id});
  while (!level.empty()) {
    chains_.push_back(level);
    std::vector<std::vector<MemberId>> next;
    for (const auto& chain : level) {
      const auto& top = members_[chain.back()];
      for (MemberId id = 0; id < members_.size(); ++id)
        if (members_[id].order() > top.order() && top.is_subset_of(members_[id])) {
          auto longer = chain;
          longer.push_back(id);
          next.push_back(std::move(longer));
        }
    }
    level = std::move(next);
  }

  for (const auto& chains : chains_) {
    std::set<FusionCell> distinct;
    for (const auto& chain : chains) distinct.insert(canonicalize(chain));
    cells_.emplace_back(distinct.begin(), distinct.end());
    cell_index_.emplace_back();
    for (std::size_t i = 0; i < cells_.back().size(); ++i) cell_index_.back().emplace(cells_.back()[i].representative, i);
  }
}

std::optional<MemberId> FusionQuotient::find(const Subgroup& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FusionQuotient::counts_by_dimension() const {
  std::vector<std::size_t> out;
  for (const auto& level : cells_) out.push_back(level.size());
  return out;
}

FusionCell FusionQuotient::canonicalize(const std::vector<MemberId>& chain) const {
  const std::size_t order = fusion_.group().order();
  std::vector<MemberId> best = chain;
  std::vector<MemberId> image(chain.size());
  for (Element x = 1; x < order; ++x) {
    bool inside = true;
    for (std::size_t i = 0; i < chain.size() && inside; ++i) {
      image[i] = conj_[chain[i] * order + x];
      inside = image[i] != kNoMember;
    }
    if (inside && image < best) best = image;
  }
  return FusionCell{std::move(best)};
}

std::size_t FusionQuotient::index_of(const FusionCell& cell) const {
  const int dim = cell.dimension();
  if (dim < 0 || dim > top_dimension())
    throw Error(ErrorCode::IndexOutOfRange, "cell dimension outside the quotient");
  auto it = cell_index_[dim].find(cell.representative);
  if (it == cell_index_[dim].end()) throw Error(ErrorCode::InternalError, "chain is not a canonical F-cell");
  return it->second;
}

std::size_t FusionQuotient::face_of(int dim, std::size_t index, std::size_t j) const {
  const auto& rep = cells_.at(dim).at(index).representative;
  if (j >= rep.size() || rep.size() < 2) throw Error(ErrorCode::IndexOutOfRange, "face index out of range");
  auto f = rep;
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
  return index_of(canonicalize(f));
}

std::vector<Subgroup> FusionQuotient::subgroups_of(const std::vector<MemberId>& chain) const {
  std::vector<Subgroup> out;
  for (auto id : chain) out.push_back(members_[id]);
  return out;
}

FusionComparison compare_quotients(const FusionSystem& fusion, const std::vector<Subgroup>& collection,
                                   unsigned threads) {
  FusionQuotient fq(fusion, collection);
  auto hat = std::make_shared<const Collection>(
      hat_collection(fusion.group_ptr(), fusion.prime(), fusion.sylow(), fq.members()));
  OrbitComplex gx(hat, threads);

  FusionComparison report;
  report.fusion_counts = fq.counts_by_dimension();
  report.orbit_counts = gx.counts_by_dimension();

  auto to_orbit = [&](const std::vector<MemberId>& chain) {
    Chain ids;
    for (auto id : chain) ids.push_back(*hat->find(fq.members()[id]));
    return gx.locate(ids);
  };

  // Well-defined: every chain in an F-class lands on the image of its class.
  report.well_defined = true;
  for (const auto& chains : fq.all_chains())
    for (const auto& chain : chains)
      if (to_orbit(chain) != to_orbit(fq.canonicalize(chain).representative)) report.well_defined = false;

  // Bijective per dimension.
  report.bijective = report.fusion_counts.size() == report.orbit_counts.size();
  std::vector<std::vector<CellId>> image(fq.top_dimension() + 1);
  for (int d = 0; d <= fq.top_dimension(); ++d) {
    std::set<CellId> hit;
    for (const auto& cell : fq.cells(d)) {
      image[d].push_back(to_orbit(cell.representative));
      hit.insert(image[d].back());
    }
    if (hit.size() != fq.cells(d).size() || static_cast<std::size_t>(d) >= report.orbit_counts.size() ||
        hit.size() != report.orbit_counts[d])
      report.bijective = false;
  }

  report.faces_commute = true;
  for (int d = 1; d <= fq.top_dimension(); ++d)
    for (std::size_t i = 0; i < fq.cells(d).size(); ++i)
      for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j) {
        auto via_fusion = image[d - 1][fq.face_of(d, i, j)];
        auto via_orbit = gx.face_of(image[d][i], j);
        if (!via_orbit || *via_orbit != via_fusion) report.faces_commute = false;
      }
  return report;
}

}  // namespace morse_orbit
