#include "morse_orbit/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace morse_orbit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MaxOrderExceeded: return "MaxOrderExceeded";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotAnElement: return "NotAnElement";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotAPGroup: return "NotAPGroup";
    case ErrorCode::PrimeDoesNotDivide: return "PrimeDoesNotDivide";
    case ErrorCode::EmptySeed: return "EmptySeed";
    case ErrorCode::NotInsideS: return "NotInsideS";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotRedundant: return "NotRedundant";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MatchingInvalid: return "MatchingInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorCode::InvalidPermutation, "image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto from = cycle[i];
      if (from >= degree)
        throw Error(ErrorCode::InvalidPermutation,
                    "point " + std::to_string(from) + " exceeds degree " + std::to_string(degree));
      if (used[from])
        throw Error(ErrorCode::InvalidPermutation,
                    "point " + std::to_string(from) + " appears in two cycles");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree())
    throw Error(ErrorCode::DegreeMismatch, "cannot multiply permutations of different degree");
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    std::uint32_t x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << x;
      seen[x] = true;
      x = images_[x];
    } while (x != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t ImagesHash::operator()(const std::vector<std::uint32_t>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {
constexpr std::size_t kCayleyLimit = 2048;
}

FiniteGroup FiniteGroup::generate(std::span<const Permutation> generators, std::size_t max_order) {
  std::size_t degree = generators.empty() ? 1 : generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(ErrorCode::DegreeMismatch, "generators act on different numbers of points");

  FiniteGroup group;
  group.degree_ = degree;
  auto add = [&](Permutation p) -> Element {
    auto [it, inserted] = group.lookup_.try_emplace(p.images(), static_cast<Element>(group.elements_.size()));
    if (inserted) {
      if (group.elements_.size() >= max_order)
        throw Error(ErrorCode::MaxOrderExceeded,
                    "group order exceeds the cap of " + std::to_string(max_order));
      group.elements_.push_back(std::move(p));
    }
    return it->second;
  };

  add(Permutation::identity(degree));
  for (std::size_t head = 0; head < group.elements_.size(); ++head) {
    for (const auto& g : generators) {
      add(group.elements_[head] * g);
    }
  }
  for (const auto& g : generators) group.generators_.push_back(group.lookup_.at(g.images()));

  const std::size_t n = group.elements_.size();
  if (n <= kCayleyLimit) {
    group.cayley_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        group.cayley_[a * n + b] = group.lookup_.at((group.elements_[a] * group.elements_[b]).images());
  }
  group.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) group.inverse_[a] = group.lookup_.at(group.elements_[a].inverse().images());

  group.element_order_.resize(n);
  for (Element a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Element x = a; x != group.identity(); x = group.mul(x, a)) ++k;
    group.element_order_[a] = k;
  }
  return group;
}

Element FiniteGroup::mul(Element a, Element b) const {
  if (!cayley_.empty()) return cayley_[a * elements_.size() + b];
  return lookup_.at((elements_[a] * elements_[b]).images());
}

Element FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_)
    throw Error(ErrorCode::DegreeMismatch, "permutation " + p.to_cycle_string() + " has degree " +
                                               std::to_string(p.degree()) + ", group acts on " +
                                               std::to_string(degree_) + " points");
  auto it = lookup_.find(p.images());
  if (it == lookup_.end())
    throw Error(ErrorCode::NotAnElement, p.to_cycle_string() + " is not in the group");
  return it->second;
}

bool FiniteGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && lookup_.count(p.images()) != 0;
}

FiniteGroup generate_group(std::span<const Permutation> generator_permutations, std::size_t max_order) {
  return FiniteGroup::generate(generator_permutations, max_order);
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(std::vector<Element> members, std::size_t group_order)
    : members_(std::move(members)), mask_(group_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto m : members_) {
    if (m >= group_order) throw Error(ErrorCode::NotAnElement, "member index out of range");
    mask_[m] = true;
  }
}

Subgroup Subgroup::trivial(const FiniteGroup& group) { return Subgroup({group.identity()}, group.order()); }

Subgroup Subgroup::whole(const FiniteGroup& group) {
  std::vector<Element> all(group.order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(std::move(all), group.order());
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (members_.size() > other.members_.size()) return false;
  return std::all_of(members_.begin(), members_.end(), [&](Element e) { return other.contains(e); });
}

std::size_t SubgroupHash::operator()(const Subgroup& s) const noexcept {
  return ImagesHash{}(s.members());
}

Subgroup subgroup_closure(const FiniteGroup& group, std::span<const Element> generators) {
  std::vector<bool> in(group.order(), false);
  std::vector<Element> members{group.identity()};
  in[group.identity()] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto s : generators) {
      Element x = group.mul(members[head], s);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  return Subgroup(std::move(members), group.order());
}

std::vector<Element> generating_set(const FiniteGroup& group, const Subgroup& subgroup) {
  std::vector<Element> gens;
  Subgroup current = Subgroup::trivial(group);
  for (auto m : subgroup.members()) {
    if (current.contains(m)) continue;
    gens.push_back(m);
    current = subgroup_closure(group, gens);
    if (current.order() == subgroup.order()) break;
  }
  return gens;
}

Subgroup conjugate_subgroup(const FiniteGroup& group, const Subgroup& subgroup, Element g) {
  std::vector<Element> image;
  image.reserve(subgroup.order());
  for (auto x : subgroup.members()) image.push_back(group.conj(x, g));
  return Subgroup(std::move(image), group.order());
}

bool normalizes(const FiniteGroup& group, Element g, const Subgroup& subgroup) {
  for (auto x : subgroup.members())
    if (!subgroup.contains(group.conj(x, g))) return false;
  return true;
}

Subgroup normalizer_of_chain(const FiniteGroup& group, std::span<const Subgroup> chain) {
  std::vector<Element> members;
  for (Element g = 0; g < group.order(); ++g) {
    bool ok = std::all_of(chain.begin(), chain.end(),
                          [&](const Subgroup& p) { return normalizes(group, g, p); });
    if (ok) members.push_back(g);
  }
  return Subgroup(std::move(members), group.order());
}

Subgroup intersection(const Subgroup& a, const Subgroup& b, std::size_t group_order) {
  std::vector<Element> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  return Subgroup(std::move(common), group_order);
}

Subgroup product_subgroup(const FiniteGroup& group, const Subgroup& q, const Subgroup& p) {
  std::vector<Element> gens = generating_set(group, q);
  auto pg = generating_set(group, p);
  gens.insert(gens.end(), pg.begin(), pg.end());
  Subgroup result = subgroup_closure(group, gens);
  std::size_t meet = intersection(q, p, group.order()).order();
  if (result.order() * meet != q.order() * p.order())
    throw Error(ErrorCode::InternalError, "product QP is not a subgroup of order |Q||P|/|Q n P|");
  return result;
}

// ---------------------------------------------------------------------------
// Sylow

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_p_power(std::size_t n, unsigned p) { return n >= 1 && p_part(n, p) == n; }

unsigned log_p(std::size_t n, unsigned p) {
  unsigned k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

Subgroup sylow_subgroup(const FiniteGroup& group, const Subgroup& h, unsigned p, std::mt19937_64* rng) {
  if (!is_prime(p)) throw Error(ErrorCode::PrimeDoesNotDivide, std::to_string(p) + " is not prime");
  const std::size_t target = p_part(h.order(), p);
  Subgroup current = Subgroup::trivial(group);
  std::vector<Element> gens;
  while (current.order() < target) {
    std::vector<Element> candidates;
    for (auto x : h.members()) {
      if (current.contains(x) || !is_p_power(group.element_order(x), p)) continue;
      if (!normalizes(group, x, current)) continue;
      candidates.push_back(x);
      if (!rng) break;
    }
    if (candidates.empty()) break;
    Element pick = candidates.front();
    if (rng) {
      std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
      pick = candidates[dist(*rng)];
    }
    gens.push_back(pick);
    current = subgroup_closure(group, gens);
  }
  if (current.order() != target)
    throw Error(ErrorCode::InternalError, "Sylow growth stopped at order " + std::to_string(current.order()) +
                                              ", expected " + std::to_string(target));
  return current;
}

bool is_sylow_in(const Subgroup& q, const Subgroup& h, unsigned p) {
  if (!q.is_subset_of(h)) throw Error(ErrorCode::NotASubgroup, "Q is not contained in H");
  return q.order() == p_part(h.order(), p);
}

std::string describe_subgroup(const FiniteGroup& group, const Subgroup& subgroup) {
  auto gens = generating_set(group, subgroup);
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += group.element(gens[i]).to_cycle_string();
  }
  if (gens.empty()) out += "()";
  out += ">";
  return out;
}

}  // namespace morse_orbit
