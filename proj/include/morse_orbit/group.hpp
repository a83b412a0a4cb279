#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "morse_orbit/error.hpp"

namespace morse_orbit {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 10000;

/// A bijection of {0, ..., degree-1}. Point i is sent to images()[i].
///
/// Products act on the right: (x * y) first applies x, then y, so that
/// conjugation g^-1 x g matches the right-handed convention P^g.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct ImagesHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
};

/// A permutation group with every element enumerated.
///
/// Elements are numbered in breadth-first closure order starting from the
/// identity (index 0), multiplying on the right by the generators in the
/// order given. Small groups keep a full Cayley table; larger ones compose
/// permutations and look the product up.
class FiniteGroup {
 public:
  static FiniteGroup generate(std::span<const Permutation> generators,
                              std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  Element identity() const { return 0; }

  const Permutation& element(Element e) const { return elements_[e]; }
  std::span<const Permutation> elements() const { return elements_; }
  std::span<const Element> generators() const { return generators_; }

  Element mul(Element a, Element b) const;
  Element inv(Element a) const { return inverse_[a]; }
  /// g^-1 x g
  Element conj(Element x, Element g) const { return mul(inverse_[g], mul(x, g)); }
  std::size_t element_order(Element e) const { return element_order_[e]; }

  /// Index of a permutation, or throws NotAnElement.
  Element index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const;

 private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Element> generators_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<Element> cayley_;  // empty above kCayleyLimit
  std::unordered_map<std::vector<std::uint32_t>, Element, ImagesHash> lookup_;
};

/// A subgroup stored as its sorted member list, which doubles as its
/// canonical key. Operations take the ambient group explicitly.
class Subgroup {
 public:
  Subgroup() = default;
  /// `members` must already be a subgroup of a group of order `group_order`.
  Subgroup(std::vector<Element> members, std::size_t group_order);

  static Subgroup trivial(const FiniteGroup& group);
  static Subgroup whole(const FiniteGroup& group);

  const std::vector<Element>& members() const { return members_; }
  const std::vector<Element>& key() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Element e) const { return e < mask_.size() && mask_[e]; }
  bool is_trivial() const { return members_.size() == 1; }
  /// Non-strict inclusion.
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const noexcept;
};

/// Throws DegreeMismatch or MaxOrderExceeded.
FiniteGroup generate_group(std::span<const Permutation> generator_permutations,
                           std::size_t max_order = kDefaultMaxOrder);

/// Smallest subgroup containing the given elements.
Subgroup subgroup_closure(const FiniteGroup& group, std::span<const Element> generators);

/// Greedy generating set: scan members in order, keep those not yet generated.
std::vector<Element> generating_set(const FiniteGroup& group, const Subgroup& subgroup);

/// P^g = { g^-1 x g : x in P }.
Subgroup conjugate_subgroup(const FiniteGroup& group, const Subgroup& subgroup, Element g);

bool normalizes(const FiniteGroup& group, Element g, const Subgroup& subgroup);

/// Intersection of N_G(P_i) over the chain; the whole group for an empty chain.
Subgroup normalizer_of_chain(const FiniteGroup& group, std::span<const Subgroup> chain);

/// The subgroup QP, for Q normalizing P. Throws InternalError when the
/// result violates |QP| = |Q||P|/|Q n P|.
Subgroup product_subgroup(const FiniteGroup& group, const Subgroup& q, const Subgroup& p);

Subgroup intersection(const Subgroup& a, const Subgroup& b, std::size_t group_order);

bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, unsigned p);
bool is_p_power(std::size_t n, unsigned p);
/// log_p(n) for n a power of p.
unsigned log_p(std::size_t n, unsigned p);

/// Sylow p-subgroup of H by iterative growth inside normalizers.
///
/// Deterministic: the first eligible element in H's member order is taken
/// at each step. With `rng`, a uniformly random eligible element is taken
/// instead, which reaches every Sylow subgroup with positive probability.
Subgroup sylow_subgroup(const FiniteGroup& group, const Subgroup& h, unsigned p,
                        std::mt19937_64* rng = nullptr);

/// |Q| equals the p-part of |H|. Throws NotASubgroup if Q is not inside H.
bool is_sylow_in(const Subgroup& q, const Subgroup& h, unsigned p);

/// "<(0 1),(2 3)>" style text built from generating_set.
std::string describe_subgroup(const FiniteGroup& group, const Subgroup& subgroup);

}  // namespace morse_orbit
