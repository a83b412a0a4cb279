#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "morse_orbit/collections.hpp"

namespace morse_orbit {

/// Strictly increasing chain P_0 < ... < P_n of collection members.
using Chain = std::vector<MemberId>;

/// G-orbit of a strict chain, held by its lexicographically least member.
/// The empty representative stands for the dimension -1 "no cell" marker.
struct OrbitCell {
  Chain representative;

  int dimension() const { return static_cast<int>(representative.size()) - 1; }
  bool empty() const { return representative.empty(); }

  friend bool operator==(const OrbitCell&, const OrbitCell&) = default;
  friend auto operator<=>(const OrbitCell&, const OrbitCell&) = default;
};

struct CellId {
  int dim = -1;
  std::uint32_t index = 0;

  friend bool operator==(const CellId&, const CellId&) = default;
  friend auto operator<=>(const CellId&, const CellId&) = default;
};

/// Deletes P_j. Throws IndexOutOfRange.
Chain face(const Chain& chain, std::size_t j);

Chain conjugate_chain(const Collection& collection, const Chain& chain, Element g);

bool is_strict(const Collection& collection, const Chain& chain);

/// Least conjugate of the chain over all of G.
OrbitCell canonicalize(const Collection& collection, const Chain& chain);

/// canonicalize(face(representative, j)). Throws IndexOutOfRange.
OrbitCell orbit_face(const Collection& collection, const OrbitCell& cell, std::size_t j);

std::vector<Subgroup> chain_subgroups(const Collection& collection, const Chain& chain);

/// The quotient N(C)/G: every orbit cell, grouped by dimension in sorted order.
class OrbitComplex {
 public:
  explicit OrbitComplex(std::shared_ptr<const Collection> collection, unsigned threads = 1);

  const Collection& collection() const { return *collection_; }
  const std::shared_ptr<const Collection>& collection_ptr() const { return collection_; }

  int top_dimension() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(int dim) const;
  std::size_t total_cells() const;
  std::vector<std::size_t> counts_by_dimension() const;

  const std::vector<OrbitCell>& cells(int dim) const { return cells_.at(dim); }
  const OrbitCell& cell(CellId id) const { return cells_.at(id.dim).at(id.index); }

  /// Id of a canonical cell, or nullopt for cells outside the complex.
  std::optional<CellId> find(const OrbitCell& cell) const;
  /// Id of canonicalize(chain); throws InternalError if absent.
  CellId locate(const Chain& chain) const;
  /// Id of d_j of a cell; nullopt for faces of 0-cells.
  std::optional<CellId> face_of(CellId id, std::size_t j) const;

 private:
  std::shared_ptr<const Collection> collection_;
  std::vector<std::vector<OrbitCell>> cells_;
  std::vector<std::map<Chain, std::uint32_t>> index_;
};

}  // namespace morse_orbit
