#include "morse_orbit/orbit_nerve.hpp"

#include <algorithm>
#include <set>

#include "morse_orbit/parallel.hpp"

namespace morse_orbit {

Chain face(const Chain& chain, std::size_t j) {
  if (j >= chain.size())
    throw Error(ErrorCode::IndexOutOfRange,
                "face index " + std::to_string(j) + " on a chain of length " + std::to_string(chain.size()));
  Chain out;
  out.reserve(chain.size() - 1);
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (i != j) out.push_back(chain[i]);
  return out;
}

Chain conjugate_chain(const Collection& collection, const Chain& chain, Element g) {
  Chain out(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) out[i] = collection.conjugate(chain[i], g);
  return out;
}

bool is_strict(const Collection& collection, const Chain& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!collection.strictly_below(chain[i], chain[i + 1])) return false;
  return true;
}

OrbitCell canonicalize(const Collection& collection, const Chain& chain) {
  Chain best = chain;
  Chain image(chain.size());
  const auto order = collection.group().order();
  for (Element g = 1; g < order; ++g) {
    // Compare element by element, abandoning as soon as the image is larger.
    bool smaller = false;
    bool larger = false;
    for (std::size_t i = 0; i < chain.size() && !larger; ++i) {
      image[i] = collection.conjugate(chain[i], g);
      if (!smaller) {
        if (image[i] < best[i]) smaller = true;
        else if (image[i] > best[i]) larger = true;
      }
    }
    if (smaller) best = image;
  }
  return OrbitCell{std::move(best)};
}

OrbitCell orbit_face(const Collection& collection, const OrbitCell& cell, std::size_t j) {
  return canonicalize(collection, face(cell.representative, j));
}

std::vector<Subgroup> chain_subgroups(const Collection& collection, const Chain& chain) {
  std::vector<Subgroup> out;
  out.reserve(chain.size());
  for (auto id : chain) out.push_back(collection.member(id));
  return out;
}

OrbitComplex::OrbitComplex(std::shared_ptr<const Collection> collection, unsigned threads)
    : collection_(std::move(collection)) {
  const auto& c = *collection_;
  if (c.size() == 0) return;

  std::vector<OrbitCell> level;
  for (const auto& cls : c.classes()) level.push_back(OrbitCell{Chain{cls.front()}});
  std::sort(level.begin(), level.end());

  const unsigned max_length = log_p(c.max_member_order(), c.prime());
  while (!level.empty()) {
    if (level.front().representative.size() > max_length)
      throw Error(ErrorCode::InternalError, "chain longer than log_p|S|");
    index_.emplace_back();
    for (std::uint32_t i = 0; i < level.size(); ++i) index_.back().emplace(level[i].representative, i);
    cells_.push_back(level);

    // Every (n+1)-chain is conjugate to one whose top face is a canonical
    // n-cell, so extending canonical representatives upward reaches all orbits.
    std::vector<std::vector<OrbitCell>> extended(level.size());
    parallel_for(level.size(), threads, [&](std::size_t i) {
      const auto& rep = level[i].representative;
      for (auto top : c.strictly_above(rep.back())) {
        Chain longer = rep;
        longer.push_back(top);
        extended[i].push_back(canonicalize(c, longer));
      }
    });
    std::set<OrbitCell> next;
    for (auto& batch : extended) next.insert(batch.begin(), batch.end());
    level.assign(next.begin(), next.end());
  }
}

std::size_t OrbitComplex::count(int dim) const {
  if (dim < 0 || dim > top_dimension()) return 0;
  return cells_[dim].size();
}

std::size_t OrbitComplex::total_cells() const {
  std::size_t total = 0;
  for (const auto& level : cells_) total += level.size();
  return total;
}

std::vector<std::size_t> OrbitComplex::counts_by_dimension() const {
  std::vector<std::size_t> out;
  for (const auto& level : cells_) out.push_back(level.size());
  return out;
}

std::optional<CellId> OrbitComplex::find(const OrbitCell& cell) const {
  int dim = cell.dimension();
  if (dim < 0 || dim > top_dimension()) return std::nullopt;
  auto it = index_[dim].find(cell.representative);
  if (it == index_[dim].end()) return std::nullopt;
  return CellId{dim, it->second};
}

CellId OrbitComplex::locate(const Chain& chain) const {
  auto id = find(canonicalize(*collection_, chain));
  if (!id) throw Error(ErrorCode::InternalError, "chain orbit is not a cell of the complex");
  return *id;
}

std::optional<CellId> OrbitComplex::face_of(CellId id, std::size_t j) const {
  const auto& rep = cell(id).representative;
  auto f = face(rep, j);
  if (f.empty()) return std::nullopt;
  return locate(f);
}

}  // namespace morse_orbit
