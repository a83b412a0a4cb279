#pragma once

#include <memory>
#include <string>
#include <vector>

#include "morse_orbit/group_spec.hpp"
#include "oracle.hpp"

namespace test_support {

using namespace morse_orbit;

inline std::shared_ptr<const FiniteGroup> make_group(const std::string& spec) {
  return std::make_shared<const FiniteGroup>(parse_group_spec(spec));
}

// The same group rebuilt by the oracle from the raw generator images.
inline oracle::Group oracle_group(const std::string& spec) {
  auto gens = parse_group_generators(spec);
  std::vector<oracle::Perm> raw;
  for (const auto& g : gens) raw.push_back(g.images());
  return oracle::closure(gens.front().degree(), raw);
}

inline oracle::Group to_oracle(const FiniteGroup& g, const Subgroup& s) {
  oracle::Group out;
  for (auto e : s.members()) out.insert(g.element(e).images());
  return out;
}

inline Permutation perm(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  return Permutation::from_cycles(degree, cycles);
}

inline Subgroup generated(const FiniteGroup& g, const std::vector<Permutation>& gens) {
  std::vector<Element> ids;
  for (const auto& p : gens) ids.push_back(g.index_of(p));
  return subgroup_closure(g, ids);
}

struct SuiteCase {
  const char* group;
  unsigned prime;
};

// The (G, p) pairs every full-run check sweeps over.
inline const std::vector<SuiteCase>& suite() {
  static const std::vector<SuiteCase> cases{
      {"Sym(3)", 2}, {"Sym(3)", 3}, {"Sym(4)", 2},  {"Sym(4)", 3},  {"Sym(5)", 2},
      {"Sym(5)", 5}, {"Alt(5)", 2}, {"Alt(5)", 3},  {"Alt(5)", 5},  {"Dih(8)", 2},
      {"Q8", 2},     {"SL(2,3)", 2}, {"SL(2,3)", 3}, {"Cyc(2)xCyc(2)", 2},
  };
  return cases;
}

}  // namespace test_support
