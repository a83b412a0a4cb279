#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "morse_orbit/matching.hpp"

namespace morse_orbit {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init);

  std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  bool is_zero() const;
};

/// Product a*b, or nullopt on int64 overflow.
std::optional<IntegerMatrix> checked_product(const IntegerMatrix& a, const IntegerMatrix& b);

/// Augmentation-free cellular chain complex. boundaries[n-1] is the map
/// from n-cells to (n-1)-cells, of size cells_by_dim[n-1] x cells_by_dim[n].
struct ChainComplex {
  std::vector<std::size_t> cells_by_dim;
  std::vector<IntegerMatrix> boundaries;

  const IntegerMatrix& boundary(int n) const { return boundaries.at(n - 1); }
};

/// Face lookup used by boundary assembly: row index of d_j of cell `index`
/// in dimension `dim`.
using FaceFn = std::function<std::size_t(int dim, std::size_t index, std::size_t j)>;

/// Entry (row, col) is the sum of (-1)^j over faces d_j of the column cell
/// landing on the row cell.
ChainComplex boundary_matrices(std::vector<std::size_t> cells_by_dim, const FaceFn& face);
ChainComplex boundary_matrices(const OrbitComplex& complex);

bool boundary_squares_to_zero(const ChainComplex& complex);

struct SmithForm {
  std::size_t rank = 0;
  std::vector<BigInt> invariant_factors;  // nonzero diagonal, each dividing the next
};

/// Exact Smith normal form. Runs in int64 with overflow checks and restarts
/// in arbitrary precision when an intermediate value overflows.
SmithForm smith_normal_form(const IntegerMatrix& matrix);

struct HomologyGroup {
  int dim = 0;
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1

  bool trivial() const { return betti == 0 && torsion.empty(); }
};

/// Reduced integral homology in every dimension from 0 to the top.
std::vector<HomologyGroup> reduced_homology(const ChainComplex& complex);

std::string to_string(const HomologyGroup& h);

struct EulerReport {
  long long euler_raw = 0;        // sum (-1)^n #cells_n
  long long euler_critical = 0;   // sum (-1)^n #critical_n
  bool counts_partition = false;  // #cells_n = red + col + crit in every dimension
  bool pairs_cancel = false;      // #red_n = #col_{n+1}
  bool morse_inequalities = false;
  bool ok() const {
    return euler_raw == 1 && euler_critical == 1 && counts_partition && pairs_cancel && morse_inequalities;
  }
};

/// chi must be 1, the class counts must account for every cell, and the
/// critical vector must bound the unreduced Betti numbers.
EulerReport euler_and_morse_consistency(const MorseMatching& matching, const std::vector<HomologyGroup>& homology);

}  // namespace morse_orbit
