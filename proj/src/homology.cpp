#include "morse_orbit/homology.hpp"

#include <algorithm>

namespace morse_orbit {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
  rows = init.size();
  cols = rows ? init.begin()->size() : 0;
  for (const auto& row : init) {
    if (row.size() != cols) throw Error(ErrorCode::IndexOutOfRange, "ragged matrix literal");
    data.insert(data.end(), row.begin(), row.end());
  }
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](std::int64_t x) { return x == 0; });
}

std::optional<IntegerMatrix> checked_product(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::IndexOutOfRange, "matrix shapes do not compose");
  IntegerMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      auto x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        std::int64_t term, sum;
        if (__builtin_mul_overflow(x, b.at(k, j), &term) || __builtin_add_overflow(out.at(i, j), term, &sum))
          return std::nullopt;
        out.at(i, j) = sum;
      }
    }
  return out;
}

ChainComplex boundary_matrices(std::vector<std::size_t> cells_by_dim, const FaceFn& face) {
  ChainComplex cx;
  cx.cells_by_dim = std::move(cells_by_dim);
  for (std::size_t n = 1; n < cx.cells_by_dim.size(); ++n) {
    IntegerMatrix m(cx.cells_by_dim[n - 1], cx.cells_by_dim[n]);
    for (std::size_t col = 0; col < m.cols; ++col)
      for (std::size_t j = 0; j <= n; ++j) m.at(face(static_cast<int>(n), col, j), col) += (j % 2 == 0) ? 1 : -1;
    cx.boundaries.push_back(std::move(m));
  }
  return cx;
}

ChainComplex boundary_matrices(const OrbitComplex& complex) {
  return boundary_matrices(complex.counts_by_dimension(), [&](int dim, std::size_t index, std::size_t j) {
    return complex.face_of(CellId{dim, static_cast<std::uint32_t>(index)}, j)->index;
  });
}

bool boundary_squares_to_zero(const ChainComplex& complex) {
  for (std::size_t n = 1; n < complex.boundaries.size(); ++n) {
    auto prod = checked_product(complex.boundaries[n - 1], complex.boundaries[n]);
    if (!prod || !prod->is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct Overflow {};

std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t t, r;
  if (__builtin_mul_overflow(q, b, &t) || __builtin_sub_overflow(a, t, &r)) throw Overflow{};
  return r;
}
BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

std::int64_t magnitude(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}
BigInt magnitude(const BigInt& a) { return abs(a); }

template <class T>
class Reducer {
 public:
  Reducer(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), a_(std::move(data)) {}

  SmithForm run() {
    std::vector<T> diagonal;
    for (std::size_t t = 0; t < std::min(rows_, cols_); ++t) {
      if (!move_min_to(t)) break;
      while (!clear_cross(t)) {
      }
      diagonal.push_back(magnitude(at(t, t)));
    }
    // diag(a, b) ~ diag(gcd, lcm) restores the divisibility chain.
    for (std::size_t i = 0; i < diagonal.size(); ++i)
      for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
        T g = gcd(diagonal[i], diagonal[j]);
        T l = diagonal[i] / g * diagonal[j];
        diagonal[i] = g;
        diagonal[j] = l;
      }
    SmithForm out;
    out.rank = diagonal.size();
    for (const auto& d : diagonal) out.invariant_factors.emplace_back(d);
    return out;
  }

 private:
  T& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  static T gcd(T a, T b) {
    while (b != 0) {
      T r = a % b;
      a = b;
      b = r;
    }
    return a;
  }

  // Swaps the smallest nonzero entry of the block [t, rows) x [t, cols) into (t, t).
  bool move_min_to(std::size_t t) {
    std::size_t best_r = rows_, best_c = cols_;
    T best{};
    for (std::size_t r = t; r < rows_ && best != 1; ++r)
      for (std::size_t c = t; c < cols_; ++c) {
        const T& v = at(r, c);
        if (v == 0) continue;
        T m = magnitude(v);
        if (best_r == rows_ || m < best) {
          best = m;
          best_r = r;
          best_c = c;
          if (best == 1) break;
        }
      }
    if (best_r == rows_) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
  }

  // Eliminates row t and column t beyond the pivot. Returns false when a
  // remainder smaller than the pivot was swapped in and another pass is needed.
  bool clear_cross(std::size_t t) {
    const T pivot = at(t, t);
    for (std::size_t r = t + 1; r < rows_; ++r) {
      if (at(r, t) == 0) continue;
      T q = at(r, t) / pivot;
      for (std::size_t c = t; c < cols_; ++c)
        if (at(t, c) != 0) at(r, c) = sub_mul(at(r, c), q, at(t, c));
      if (at(r, t) != 0) {
        swap_rows(t, r);
        return false;
      }
    }
    for (std::size_t c = t + 1; c < cols_; ++c) {
      if (at(t, c) == 0) continue;
      T q = at(t, c) / pivot;
      for (std::size_t r = t; r < rows_; ++r)
        if (at(r, t) != 0) at(r, c) = sub_mul(at(r, c), q, at(r, t));
      if (at(t, c) != 0) {
        swap_cols(t, c);
        return false;
      }
    }
    return true;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> a_;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& matrix) {
  try {
    return Reducer<std::int64_t>(matrix.rows, matrix.cols, matrix.data).run();
  } catch (const Overflow&) {
    std::vector<BigInt> wide(matrix.data.begin(), matrix.data.end());
    return Reducer<BigInt>(matrix.rows, matrix.cols, std::move(wide)).run();
  }
}

std::vector<HomologyGroup> reduced_homology(const ChainComplex& complex) {
  const std::size_t top = complex.cells_by_dim.size();
  std::vector<SmithForm> forms;  // forms[n] for boundary of dimension n, n >= 1
  forms.resize(top + 1);
  for (std::size_t n = 1; n < top; ++n) forms[n] = smith_normal_form(complex.boundary(static_cast<int>(n)));
  // Augmentation C_0 -> Z has rank 1 whenever there is a vertex.
  if (top > 0 && complex.cells_by_dim[0] > 0) forms[0].rank = 1;

  std::vector<HomologyGroup> out;
  for (std::size_t n = 0; n < top; ++n) {
    HomologyGroup h;
    h.dim = static_cast<int>(n);
    h.betti = complex.cells_by_dim[n] - forms[n].rank - forms[n + 1].rank;
    for (const auto& f : forms[n + 1].invariant_factors)
      if (f > 1) h.torsion.push_back(f);
    out.push_back(std::move(h));
  }
  return out;
}

std::string to_string(const HomologyGroup& h) {
  if (h.trivial()) return "0";
  std::string out;
  if (h.betti > 0) out = h.betti == 1 ? "Z" : "Z^" + std::to_string(h.betti);
  for (const auto& t : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out;
}

EulerReport euler_and_morse_consistency(const MorseMatching& matching, const std::vector<HomologyGroup>& homology) {
  EulerReport r;
  const auto counts = matching.complex().counts_by_dimension();
  const auto crit = matching.class_counts(CellClass::Critical);
  const auto red = matching.class_counts(CellClass::Redundant);
  const auto col = matching.class_counts(CellClass::Collapsible);
  r.counts_partition = true;
  r.pairs_cancel = true;
  for (std::size_t n = 0; n < counts.size(); ++n) {
    long long sign = n % 2 == 0 ? 1 : -1;
    r.euler_raw += sign * static_cast<long long>(counts[n]);
    r.euler_critical += sign * static_cast<long long>(crit[n]);
    if (counts[n] != crit[n] + red[n] + col[n]) r.counts_partition = false;
    std::size_t col_above = n + 1 < col.size() ? col[n + 1] : 0;
    if (red[n] != col_above) r.pairs_cancel = false;
  }
  if (!col.empty() && col[0] != 0) r.pairs_cancel = false;
  r.morse_inequalities = true;
  for (const auto& h : homology) {
    std::size_t unreduced = h.betti + (h.dim == 0 ? 1 : 0);
    std::size_t bound = static_cast<std::size_t>(h.dim) < crit.size() ? crit[h.dim] : 0;
    if (unreduced > bound) r.morse_inequalities = false;
  }
  return r;
}

}  // namespace morse_orbit
