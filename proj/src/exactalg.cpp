#include "stacky/exactalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace stacky {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Int& bkj = b(k, j);
        if (bkj != 0) c(i, j) += aik * bkj;
      }
    }
  return c;
}

std::string to_string(const AbelianInvariants& g) {
  std::ostringstream out;
  bool first = true;
  if (g.free_rank == 1) {
    out << "Z";
    first = false;
  } else if (g.free_rank > 1) {
    out << "Z^" << g.free_rank;
    first = false;
  }
  for (const Int& t : g.torsion) {
    if (!first) out << " ⊕ ";
    out << "Z/" << t;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(j, k));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m(k, i), m(k, j));
}

// row_i += f * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, const Int& f) {
  if (f == 0) return;
  for (std::size_t k = 0; k < m.cols(); ++k)
    if (m(j, k) != 0) m(i, k) += f * m(j, k);
}

void add_col(IntMatrix& m, std::size_t i, std::size_t j, const Int& f) {
  if (f == 0) return;
  for (std::size_t k = 0; k < m.rows(); ++k)
    if (m(k, j) != 0) m(k, i) += f * m(k, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = -m(i, k);
}

// In-place row Hermite reduction; u (if non-null) accumulates the row ops.
void hermite_inplace(IntMatrix& h, IntMatrix* u) {
  const std::size_t m = h.rows(), n = h.cols();
  if (u) *u = IntMatrix::identity(m);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
    // Euclidean elimination below pivot_row in this column.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t r = pivot_row; r < m; ++r) {
        if (h(r, col) == 0) continue;
        if (!best || abs(h(r, col)) < abs(h(*best, col))) best = r;
      }
      if (!best) break;
      if (*best != pivot_row) {
        swap_rows(h, *best, pivot_row);
        if (u) swap_rows(*u, *best, pivot_row);
      }
      if (h(pivot_row, col) < 0) {
        negate_row(h, pivot_row);
        if (u) negate_row(*u, pivot_row);
      }
      bool clean = true;
      for (std::size_t r = pivot_row + 1; r < m; ++r) {
        if (h(r, col) == 0) continue;
        Int q = floor_div(h(r, col), h(pivot_row, col));
        add_row(h, r, pivot_row, -q);
        if (u) add_row(*u, r, pivot_row, -q);
        if (h(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(pivot_row, col) == 0) continue;
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Int q = floor_div(h(r, col), h(pivot_row, col));
      add_row(h, r, pivot_row, -q);
      if (u) add_row(*u, r, pivot_row, -q);
    }
    ++pivot_row;
  }
}

bool pivot_is_lone(const IntMatrix& a, std::size_t t) {
  for (std::size_t r = t + 1; r < a.rows(); ++r)
    if (a(r, t) != 0) return false;
  for (std::size_t c = t + 1; c < a.cols(); ++c)
    if (a(t, c) != 0) return false;
  return true;
}

// Diagonalize with unimodular row/column operations; diagonal entries end up
// nonnegative in a divisibility chain with zeros trailing.  Pivoting picks
// the smallest nonzero magnitude in the remaining submatrix.
std::vector<Int> smith_inplace(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t steps = std::min(m, n);
  if (u) *u = IntMatrix::identity(m);
  if (v) *v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c) {
          if (a(r, c) == 0) continue;
          if (!best || abs(a(r, c)) < abs(a(best->first, best->second)))
            best = std::make_pair(r, c);
        }
      if (!best) break;  // remaining submatrix zero; trailing diagonal stays 0
      if (best->first != t) {
        swap_rows(a, best->first, t);
        if (u) swap_rows(*u, best->first, t);
      }
      if (best->second != t) {
        swap_cols(a, best->second, t);
        if (v) swap_cols(*v, best->second, t);
      }
      for (std::size_t r = t + 1; r < m; ++r) {
        if (a(r, t) == 0) continue;
        Int q = floor_div(a(r, t), a(t, t));
        add_row(a, r, t, -q);
        if (u) add_row(*u, r, t, -q);
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (a(t, c) == 0) continue;
        Int q = floor_div(a(t, c), a(t, t));
        add_col(a, c, t, -q);
        if (v) add_col(*v, c, t, -q);
      }
      if (!pivot_is_lone(a, t)) continue;
      // Pivot must divide every remaining entry, else fold the offending row
      // in and re-eliminate.
      bool divides_all = true;
      for (std::size_t r = t + 1; r < m && divides_all; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a(r, c) % a(t, t) != 0) {
            add_row(a, t, r, 1);
            if (u) add_row(*u, t, r, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      if (u) negate_row(*u, t);
    }
  }

  std::vector<Int> d(steps);
  for (std::size_t t = 0; t < steps; ++t) d[t] = a(t, t);
  return d;
}

}  // namespace

std::pair<IntMatrix, IntMatrix> hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a, u;
  hermite_inplace(h, &u);
  return {std::move(h), std::move(u)};
}

SmithForm smith_normal_form(const IntMatrix& a) {
  IntMatrix work = a;
  SmithForm s;
  s.d = smith_inplace(work, &s.u, &s.v);
  return s;
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
  IntMatrix work = a;
  return smith_inplace(work, nullptr, nullptr);
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix h = a;
  hermite_inplace(h, nullptr);
  std::size_t r = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++r;
  }
  return r;
}

AbelianInvariants cokernel_invariants(const IntMatrix& relations, std::size_t ambient_rank) {
  if (relations.rows() != ambient_rank)
    throw std::invalid_argument("relation matrix must have ambient_rank rows");
  std::vector<Int> d = invariant_factors(relations);
  AbelianInvariants g;
  std::size_t nonzero = 0;
  for (const Int& di : d) {
    if (di == 0) continue;
    ++nonzero;
    if (di > 1) g.torsion.push_back(di);
  }
  g.free_rank = ambient_rank - nonzero;
  return g;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  const std::size_t n = a.cols();
  std::vector<std::size_t> free_cols;
  for (std::size_t i = 0; i < n; ++i) {
    Int di = i < s.d.size() ? s.d[i] : Int(0);
    if (di == 0) free_cols.push_back(i);
  }
  IntMatrix basis(n, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = s.v(i, free_cols[j]);
  return basis;
}

}  // namespace stacky
