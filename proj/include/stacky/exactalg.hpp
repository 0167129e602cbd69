#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace stacky {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

// u * a * v = diag(d); u, v unimodular; d nonnegative, divisibility-sorted,
// zeros trailing.  d has min(rows, cols) entries.
struct SmithForm {
  std::vector<Int> d;
  IntMatrix u;
  IntMatrix v;
};

// Isomorphism type of a finitely generated abelian group: Z^free_rank plus
// cyclic factors Z/t for t in torsion (each > 1, each dividing the next).
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::string to_string(const AbelianInvariants& g);

Int floor_div(const Int& a, const Int& b);

// Row Hermite form: returns (h, u) with u unimodular, u*a = h, h in row
// echelon form with positive pivots and entries above each pivot reduced
// into [0, pivot).
std::pair<IntMatrix, IntMatrix> hermite_normal_form(const IntMatrix& a);

SmithForm smith_normal_form(const IntMatrix& a);

// Diagonal of the Smith form without accumulating transforms.
std::vector<Int> invariant_factors(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

// Invariants of Z^ambient_rank / column-span(relations).
AbelianInvariants cokernel_invariants(const IntMatrix& relations, std::size_t ambient_rank);

// Columns form a basis of the saturated lattice {x : a*x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

}  // namespace stacky
