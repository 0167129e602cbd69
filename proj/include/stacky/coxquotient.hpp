#pragma once

#include "stacky/exactalg.hpp"
#include "stacky/stackyfan.hpp"

#include <vector>

namespace stacky {

// Data of the quotient presentation: the acting diagonalizable group via its
// character group Z^n / (rows of the pairing matrix), the irrelevant
// monomials cutting out the quasi-affine locus, and the rank of the lattice
// of characters vanishing on all rays.
struct QuotientPresentation {
  std::size_t num_vars = 0;
  IntMatrix pairing;  // d x n, entry (i, rho) = i-th coordinate of n_rho
  AbelianInvariants character_group;
  std::size_t torus_rank = 0;
  std::vector<Int> finite_part;
  std::vector<std::vector<int>> irrelevant_monomials;  // ray complements of maximal cones
  std::size_t kernel_rank = 0;
};

QuotientPresentation quotient_presentation(const StackyFan& fan);

// Order of the stabilizer at a generic point of the divisor of the ray:
// gcd of the coordinates of n_rho, which equals the level.
Int generic_stabilizer_order(const StackyFan& fan, int ray_index);

// Basis (as columns) of the characters m with <m, v_rho> = 0 for all rays.
IntMatrix kernel_characters(const StackyFan& fan);

}  // namespace stacky
