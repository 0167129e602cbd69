#include "stacky/coxquotient.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace stacky {

QuotientPresentation quotient_presentation(const StackyFan& fan) {
  const std::size_t n = fan.num_rays();
  const int d = fan.dim();

  QuotientPresentation q;
  q.num_vars = n;
  q.pairing = IntMatrix(d, n);
  for (std::size_t rho = 0; rho < n; ++rho)
    for (int i = 0; i < d; ++i) q.pairing(i, rho) = fan.rays()[rho].n[i];

  // Characters of the group: Z^n modulo the image of the dual lattice under
  // m |-> (<m, n_rho>)_rho, i.e. modulo the columns of the transpose.
  q.character_group = cokernel_invariants(q.pairing.transpose(), n);
  q.torus_rank = q.character_group.free_rank;
  q.finite_part = q.character_group.torsion;

  std::set<std::vector<int>> complements;
  for (const Cone& sigma : fan.max_cones()) {
    std::vector<int> complement;
    for (std::size_t rho = 0; rho < n; ++rho)
      if (!std::binary_search(sigma.ray_indices.begin(), sigma.ray_indices.end(),
                              static_cast<int>(rho)))
        complement.push_back(static_cast<int>(rho));
    complements.insert(std::move(complement));
  }
  q.irrelevant_monomials.assign(complements.begin(), complements.end());

  q.kernel_rank = kernel_characters(fan).cols();
  return q;
}

Int generic_stabilizer_order(const StackyFan& fan, int ray_index) {
  if (ray_index < 0 || static_cast<std::size_t>(ray_index) >= fan.num_rays())
    throw FanError("index-out-of-range", "ray index " + std::to_string(ray_index));
  const Ray& ray = fan.rays()[ray_index];
  Int g = 0;
  for (const Int& x : ray.n) g = gcd(g, x);
  assert(g == ray.level);  // primitivity of v makes gcd(n) the level
  return g;
}

IntMatrix kernel_characters(const StackyFan& fan) {
  // rows are the primitive ray vectors; the kernel is the lattice of
  // characters pairing to zero with every ray
  IntMatrix rows(fan.num_rays(), fan.dim());
  for (std::size_t rho = 0; rho < fan.num_rays(); ++rho)
    for (int i = 0; i < fan.dim(); ++i) rows(rho, i) = fan.rays()[rho].v[i];
  return kernel_basis(rows);
}

}  // namespace stacky
