#pragma once

#include "stacky/exactalg.hpp"
#include "stacky/stackyfan.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace stacky {

// Presentation Z[D_0..D_{n-1}] / (linear forms + non-face monomials).
// Row i of linear_forms holds the i-th coordinates of the ray generators
// n_rho, so the rows are the d independent linear relations among the
// divisor classes.
struct RingPresentation {
  std::size_t num_vars = 0;
  IntMatrix linear_forms;
  std::vector<std::vector<int>> nonface_generators;
};

struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  std::vector<int> support() const;  // indices with positive exponent

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents <=> b.exponents;
  }
};

// Degree-k part of the presentation as a finitely generated abelian group:
// basis monomials modulo the columns of relation_matrix.
struct GradedPiece {
  int degree = 0;
  std::vector<Monomial> basis;  // face-supported, lexicographic
  IntMatrix relation_matrix;
  AbelianInvariants invariants;
  SmithForm smith;  // of relation_matrix; smith.u is the normal-form change of basis

  std::optional<std::size_t> index_of(const Monomial& m) const;

  std::map<std::vector<int>, std::size_t> index;
};

struct ChowClass {
  int degree = 0;
  std::vector<Int> coords;  // over the degree's basis

  friend bool operator==(const ChowClass&, const ChowClass&) = default;
};

// Throws FanError("rays-do-not-span") when the rays fail to span R^d, which
// the graded presentation requires.
RingPresentation presentation(const StackyFan& fan);

// Basis of face-supported degree-k monomials; relations are the products of
// the linear forms with the face-supported degree-(k-1) monomials, with
// non-face-supported products dropped (they already lie in the monomial
// ideal).
GradedPiece graded_piece(const RingPresentation& pres, const StackyFan& fan, int k);

// Independent brute force: ambient group on ALL degree-k monomials, modulo
// every linear-form multiple and every degree-k multiple of every non-face
// generator.  Same abstract group as graded_piece; used as cross-check.
AbelianInvariants graded_piece_oracle(const RingPresentation& pres, const StackyFan& fan, int k);

ChowClass class_of_monomial(const GradedPiece& piece, const Monomial& m);

// Canonical coordinates in the cokernel: smith.u applied to coords, entry i
// reduced into [0, d_i) when d_i > 1, zeroed when d_i = 1, exact when free.
// Two classes are equal in the graded piece iff their normal forms agree.
std::vector<Int> normal_form(const ChowClass& c, const GradedPiece& piece);

// Degreewise view of the graded ring with a per-degree piece cache and the
// class arithmetic that needs pieces from several degrees.
class GradedRing {
 public:
  explicit GradedRing(StackyFan fan);

  const StackyFan& fan() const { return fan_; }
  const RingPresentation& pres() const { return pres_; }

  std::shared_ptr<const GradedPiece> piece(int k) const;  // cached, thread-safe

  ChowClass multiply(const ChowClass& a, const ChowClass& b) const;
  ChowClass cycle_class(const Cone& sigma) const;  // class of the squarefree monomial
  std::vector<Int> normal_form(const ChowClass& c) const;

 private:
  StackyFan fan_;
  RingPresentation pres_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const GradedPiece>> cache_;
};

// Intersection coefficients mult(sigma)*mult(tau)/mult(gamma) on the coarse
// space, for nonempty spanning pairs.  Canonical net only.
struct IntersectionEntry {
  Cone sigma, tau, gamma;
  Rational coeff;
};

std::vector<IntersectionEntry> coarse_intersection_table(const StackyFan& fan);

// Enumeration helpers shared with the oracle and the CLI.
std::vector<Monomial> face_supported_monomials(const StackyFan& fan, int k);
std::vector<Monomial> all_monomials(std::size_t num_vars, int k);

}  // namespace stacky
