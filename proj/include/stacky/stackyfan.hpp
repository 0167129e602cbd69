#pragma once

#include "stacky/exactalg.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace stacky {

// Validation failure with a short machine-readable code alongside the
// human-readable message.  Codes: non-primitive-ray, nonpositive-level,
// index-out-of-range, duplicate-ray, duplicate-index-in-cone,
// dependent-generators, fan-axiom-violation, ray-not-in-any-cone,
// bad-document, rays-do-not-span, non-canonical-net, not-a-cone,
// degree-mismatch.
class FanError : public std::runtime_error {
 public:
  FanError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct Ray {
  std::vector<Int> v;  // primitive lattice vector spanning the ray
  Int level;           // positive; generator n = level * v
  std::vector<Int> n;

  friend bool operator==(const Ray&, const Ray&) = default;
};

struct Cone {
  std::vector<int> ray_indices;  // sorted, duplicate-free

  std::size_t size() const { return ray_indices.size(); }
  bool empty() const { return ray_indices.empty(); }

  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone& a, const Cone& b) {
    if (a.ray_indices.size() != b.ray_indices.size())
      return a.ray_indices.size() <=> b.ray_indices.size();
    return a.ray_indices <=> b.ray_indices;
  }
};

struct MultiplicityReport {
  Cone cone;
  Int mult;         // index of the sublattice spanned by the v's
  Int stacky_mult;  // same for the n's; equals mult * product of levels
};

struct AxiomFailure {
  Cone a, b;
  std::vector<Int> witness;  // point in both cones but not in their shared face
};

struct ValidationReport {
  bool ok = true;
  std::vector<AxiomFailure> failures;
};

struct SpanningTriple {
  Cone sigma, tau, gamma;  // sigma, tau disjoint; union of ray sets is gamma's
};

enum class AxiomCheck { enforce, skip };

// Simplicial fan with a positive integer level on each ray.  Immutable after
// construction; construction validates everything (primitivity, levels,
// simpliciality, face closure, pairwise cone compatibility).
class StackyFan {
 public:
  // max_cones lists the generating cones; all faces (including the empty
  // cone) are added.  Every ray index must appear in some cone.  Throws
  // FanError on any invalid input.  AxiomCheck::skip defers the pairwise
  // cone-compatibility test to an explicit check_fan_axioms call.
  static StackyFan from_data(int dim, std::vector<std::vector<Int>> ray_vectors,
                             std::vector<Int> levels, std::vector<std::vector<int>> max_cones,
                             AxiomCheck axioms = AxiomCheck::enforce);

  int dim() const { return dim_; }
  const std::vector<Ray>& rays() const { return rays_; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<Cone>& cones() const { return cones_; }  // sorted by (size, lex)
  const std::vector<Cone>& max_cones() const { return max_cones_; }
  bool contains(const std::vector<int>& ray_set) const;
  bool rays_span() const { return rays_span_; }
  bool canonical_net() const;  // all levels 1

  friend bool operator==(const StackyFan&, const StackyFan&) = default;

 private:
  StackyFan() = default;

  int dim_ = 0;
  std::vector<Ray> rays_;
  std::vector<Cone> cones_;
  std::vector<Cone> max_cones_;
  std::set<std::vector<int>> cone_set_;
  bool rays_span_ = false;
};

// Exact pairwise test that the point-set intersection of any two cones is
// the cone on their shared rays.  Runs on every unordered pair; failures
// carry a witness lattice point.
ValidationReport check_fan_axioms(const StackyFan& fan);

bool is_cone(const StackyFan& fan, const std::vector<int>& ray_set);

// Inclusion-minimal ray sets that are not cones, sorted lexicographically.
std::vector<std::vector<int>> minimal_nonfaces(const StackyFan& fan);

MultiplicityReport multiplicity(const StackyFan& fan, const Cone& cone);

// All triples (sigma, tau, gamma) with sigma, tau disjoint cones whose ray
// union is a cone gamma; each unordered pair appears once, sigma <= tau.
std::vector<SpanningTriple> spanning_pairs(const StackyFan& fan);

// True iff the support covers R^d.  nullopt when the maximal cones are not
// pure d-dimensional (test skipped).
std::optional<bool> is_complete(const StackyFan& fan);

}  // namespace stacky
