#include "stacky/stackyfan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace stacky {

namespace {

Int vector_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

std::string format_indices(const std::vector<int>& idx) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out << ",";
    out << idx[i];
  }
  out << "}";
  return out.str();
}

// Generators of the cone {z >= 0 : a*z = 0}, by successive hyperplane cuts
// of the positive orthant (double description without adjacency pruning;
// every returned vector lies in the cone and together they span it
// positively).  Vectors are gcd-normalized and deduplicated.
std::vector<std::vector<Int>> positive_kernel_generators(const IntMatrix& a) {
  const std::size_t n = a.cols();
  std::set<std::vector<Int>> rays;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n);
    e[i] = 1;
    rays.insert(std::move(e));
  }
  for (std::size_t row = 0; row < a.rows(); ++row) {
    std::vector<std::vector<Int>> pos, neg;
    std::set<std::vector<Int>> next;
    std::vector<Int> val(n);
    for (const auto& r : rays) {
      Int s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (r[j] != 0) s += a(row, j) * r[j];
      if (s == 0)
        next.insert(r);
      else if (s > 0)
        pos.push_back(r);
      else
        neg.push_back(r);
    }
    for (const auto& p : pos) {
      Int sp = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (p[j] != 0) sp += a(row, j) * p[j];
      for (const auto& q : neg) {
        Int sq = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (q[j] != 0) sq += a(row, j) * q[j];
        // sp*q - sq*p lies on the hyperplane and stays nonnegative
        std::vector<Int> c(n);
        for (std::size_t j = 0; j < n; ++j) c[j] = sp * q[j] - sq * p[j];
        Int g = vector_gcd(c);
        if (g == 0) continue;
        for (Int& x : c) x /= g;
        next.insert(std::move(c));
      }
    }
    rays = std::move(next);
  }
  return {rays.begin(), rays.end()};
}

std::vector<int> shared_indices(const Cone& a, const Cone& b) {
  std::vector<int> out;
  std::set_intersection(a.ray_indices.begin(), a.ray_indices.end(), b.ray_indices.begin(),
                        b.ray_indices.end(), std::back_inserter(out));
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Point-set intersection of two simplicial cones equals the cone on their
// shared rays iff no nonnegative dependence v_sigma*lambda = v_tau*mu uses a
// ray outside the shared set.
std::optional<AxiomFailure> check_cone_pair(const StackyFan& fan, const Cone& sigma,
                                            const Cone& tau) {
  if (subset_of(sigma.ray_indices, tau.ray_indices) ||
      subset_of(tau.ray_indices, sigma.ray_indices))
    return std::nullopt;
  const int d = fan.dim();
  const std::size_t s = sigma.size(), t = tau.size();
  IntMatrix a(d, s + t);
  for (std::size_t j = 0; j < s; ++j)
    for (int i = 0; i < d; ++i) a(i, j) = fan.rays()[sigma.ray_indices[j]].v[i];
  for (std::size_t j = 0; j < t; ++j)
    for (int i = 0; i < d; ++i) a(i, s + j) = -fan.rays()[tau.ray_indices[j]].v[i];

  const std::vector<int> shared = shared_indices(sigma, tau);
  for (const auto& z : positive_kernel_generators(a)) {
    bool allowed = true;
    for (std::size_t j = 0; j < s && allowed; ++j)
      if (z[j] > 0 && !std::binary_search(shared.begin(), shared.end(), sigma.ray_indices[j]))
        allowed = false;
    for (std::size_t j = 0; j < t && allowed; ++j)
      if (z[s + j] > 0 && !std::binary_search(shared.begin(), shared.end(), tau.ray_indices[j]))
        allowed = false;
    if (allowed) continue;
    std::vector<Int> witness(d);
    for (std::size_t j = 0; j < s; ++j)
      if (z[j] != 0)
        for (int i = 0; i < d; ++i) witness[i] += z[j] * fan.rays()[sigma.ray_indices[j]].v[i];
    return AxiomFailure{sigma, tau, std::move(witness)};
  }
  return std::nullopt;
}

IntMatrix ray_columns(const StackyFan& fan, const std::vector<int>& indices, bool use_n) {
  IntMatrix m(fan.dim(), indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const Ray& r = fan.rays()[indices[j]];
    for (int i = 0; i < fan.dim(); ++i) m(i, j) = use_n ? r.n[i] : r.v[i];
  }
  return m;
}

}  // namespace

StackyFan StackyFan::from_data(int dim, std::vector<std::vector<Int>> ray_vectors,
                               std::vector<Int> levels, std::vector<std::vector<int>> max_cones,
                               AxiomCheck axioms_mode) {
  if (dim < 0) throw FanError("bad-document", "dim must be nonnegative");
  const std::size_t n = ray_vectors.size();
  if (levels.empty()) levels.assign(n, Int(1));
  if (levels.size() != n)
    throw FanError("bad-document", "levels list length does not match ray count");

  StackyFan fan;
  fan.dim_ = dim;
  fan.rays_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ray_vectors[i].size() != static_cast<std::size_t>(dim))
      throw FanError("bad-document", "ray " + std::to_string(i) + " has wrong length");
    if (vector_gcd(ray_vectors[i]) != 1)
      throw FanError("non-primitive-ray",
                     "ray " + std::to_string(i) + " is not a primitive lattice vector");
    if (levels[i] < 1)
      throw FanError("nonpositive-level", "level of ray " + std::to_string(i) + " must be >= 1");
    Ray r;
    r.v = std::move(ray_vectors[i]);
    r.level = levels[i];
    r.n.resize(dim);
    for (int k = 0; k < dim; ++k) r.n[k] = r.level * r.v[k];
    fan.rays_.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (fan.rays_[i].v == fan.rays_[j].v)
        throw FanError("duplicate-ray",
                       "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  // Normalize the generating cones and close under taking subsets.
  std::set<std::vector<int>> closure;
  closure.insert({});
  for (auto& cone : max_cones) {
    std::vector<int> idx = cone;
    std::sort(idx.begin(), idx.end());
    for (int r : idx)
      if (r < 0 || static_cast<std::size_t>(r) >= n)
        throw FanError("index-out-of-range", "cone ray index " + std::to_string(r));
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw FanError("duplicate-index-in-cone",
                     "cone " + format_indices(idx) + " repeats a ray index");
    if (rank(ray_columns(fan, idx, false)) != idx.size())
      throw FanError("dependent-generators",
                     "cone " + format_indices(idx) + " has linearly dependent generators");
    const std::size_t s = idx.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << s); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < s; ++b)
        if (mask & (std::uint64_t(1) << b)) face.push_back(idx[b]);
      closure.insert(std::move(face));
    }
  }

  std::vector<bool> covered(n, false);
  for (const auto& c : closure)
    for (int r : c) covered[r] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!covered[i])
      throw FanError("ray-not-in-any-cone", "ray " + std::to_string(i) + " appears in no cone");

  fan.cone_set_ = closure;
  for (const auto& c : closure) fan.cones_.push_back(Cone{c});
  std::sort(fan.cones_.begin(), fan.cones_.end());
  for (const Cone& c : fan.cones_) {
    bool maximal = true;
    for (const Cone& other : fan.cones_)
      if (&other != &c && c.size() < other.size() &&
          subset_of(c.ray_indices, other.ray_indices)) {
        maximal = false;
        break;
      }
    if (maximal) fan.max_cones_.push_back(c);
  }

  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  fan.rays_span_ = rank(ray_columns(fan, all, false)) == static_cast<std::size_t>(dim);

  if (axioms_mode == AxiomCheck::enforce) {
    ValidationReport axioms = check_fan_axioms(fan);
    if (!axioms.ok) {
      const AxiomFailure& f = axioms.failures.front();
      throw FanError("fan-axiom-violation",
                     "cones " + format_indices(f.a.ray_indices) + " and " +
                         format_indices(f.b.ray_indices) + " overlap outside their shared face");
    }
  }
  return fan;
}

bool StackyFan::contains(const std::vector<int>& ray_set) const {
  return cone_set_.count(ray_set) > 0;
}

bool StackyFan::canonical_net() const {
  return std::all_of(rays_.begin(), rays_.end(), [](const Ray& r) { return r.level == 1; });
}

ValidationReport check_fan_axioms(const StackyFan& fan) {
  ValidationReport report;
  const auto& cones = fan.cones();
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      if (auto failure = check_cone_pair(fan, cones[i], cones[j])) {
        report.ok = false;
        report.failures.push_back(std::move(*failure));
      }
  return report;
}

bool is_cone(const StackyFan& fan, const std::vector<int>& ray_set) {
  std::vector<int> sorted = ray_set;
  std::sort(sorted.begin(), sorted.end());
  return fan.contains(sorted);
}

std::vector<std::vector<int>> minimal_nonfaces(const StackyFan& fan) {
  const std::size_t n = fan.num_rays();
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<int> s;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::uint64_t(1) << b)) s.push_back(static_cast<int>(b));
    if (s.size() < 2 || fan.contains(s)) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
      std::vector<int> sub;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != drop) sub.push_back(s[k]);
      if (!fan.contains(sub)) minimal = false;
    }
    if (minimal) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MultiplicityReport multiplicity(const StackyFan& fan, const Cone& cone) {
  if (!fan.contains(cone.ray_indices))
    throw FanError("not-a-cone", "multiplicity of a set that is not a cone of the fan");
  MultiplicityReport report;
  report.cone = cone;
  report.mult = 1;
  report.stacky_mult = 1;
  for (const Int& f : invariant_factors(ray_columns(fan, cone.ray_indices, false)))
    report.mult *= f;
  for (const Int& f : invariant_factors(ray_columns(fan, cone.ray_indices, true)))
    report.stacky_mult *= f;
  return report;
}

std::vector<SpanningTriple> spanning_pairs(const StackyFan& fan) {
  std::vector<SpanningTriple> out;
  for (const Cone& gamma : fan.cones()) {
    const std::size_t s = gamma.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << s); ++mask) {
      Cone sigma, tau;
      for (std::size_t b = 0; b < s; ++b) {
        if (mask & (std::uint64_t(1) << b))
          sigma.ray_indices.push_back(gamma.ray_indices[b]);
        else
          tau.ray_indices.push_back(gamma.ray_indices[b]);
      }
      if (sigma <= tau) out.push_back(SpanningTriple{sigma, tau, gamma});
    }
  }
  std::sort(out.begin(), out.end(), [](const SpanningTriple& a, const SpanningTriple& b) {
    if (a.gamma != b.gamma) return a.gamma < b.gamma;
    return a.sigma < b.sigma;
  });
  return out;
}

std::optional<bool> is_complete(const StackyFan& fan) {
  const int d = fan.dim();
  for (const Cone& c : fan.max_cones())
    if (c.size() != static_cast<std::size_t>(d)) return std::nullopt;
  if (d == 0) return true;

  // Every (d-1)-subset of a maximal cone must lie in exactly two maximal
  // cones, and the wall-adjacency graph must be connected.
  const auto& maxc = fan.max_cones();
  std::map<std::vector<int>, std::vector<std::size_t>> wall_owners;
  for (std::size_t m = 0; m < maxc.size(); ++m)
    for (std::size_t drop = 0; drop < maxc[m].size(); ++drop) {
      std::vector<int> wall;
      for (std::size_t k = 0; k < maxc[m].size(); ++k)
        if (k != drop) wall.push_back(maxc[m].ray_indices[k]);
      wall_owners[wall].push_back(m);
    }
  std::vector<std::size_t> parent(maxc.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [wall, owners] : wall_owners) {
    if (owners.size() != 2) return false;
    parent[find(owners[0])] = find(owners[1]);
  }
  for (std::size_t m = 1; m < maxc.size(); ++m)
    if (find(m) != find(0)) return false;
  return true;
}

}  // namespace stacky
