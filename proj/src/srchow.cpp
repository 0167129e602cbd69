#include "stacky/srchow.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stacky {

int Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > 0) s.push_back(static_cast<int>(i));
  return s;
}

std::optional<std::size_t> GradedPiece::index_of(const Monomial& m) const {
  auto it = index.find(m.exponents);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

// All ways to write k as an ordered sum of positions.size() positive parts,
// emitted as exponent vectors over num_vars variables.
void compositions_into(const std::vector<int>& positions, std::size_t num_vars, int k,
                       std::size_t at, std::vector<int>& current, std::vector<Monomial>& out) {
  const int remaining_slots = static_cast<int>(positions.size() - at);
  if (remaining_slots == 0) {
    if (k == 0) out.push_back(Monomial{current});
    return;
  }
  for (int part = 1; part + (remaining_slots - 1) <= k; ++part) {
    current[positions[at]] = part;
    compositions_into(positions, num_vars, k - part, at + 1, current, out);
    current[positions[at]] = 0;
  }
}

void check_degree(int k) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
}

}  // namespace

std::vector<Monomial> face_supported_monomials(const StackyFan& fan, int k) {
  check_degree(k);
  const std::size_t n = fan.num_rays();
  std::vector<Monomial> out;
  for (const Cone& c : fan.cones()) {
    const std::size_t s = c.size();
    if (k == 0) {
      if (s == 0) out.push_back(Monomial{std::vector<int>(n, 0)});
      continue;
    }
    if (s == 0 || s > static_cast<std::size_t>(k)) continue;
    std::vector<int> current(n, 0);
    compositions_into(c.ray_indices, n, k, 0, current, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> all_monomials(std::size_t num_vars, int k) {
  check_degree(k);
  std::vector<Monomial> out;
  std::vector<int> current(num_vars, 0);
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == num_vars) {
      current[var] = left;
      out.push_back(Monomial{current});
      current[var] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      current[var] = e;
      self(self, var + 1, left - e);
      current[var] = 0;
    }
  };
  if (num_vars == 0) {
    if (k == 0) out.push_back(Monomial{current});
  } else {
    rec(rec, 0, k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RingPresentation presentation(const StackyFan& fan) {
  if (!fan.rays_span())
    throw FanError("rays-do-not-span",
                   "the fan's rays do not span R^" + std::to_string(fan.dim()) +
                       "; the graded presentation is only defined for spanning ray sets");
  RingPresentation pres;
  pres.num_vars = fan.num_rays();
  pres.linear_forms = IntMatrix(fan.dim(), fan.num_rays());
  for (std::size_t rho = 0; rho < fan.num_rays(); ++rho)
    for (int i = 0; i < fan.dim(); ++i) pres.linear_forms(i, rho) = fan.rays()[rho].n[i];
  pres.nonface_generators = minimal_nonfaces(fan);
  return pres;
}

GradedPiece graded_piece(const RingPresentation& pres, const StackyFan& fan, int k) {
  check_degree(k);
  const std::size_t d = pres.linear_forms.rows();

  GradedPiece piece;
  piece.degree = k;
  piece.basis = face_supported_monomials(fan, k);
  for (std::size_t i = 0; i < piece.basis.size(); ++i)
    piece.index.emplace(piece.basis[i].exponents, i);

  std::vector<Monomial> multipliers;
  if (k >= 1) multipliers = face_supported_monomials(fan, k - 1);

  piece.relation_matrix = IntMatrix(piece.basis.size(), multipliers.size() * d);
  for (std::size_t mi = 0; mi < multipliers.size(); ++mi) {
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t col = mi * d + i;
      for (std::size_t rho = 0; rho < pres.num_vars; ++rho) {
        const Int& coef = pres.linear_forms(i, rho);
        if (coef == 0) continue;
        Monomial product = multipliers[mi];
        product.exponents[rho] += 1;
        if (auto row = piece.index_of(product)) piece.relation_matrix(*row, col) = coef;
      }
    }
  }

  piece.invariants = cokernel_invariants(piece.relation_matrix, piece.basis.size());
  piece.smith = smith_normal_form(piece.relation_matrix);
  return piece;
}

AbelianInvariants graded_piece_oracle(const RingPresentation& pres, const StackyFan& fan, int k) {
  check_degree(k);
  const std::size_t n = pres.num_vars;
  const std::size_t d = pres.linear_forms.rows();

  const std::vector<Monomial> ambient = all_monomials(n, k);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i].exponents, i);

  std::vector<std::vector<std::pair<std::size_t, Int>>> columns;
  if (k >= 1) {
    for (const Monomial& m : all_monomials(n, k - 1)) {
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<std::pair<std::size_t, Int>> col;
        for (std::size_t rho = 0; rho < n; ++rho) {
          const Int& coef = pres.linear_forms(i, rho);
          if (coef == 0) continue;
          Monomial product = m;
          product.exponents[rho] += 1;
          col.emplace_back(index.at(product.exponents), coef);
        }
        columns.push_back(std::move(col));
      }
    }
  }
  for (const std::vector<int>& nonface : pres.nonface_generators) {
    const int s = static_cast<int>(nonface.size());
    if (s > k) continue;
    for (const Monomial& m : all_monomials(n, k - s)) {
      Monomial product = m;
      for (int rho : nonface) product.exponents[rho] += 1;
      columns.push_back({{index.at(product.exponents), Int(1)}});
    }
  }

  IntMatrix relations(ambient.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [row, coef] : columns[c]) relations(row, c) += coef;
  return cokernel_invariants(relations, ambient.size());
}

ChowClass class_of_monomial(const GradedPiece& piece, const Monomial& m) {
  if (m.degree() != piece.degree)
    throw FanError("degree-mismatch", "monomial degree does not match the graded piece");
  ChowClass c;
  c.degree = piece.degree;
  c.coords.assign(piece.basis.size(), Int(0));
  if (auto idx = piece.index_of(m)) c.coords[*idx] = 1;
  return c;
}

std::vector<Int> normal_form(const ChowClass& c, const GradedPiece& piece) {
  if (c.degree != piece.degree)
    throw FanError("degree-mismatch", "class degree does not match the graded piece");
  if (c.coords.size() != piece.basis.size())
    throw std::invalid_argument("coordinate length does not match basis size");
  const std::size_t m = piece.basis.size();
  std::vector<Int> y(m, Int(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (piece.smith.u(i, j) != 0 && c.coords[j] != 0) y[i] += piece.smith.u(i, j) * c.coords[j];
  for (std::size_t i = 0; i < m; ++i) {
    const Int di = i < piece.smith.d.size() ? piece.smith.d[i] : Int(0);
    if (di == 1)
      y[i] = 0;
    else if (di > 1)
      y[i] = y[i] - floor_div(y[i], di) * di;
  }
  return y;
}

GradedRing::GradedRing(StackyFan fan) : fan_(std::move(fan)), pres_(presentation(fan_)) {}

std::shared_ptr<const GradedPiece> GradedRing::piece(int k) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
  }
  auto computed = std::make_shared<const GradedPiece>(graded_piece(pres_, fan_, k));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.emplace(k, std::move(computed));
  return it->second;
}

ChowClass GradedRing::multiply(const ChowClass& a, const ChowClass& b) const {
  auto pa = piece(a.degree), pb = piece(b.degree);
  if (a.coords.size() != pa->basis.size() || b.coords.size() != pb->basis.size())
    throw std::invalid_argument("coordinate length does not match basis size");
  auto target = piece(a.degree + b.degree);
  ChowClass out;
  out.degree = a.degree + b.degree;
  out.coords.assign(target->basis.size(), Int(0));
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords.size(); ++j) {
      if (b.coords[j] == 0) continue;
      Monomial product = pa->basis[i];
      for (std::size_t v = 0; v < product.exponents.size(); ++v)
        product.exponents[v] += pb->basis[j].exponents[v];
      // products with non-face support lie in the monomial ideal
      if (auto idx = target->index_of(product)) out.coords[*idx] += a.coords[i] * b.coords[j];
    }
  }
  return out;
}

ChowClass GradedRing::cycle_class(const Cone& sigma) const {
  if (!fan_.contains(sigma.ray_indices))
    throw FanError("not-a-cone", "cycle class of a set that is not a cone of the fan");
  Monomial m{std::vector<int>(fan_.num_rays(), 0)};
  for (int rho : sigma.ray_indices) m.exponents[rho] = 1;
  return class_of_monomial(*piece(static_cast<int>(sigma.size())), m);
}

std::vector<Int> GradedRing::normal_form(const ChowClass& c) const {
  return stacky::normal_form(c, *piece(c.degree));
}

std::vector<IntersectionEntry> coarse_intersection_table(const StackyFan& fan) {
  if (!fan.canonical_net())
    throw FanError("non-canonical-net",
                   "coarse intersection coefficients are only defined for level-1 nets");
  if (!fan.rays_span())
    throw FanError("rays-do-not-span", "coarse intersection table requires spanning rays");
  std::vector<IntersectionEntry> out;
  for (const SpanningTriple& triple : spanning_pairs(fan)) {
    if (triple.sigma.empty() || triple.tau.empty()) continue;
    const Int ms = multiplicity(fan, triple.sigma).mult;
    const Int mt = multiplicity(fan, triple.tau).mult;
    const Int mg = multiplicity(fan, triple.gamma).mult;
    out.push_back(IntersectionEntry{triple.sigma, triple.tau, triple.gamma,
                                    Rational(ms * mt) / Rational(mg)});
  }
  return out;
}

}  // namespace stacky
