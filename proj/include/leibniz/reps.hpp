#pragma once

// sl2 and sl_n, irreducible right sl2-modules, weight spaces and
// decomposition of right sl2-modules into irreducibles.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

/// Basis (e, h, f) with [e,h]=2e, [h,f]=2f, [e,f]=h, antisymmetric.
inline Algebra sl2_canonical(const std::string& suffix = "") {
  const std::string e = "e" + suffix, h = "h" + suffix, f = "f" + suffix;
  TableBuilder tb({e, h, f});
  tb.antisym(e, h, e, 2);
  tb.antisym(h, f, f, 2);
  tb.antisym(e, f, h, 1);
  return tb.build();
}

inline constexpr std::size_t sl2_e = 0;
inline constexpr std::size_t sl2_h = 1;
inline constexpr std::size_t sl2_f = 2;

inline std::string sln_root_label(std::size_t i, std::size_t j, std::size_t n) {
  if (n < 10) return "e_" + std::to_string(i) + std::to_string(j);
  return "e_" + std::to_string(i) + "," + std::to_string(j);
}

/// sl_n on h_1..h_{n-1} followed by e_ij (i != j) in lexicographic order.
/// h_i plays the role of E_ii - E_nn.
inline Algebra sln(std::size_t n) {
  if (n < 2) throw BadDimension("sl_n needs n >= 2");
  std::vector<std::string> labels;
  for (std::size_t k = 1; k < n; ++k) labels.push_back("h_" + std::to_string(k));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j) labels.push_back(sln_root_label(i, j, n));
  TableBuilder tb(labels);
  auto e = [&](std::size_t i, std::size_t j) { return tb.index(sln_root_label(i, j, n)); };
  auto h = [&](std::size_t k) { return tb.index("h_" + std::to_string(k)); };

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        if (i != j && j != k && k != i) tb.antisym(e(i, j), e(j, k), e(i, k), 1);

  // [h_k, e_ij] = (d_k(i) - d_k(j)) e_ij with d_k = diag of E_kk - E_nn
  auto weight = [&](std::size_t k, std::size_t idx) -> long { return (idx == k ? 1 : 0) - (idx == n ? 1 : 0); };
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        if (i == j) continue;
        long w = weight(k, i) - weight(k, j);
        if (w != 0) tb.antisym(h(k), e(i, j), e(i, j), w);
      }

  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      tb.antisym(e(i, j), e(j, i), h(i), 1);
      tb.antisym(e(i, j), e(j, i), h(j), -1);
    }
    tb.antisym(e(i, n), e(n, i), h(i), 1);
  }
  return tb.build();
}

/// V_m over sl2_canonical(): [x_k,h]=(m-2k)x_k, [x_k,f]=x_{k+1},
/// [x_k,e]=-k(m+1-k)x_{k-1}.
inline ModuleAction irreducible_module(std::size_t m) {
  const std::size_t d = m + 1;
  ModuleAction a{sl2_canonical(), d, {Matrix(d, d), Matrix(d, d), Matrix(d, d)}};
  const long ml = static_cast<long>(m);
  for (std::size_t k = 0; k < d; ++k) {
    const long kl = static_cast<long>(k);
    a.matrices[sl2_h](k, k) = ml - 2 * kl;
    if (k + 1 < d) a.matrices[sl2_f](k + 1, k) = 1;
    if (k > 0) a.matrices[sl2_e](k - 1, k) = -kl * (ml + 1 - kl);
  }
  return a;
}

inline ModuleAction zero_module(const Algebra& actor, std::size_t d) {
  return {actor, d, std::vector<Matrix>(actor.dim(), Matrix(d, d))};
}

/// Block-diagonal direct sum of modules over the same acting algebra.
inline ModuleAction direct_sum(const std::vector<ModuleAction>& parts) {
  if (parts.empty()) throw ShapeMismatch("direct sum of no modules");
  std::size_t d = 0;
  for (const auto& p : parts) {
    if (!p.actor.same_table(parts.front().actor)) throw ShapeMismatch("modules over different algebras");
    d += p.module_dim;
  }
  ModuleAction out = zero_module(parts.front().actor, d);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t a = 0; a < p.matrices.size(); ++a)
      for (std::size_t r = 0; r < p.module_dim; ++r)
        for (std::size_t c = 0; c < p.module_dim; ++c) out.matrices[a](off + r, off + c) = p.matrices[a](r, c);
    off += p.module_dim;
  }
  return out;
}

/// R_[a,b] = R_b R_a - R_a R_b on every pair of actor basis elements.
inline bool homomorphism_law_holds(const ModuleAction& a) {
  const auto& G = a.actor;
  for (std::size_t p = 0; p < G.dim(); ++p)
    for (std::size_t q = 0; q < G.dim(); ++q) {
      Matrix lhs(a.module_dim, a.module_dim);
      for (const auto& t : G.bracket_terms(p, q)) lhs = lhs + t.coeff * a.matrices[t.index];
      Matrix rhs = a.matrices[q] * a.matrices[p] - a.matrices[p] * a.matrices[q];
      if (!(lhs == rhs)) return false;
    }
  return true;
}

/// Restriction of the action to an invariant subspace, in its RREF basis.
inline ModuleAction restrict_action(const ModuleAction& a, const Subspace& sub) {
  if (sub.ambient_dim() != a.module_dim) throw DimensionMismatch("subspace is not inside the module");
  const std::size_t d = sub.dim();
  ModuleAction out = zero_module(a.actor, d);
  const auto basis = sub.vectors();
  for (std::size_t g = 0; g < a.matrices.size(); ++g)
    for (std::size_t k = 0; k < d; ++k) {
      auto coords = sub.coordinates_of(a.matrices[g].apply(basis[k]));
      if (!coords) throw NotInvariant("subspace is not invariant under the action");
      for (std::size_t r = 0; r < d; ++r) out.matrices[g](r, k) = (*coords)[r];
    }
  return out;
}

struct WeightSpace {
  long weight;
  Subspace space;
};
using WeightDecomposition = std::vector<WeightSpace>;

namespace detail {

inline Matrix shifted(const Matrix& m, long lambda) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= Gaussian(lambda);
  return out;
}

inline Matrix power(Matrix m, std::size_t k) {
  Matrix out = Matrix::identity(m.rows());
  while (k) {
    if (k & 1) out = out * m;
    m = m * m;
    k >>= 1;
  }
  return out;
}

// Integers in [-bound, bound] inside some Gershgorin disc of m, with each
// radius widened to |Re| + |Im| sums so the test stays rational.
inline std::vector<long> eigenvalue_candidates(const Matrix& m, long bound) {
  std::vector<Rational> radius(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    radius[i] = abs(m(i, i).im());
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (j != i) radius[i] += abs(m(i, j).re()) + abs(m(i, j).im());
  }
  std::vector<long> out;
  for (long lambda = bound; lambda >= -bound; --lambda)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (abs(Rational(lambda) - m(i, i).re()) <= radius[i]) {
        out.push_back(lambda);
        break;
      }
  return out;
}

}  // namespace detail

/// Eigenspaces of R_h for integer eigenvalues in [-d, d], highest first.
inline WeightDecomposition weight_decomposition(const ModuleAction& a, std::size_t h_index) {
  const std::size_t d = a.module_dim;
  if (h_index >= a.matrices.size()) throw DimensionMismatch("actor basis index out of range");
  const Matrix& H = a.matrices[h_index];
  WeightDecomposition out;
  std::size_t total = 0;
  const long bound = static_cast<long>(d);
  for (long lambda : detail::eigenvalue_candidates(H, bound)) {
    if (total == d) break;
    Subspace eig = kernel(detail::shifted(H, lambda));
    if (eig.is_zero()) continue;
    total += eig.dim();
    out.push_back({lambda, std::move(eig)});
  }
  if (total == d) return out;

  std::size_t generalized = 0;
  for (const auto& w : out) generalized += kernel(detail::power(detail::shifted(H, w.weight), d)).dim();
  if (generalized == d) throw NonDiagonalizable("h acts with integer spectrum but is not diagonalizable");
  throw NonIntegerSpectrum("h has eigenvalues outside the integers in [-d, d]");
}

inline bool is_sl2_shaped(const Algebra& G) { return G.dim() == 3 && G.same_table(sl2_canonical()); }

struct Summand {
  std::size_t highest_weight;
  Subspace submodule;
};

/// Splits a right sl2-module into irreducibles by extracting highest-weight
/// vectors (kernel of R_e) weight by weight, from the top down.
inline std::vector<Summand> decompose(const ModuleAction& a) {
  if (!is_sl2_shaped(a.actor)) throw DecompositionFailed("acting algebra is not in canonical sl2 form");
  const std::size_t d = a.module_dim;
  const Matrix& E = a.matrices[sl2_e];
  const Matrix& F = a.matrices[sl2_f];
  const Subspace highest = kernel(E);

  std::vector<Summand> out;
  Subspace generated(d);
  for (const auto& [weight, space] : weight_decomposition(a, sl2_h)) {
    Subspace candidates = highest.intersect(space);
    for (const auto& v : candidates.vectors()) {
      if (generated.contains(v)) continue;
      if (weight < 0) throw DecompositionFailed("highest-weight vector with negative weight");
      std::vector<Vec> chain{v};
      while (chain.size() <= static_cast<std::size_t>(weight) + 1) {
        Vec next = F.apply(chain.back());
        if (is_zero(next)) break;
        chain.push_back(std::move(next));
      }
      Subspace sub = Subspace::span(d, chain);
      if (sub.dim() != static_cast<std::size_t>(weight) + 1)
        throw DecompositionFailed("f-string of a highest-weight vector has the wrong length");
      Subspace grown = generated.sum(sub);
      if (grown.dim() != generated.dim() + sub.dim()) throw DecompositionFailed("generated submodules are not independent");
      generated = std::move(grown);
      out.push_back({static_cast<std::size_t>(weight), std::move(sub)});
    }
  }
  if (generated.dim() != d) throw DecompositionFailed("highest-weight submodules do not exhaust the module");
  return out;
}

inline bool is_irreducible(const ModuleAction& a) {
  if (a.module_dim == 0) return false;
  return decompose(a).size() == 1;
}

/// Right multiplication by the actor vectors restricted to `module`.
/// The acting algebra is the bracket induced on span(actor), in the order given.
inline ModuleAction action_from_algebra(const Algebra& L, const Subspace& module, const std::vector<Vec>& actor) {
  check_ambient(L, module);
  const Subspace actor_span = Subspace::span(L.dim(), actor);
  if (actor_span.dim() != actor.size()) throw NotInvariant("actor vectors are linearly dependent");

  // Induced bracket on the actor, expressed in the given actor vectors.
  const std::size_t g = actor.size();
  Matrix coords_basis(L.dim(), g);
  for (std::size_t c = 0; c < g; ++c)
    for (std::size_t r = 0; r < L.dim(); ++r) coords_basis(r, c) = actor[c][r];
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < g; ++c) {
    std::string name;
    for (std::size_t r = 0; r < L.dim(); ++r)
      if (!actor[c][r].is_zero()) name += (name.empty() ? "" : "+") + L.label(r);
    labels.push_back(name.empty() ? "a" + std::to_string(c) : name);
  }
  std::vector<Gaussian> tensor(g * g * g);
  for (std::size_t p = 0; p < g; ++p)
    for (std::size_t q = 0; q < g; ++q) {
      auto sol = solve_linear(coords_basis, product(L, actor[p], actor[q]));
      if (!sol) throw NotInvariant("actor span is not closed under the bracket");
      for (std::size_t k = 0; k < g; ++k) tensor[(p * g + q) * g + k] = (*sol)[k];
    }
  // Labels built from supports may collide for odd actor choices; fall back.
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    for (std::size_t c = 0; c < g; ++c) labels[c] = "a" + std::to_string(c);

  ModuleAction out{Algebra(std::move(labels), std::move(tensor)), module.dim(), {}};
  const auto mbasis = module.vectors();
  for (std::size_t p = 0; p < g; ++p) {
    Matrix R(module.dim(), module.dim());
    for (std::size_t k = 0; k < mbasis.size(); ++k) {
      auto coords = module.coordinates_of(product(L, mbasis[k], actor[p]));
      if (!coords) throw NotInvariant("bracket with the actor leaves the module subspace");
      for (std::size_t r = 0; r < module.dim(); ++r) R(r, k) = (*coords)[r];
    }
    out.matrices.push_back(std::move(R));
  }
  return out;
}

inline ModuleAction action_from_algebra(const Algebra& L, const Subspace& module, const Subspace& actor) {
  check_ambient(L, actor);
  return action_from_algebra(L, module, actor.vectors());
}

}  // namespace leibniz
