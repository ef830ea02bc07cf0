#pragma once

// Algebras given by structure constants [b_i, b_j] = sum_k c_ij^k b_k.
//
// Everything here follows the right Leibniz convention
//   [x, [y, z]] = [[x, y], z] - [[x, z], y]
// and module actions are right actions.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/error.hpp"
#include "leibniz/exact.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

/// Sparse entry of a coordinate vector.
struct Term {
  std::size_t index;
  Gaussian coeff;
};

class Algebra {
 public:
  Algebra() = default;

  /// `tensor[(i * dim + j) * dim + k]` is the coefficient of b_k in [b_i, b_j].
  Algebra(std::vector<std::string> labels, std::vector<Gaussian> tensor)
      : labels_(std::move(labels)), tensor_(std::move(tensor)) {
    const std::size_t d = labels_.size();
    if (tensor_.size() != d * d * d) throw ShapeMismatch("structure tensor size does not match dimension");
    std::set<std::string> seen;
    for (const auto& l : labels_)
      if (!seen.insert(l).second) throw ShapeMismatch("duplicate basis label '" + l + "'");
    sparse_.resize(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          const Gaussian& c = tensor_[(i * d + j) * d + k];
          if (!c.is_zero()) sparse_[i * d + j].push_back({k, c});
        }
  }

  static Algebra abelian(std::vector<std::string> labels) {
    const std::size_t d = labels.size();
    return {std::move(labels), std::vector<Gaussian>(d * d * d)};
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }
  std::size_t require_index(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw DimensionMismatch("unknown basis label '" + label + "'");
    return *i;
  }

  const Gaussian& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * dim() + j) * dim() + k];
  }
  const std::vector<Gaussian>& tensor() const { return tensor_; }

  /// Nonzero coefficients of [b_i, b_j].
  const std::vector<Term>& bracket_terms(std::size_t i, std::size_t j) const { return sparse_[i * dim() + j]; }

  Vec bracket_basis(std::size_t i, std::size_t j) const {
    Vec v(dim());
    for (const auto& t : bracket_terms(i, j)) v[t.index] = t.coeff;
    return v;
  }

  bool same_table(const Algebra& o) const { return tensor_ == o.tensor_; }
  friend bool operator==(const Algebra& a, const Algebra& b) { return a.labels_ == b.labels_ && a.tensor_ == b.tensor_; }

 private:
  std::vector<std::string> labels_;
  std::vector<Gaussian> tensor_;
  std::vector<std::vector<Term>> sparse_;
};

/// Mutable table used to assemble an Algebra.
class TableBuilder {
 public:
  explicit TableBuilder(std::vector<std::string> labels)
      : labels_(std::move(labels)), tensor_(labels_.size() * labels_.size() * labels_.size()) {}

  std::size_t dim() const { return labels_.size(); }

  std::size_t index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw DimensionMismatch("unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  /// [b_i, b_j] += c b_k
  TableBuilder& add(std::size_t i, std::size_t j, std::size_t k, const Gaussian& c) {
    const std::size_t d = dim();
    if (i >= d || j >= d || k >= d) throw DimensionMismatch("basis index out of range");
    tensor_[(i * d + j) * d + k] += c;
    return *this;
  }
  TableBuilder& add(const std::string& i, const std::string& j, const std::string& k, const Gaussian& c) {
    return add(index(i), index(j), index(k), c);
  }

  /// [b_i, b_j] = -[b_j, b_i] += c b_k
  TableBuilder& antisym(std::size_t i, std::size_t j, std::size_t k, const Gaussian& c) {
    add(i, j, k, c);
    return add(j, i, k, -c);
  }
  TableBuilder& antisym(const std::string& i, const std::string& j, const std::string& k, const Gaussian& c) {
    return antisym(index(i), index(j), index(k), c);
  }

  Algebra build() const { return {labels_, tensor_}; }

 private:
  std::vector<std::string> labels_;
  std::vector<Gaussian> tensor_;
};

/// Bilinear bracket of two coordinate vectors.
inline Vec product(const Algebra& L, const Vec& x, const Vec& y) {
  const std::size_t d = L.dim();
  if (x.size() != d || y.size() != d) throw DimensionMismatch("coordinate vector length differs from dimension");
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = L.bracket_terms(i, j);
      if (terms.empty()) continue;
      Gaussian xy = x[i] * y[j];
      for (const auto& t : terms) out[t.index].add_product(xy, t.coeff);
    }
  }
  return out;
}

struct LeibnizViolation {
  std::size_t x, y, z;  // basis indices of the failing triple
  Vec defect;           // [x,[y,z]] - [[x,y],z] + [[x,z],y]
};

struct LeibnizReport {
  std::vector<LeibnizViolation> violations;
  std::size_t triples_checked = 0;
  bool passed() const { return violations.empty(); }
};

/// Checks the Leibniz identity on every basis triple and reports all failures.
inline LeibnizReport check_leibniz(const Algebra& L) {
  const std::size_t d = L.dim();
  LeibnizReport report;
  Vec acc(d);
  std::vector<std::size_t> touched;
  auto accumulate = [&](const Gaussian& scale, const std::vector<Term>& terms) {
    for (const auto& t : terms) {
      if (acc[t.index].is_zero()) touched.push_back(t.index);
      acc[t.index].add_product(scale, t.coeff);
    }
  };
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const auto& xy = L.bracket_terms(x, y);
      for (std::size_t z = 0; z < d; ++z) {
        ++report.triples_checked;
        const auto& yz = L.bracket_terms(y, z);
        const auto& xz = L.bracket_terms(x, z);
        if (xy.empty() && yz.empty() && xz.empty()) continue;
        touched.clear();
        for (const auto& t : yz) accumulate(t.coeff, L.bracket_terms(x, t.index));
        for (const auto& t : xy) accumulate(-t.coeff, L.bracket_terms(t.index, z));
        for (const auto& t : xz) accumulate(t.coeff, L.bracket_terms(t.index, y));
        bool bad = false;
        for (auto k : touched)
          if (!acc[k].is_zero()) bad = true;
        if (bad) report.violations.push_back({x, y, z, acc});
        for (auto k : touched) acc[k] = Gaussian{};
      }
    }
  return report;
}

inline bool is_antisymmetric(const Algebra& L) {
  const std::size_t d = L.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!(L.constant(i, j, k) == -L.constant(j, i, k))) return false;
  return true;
}

inline bool is_abelian(const Algebra& L) {
  for (const auto& c : L.tensor())
    if (!c.is_zero()) return false;
  return true;
}

/// Antisymmetry plus the Leibniz identity, which together give Jacobi.
inline bool check_lie(const Algebra& L) { return is_antisymmetric(L) && check_leibniz(L).passed(); }

inline void check_ambient(const Algebra& L, const Subspace& s) {
  if (s.ambient_dim() != L.dim()) throw DimensionMismatch("subspace ambient dimension differs from algebra dimension");
}

/// Span of [a, b] over the basis vectors of A and B.
inline Subspace bracket_subspaces(const Algebra& L, const Subspace& A, const Subspace& B) {
  check_ambient(L, A);
  check_ambient(L, B);
  std::vector<Vec> out;
  const auto av = A.vectors(), bv = B.vectors();
  for (const auto& a : av)
    for (const auto& b : bv) {
      Vec p = product(L, a, b);
      if (!is_zero(p)) out.push_back(std::move(p));
    }
  return Subspace::span(L.dim(), std::move(out));
}

inline bool is_two_sided_ideal(const Algebra& L, const Subspace& J) {
  const auto full = Subspace::full(L.dim());
  return J.contains(bracket_subspaces(L, J, full)) && J.contains(bracket_subspaces(L, full, J));
}

struct SquaresClosure {
  Subspace initial;  // span of [b_i,b_i] and [b_i,b_j] + [b_j,b_i]
  Subspace ideal;    // fixpoint under left and right bracketing
  int passes = 0;    // closure passes run, the last of which added nothing
};

inline SquaresClosure squares_ideal_closure(const Algebra& L) {
  const std::size_t d = L.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vec v = L.bracket_basis(i, j);
      if (i != j) v = v + L.bracket_basis(j, i);
      if (!is_zero(v)) gens.push_back(std::move(v));
    }
  SquaresClosure out;
  out.initial = Subspace::span(d, std::move(gens));
  out.ideal = out.initial;
  const auto full = Subspace::full(d);
  for (;;) {
    ++out.passes;
    Subspace next = out.ideal.sum(bracket_subspaces(L, out.ideal, full)).sum(bracket_subspaces(L, full, out.ideal));
    if (next == out.ideal) break;
    out.ideal = std::move(next);
  }
  return out;
}

/// The ideal generated by all squares [x, x].
inline Subspace squares_ideal(const Algebra& L) { return squares_ideal_closure(L).ideal; }

struct Quotient {
  Algebra algebra;
  Matrix projection;  // quotient_dim x dim, old coordinates -> quotient coordinates
};

/// L / J on the coordinates that are not pivots of J's RREF basis.
inline Quotient quotient(const Algebra& L, const Subspace& J) {
  check_ambient(L, J);
  if (!is_two_sided_ideal(L, J)) throw NotAnIdeal("subspace is not a two-sided ideal");
  const std::size_t d = L.dim();
  std::vector<bool> is_pivot(d, false);
  for (auto p : J.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) complement.push_back(c);
  const std::size_t q = complement.size();
  std::vector<std::size_t> position(d, q);
  for (std::size_t t = 0; t < q; ++t) position[complement[t]] = t;

  // b_p for a pivot p equals -(rest of its RREF row) modulo J.
  Matrix P(q, d);
  for (std::size_t t = 0; t < q; ++t) P(t, complement[t]) = 1;
  for (std::size_t r = 0; r < J.dim(); ++r) {
    const std::size_t p = J.pivots()[r];
    for (std::size_t t = 0; t < q; ++t) P(t, p) = -J.basis()(r, complement[t]);
  }

  std::vector<std::string> labels;
  for (auto c : complement) labels.push_back(L.label(c));
  std::vector<Gaussian> tensor(q * q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      Vec img = P.apply(L.bracket_basis(complement[a], complement[b]));
      for (std::size_t k = 0; k < q; ++k) tensor[(a * q + b) * q + k] = img[k];
    }
  return {Algebra(std::move(labels), std::move(tensor)), std::move(P)};
}

/// Right action of an algebra on a module: column k of matrices[a] holds the
/// coordinates of [m_k, a].  The homomorphism law reads
/// R_[a,b] = R_b R_a - R_a R_b.
struct ModuleAction {
  Algebra actor;
  std::size_t module_dim = 0;
  std::vector<Matrix> matrices;
};

/// `action` lets parts[actor_part] act on parts[module_part] from the right.
struct CrossAction {
  std::size_t module_part;
  std::size_t actor_part;
  ModuleAction action;
};

/// Block direct/semidirect sum of the parts, in order.
inline Algebra assemble(const std::vector<Algebra>& parts, const std::vector<CrossAction>& cross = {}) {
  std::vector<std::size_t> offset;
  std::vector<std::string> labels;
  for (const auto& p : parts) {
    offset.push_back(labels.size());
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
  }
  TableBuilder tb(labels);
  for (std::size_t n = 0; n < parts.size(); ++n) {
    const auto& p = parts[n];
    const std::size_t o = offset[n];
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j)
        for (const auto& t : p.bracket_terms(i, j)) tb.add(o + i, o + j, o + t.index, t.coeff);
  }
  for (const auto& c : cross) {
    if (c.module_part >= parts.size() || c.actor_part >= parts.size() || c.module_part == c.actor_part)
      throw ShapeMismatch("cross action references an invalid part");
    const auto& mod = parts[c.module_part];
    const auto& act = parts[c.actor_part];
    if (!is_abelian(mod)) throw ShapeMismatch("module part must have zero internal bracket");
    if (c.action.module_dim != mod.dim() || c.action.matrices.size() != act.dim() || !c.action.actor.same_table(act))
      throw ShapeMismatch("cross action does not match the parts it joins");
    for (std::size_t a = 0; a < act.dim(); ++a) {
      const Matrix& R = c.action.matrices[a];
      if (R.rows() != mod.dim() || R.cols() != mod.dim()) throw ShapeMismatch("action matrix has wrong shape");
      for (std::size_t k = 0; k < mod.dim(); ++k)
        for (std::size_t r = 0; r < mod.dim(); ++r)
          if (!R(r, k).is_zero()) tb.add(offset[c.module_part] + k, offset[c.actor_part] + a, offset[c.module_part] + r, R(r, k));
    }
  }
  return tb.build();
}

/// Invertible change of basis; row j of the matrix is new basis vector j in
/// old coordinates.
class BasisChange {
 public:
  explicit BasisChange(Matrix m) : matrix_(std::move(m)) {
    auto inv = leibniz::inverse(matrix_);
    if (!inv) throw SingularTransform("basis change matrix is singular");
    inverse_ = std::move(*inv);
  }
  static BasisChange identity(std::size_t n) { return BasisChange(Matrix::identity(n)); }

  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse() const { return inverse_; }

  /// Apply `this` first, then `next` (expressed in the intermediate basis).
  BasisChange then(const BasisChange& next) const { return BasisChange(next.matrix_ * matrix_); }

 private:
  Matrix matrix_;
  Matrix inverse_;
};

/// Structure constants of L in the basis described by T; labels are kept.
inline Algebra change_basis(const Algebra& L, const BasisChange& T) {
  const std::size_t d = L.dim();
  if (T.matrix().rows() != d) throw DimensionMismatch("basis change size differs from dimension");
  const Matrix& M = T.matrix();
  const Matrix& Minv = T.inverse();
  std::vector<Vec> newbasis = M.row_vectors();
  std::vector<Gaussian> tensor(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec old = product(L, newbasis[i], newbasis[j]);
      // old coordinates -> new coordinates: row vector times M^{-1}
      for (std::size_t r = 0; r < d; ++r) {
        if (old[r].is_zero()) continue;
        for (std::size_t s = 0; s < d; ++s) tensor[(i * d + j) * d + s].add_product(old[r], Minv(r, s));
      }
    }
  return {L.labels(), std::move(tensor)};
}

/// {x : [y, x] = 0 for every y}.
inline Subspace right_annihilator(const Algebra& L) {
  const std::size_t d = L.dim();
  Matrix stacked(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : L.bracket_terms(i, j)) stacked(i * d + t.index, j) = t.coeff;
  return kernel(stacked);
}

struct SolvabilityInvariants {
  std::vector<Subspace> derived_series;  // L, [L,L], [L',L'], ... until stable
  std::vector<Subspace> lower_central;   // L, [L,L], [L^2,L], ... until stable
  bool is_solvable = false;
  bool is_nilpotent = false;
  Subspace right_annihilator;
};

inline SolvabilityInvariants solvability_invariants(const Algebra& L) {
  SolvabilityInvariants out;
  const auto full = Subspace::full(L.dim());
  out.derived_series.push_back(full);
  for (;;) {
    const auto& cur = out.derived_series.back();
    Subspace next = bracket_subspaces(L, cur, cur);
    if (next == cur) break;
    out.derived_series.push_back(std::move(next));
  }
  out.lower_central.push_back(full);
  for (;;) {
    const auto& cur = out.lower_central.back();
    Subspace next = bracket_subspaces(L, cur, full);
    if (next == cur) break;
    out.lower_central.push_back(std::move(next));
  }
  out.is_solvable = out.derived_series.back().is_zero();
  out.is_nilpotent = out.lower_central.back().is_zero();
  out.right_annihilator = leibniz::right_annihilator(L);
  return out;
}

}  // namespace leibniz
