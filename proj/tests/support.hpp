#pragma once

// Seeded generators and slow independent reference implementations used as
// oracles by the unit, property and acceptance tests.

#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "leibniz/leibniz.hpp"

namespace testing_support {

using namespace leibniz;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline long small_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Gaussian random_gaussian(long range = 5) {
  Rational re(small_int(-range, range), small_int(1, 4));
  Rational im(small_int(-range, range), small_int(1, 4));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

inline Gaussian random_nonzero(long range = 5) {
  for (;;) {
    Gaussian g = random_gaussian(range);
    if (!g.is_zero()) return g;
  }
}

/// Entries are zero with probability `sparsity`.
inline Matrix random_matrix(std::size_t r, std::size_t c, double sparsity = 0.4) {
  Matrix m(r, c);
  std::bernoulli_distribution zero(sparsity);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!zero(rng())) m(i, j) = random_gaussian(3);
  return m;
}

inline std::vector<std::string> labels(std::size_t d, const std::string& stem = "b") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

inline Algebra random_algebra(std::size_t d, double sparsity = 0.85) {
  std::vector<Gaussian> t(d * d * d);
  std::bernoulli_distribution zero(sparsity);
  for (auto& c : t)
    if (!zero(rng())) c = Gaussian(small_int(-2, 2));
  return {labels(d), t};
}

inline Matrix random_invertible(std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(n, n, 0.3);
    if (!determinant(m).is_zero()) return m;
  }
}

/// Dense triple loop on the raw tensor, written independently of check_leibniz.
inline std::size_t naive_leibniz_violations(const Algebra& L) {
  const std::size_t d = L.dim();
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return L.tensor()[(i * d + j) * d + k]; };
  std::size_t bad = 0;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        bool ok = true;
        for (std::size_t t = 0; t < d && ok; ++t) {
          Gaussian lhs, rhs;
          for (std::size_t k = 0; k < d; ++k) {
            lhs += c(y, z, k) * c(x, k, t);
            rhs += c(x, y, k) * c(k, z, t) - c(x, z, k) * c(k, y, t);
          }
          ok = lhs == rhs;
        }
        if (!ok) ++bad;
      }
  return bad;
}

/// sl2^s + R written out by hand from the family tables, for comparison with
/// quotients by the squares ideal.
inline Algebra expected_quotient(const CatalogSpec& spec) {
  std::vector<std::string> names;
  std::size_t s = 0, r = 0;
  switch (spec.family) {
    case Family::THM25:
    case Family::SIMPLE_SL2: s = 1; break;
    case Family::COR35:
    case Family::L1:
    case Family::L2: s = spec.s.value_or(1); break;
    case Family::THM42: s = 2; break;
    case Family::SLN_TRIVIAL: break;
  }
  if (spec.family == Family::THM25 || spec.family == Family::COR35) r = 2;
  if (spec.family == Family::L1 || spec.family == Family::L2) r = 3;
  const bool plain = spec.family == Family::THM25 || spec.family == Family::SIMPLE_SL2;

  if (spec.family == Family::SLN_TRIVIAL) {
    // sl_n on (h_k, e_ij) with matrix-commutator constants, then central z's.
    const std::size_t n = *spec.n;
    std::vector<std::pair<std::size_t, std::size_t>> roots;
    for (std::size_t k = 1; k < n; ++k) names.push_back("h_" + std::to_string(k));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (i != j) {
          names.push_back(sln_root_label(i, j, n));
          roots.push_back({i, j});
        }
    for (std::size_t k = 0; k <= spec.m; ++k) names.push_back("z_" + std::to_string(k + 1));
    const std::size_t d = names.size(), g = n * n - 1;
    // Basis as n x n matrices, then commutators re-expanded in the basis.
    auto mat = [&](std::size_t b) {
      std::vector<long> M(n * n, 0);
      if (b < n - 1) {
        M[b * n + b] = 1;
        M[(n - 1) * n + (n - 1)] = -1;
      } else {
        auto [i, j] = roots[b - (n - 1)];
        M[(i - 1) * n + (j - 1)] = 1;
      }
      return M;
    };
    std::vector<Gaussian> t(d * d * d);
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t b = 0; b < g; ++b) {
        auto A = mat(a), B = mat(b);
        std::vector<long> C(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) C[i * n + j] += A[i * n + k] * B[k * n + j] - B[i * n + k] * A[k * n + j];
        // Off-diagonal entries give e_ij coordinates, diagonal gives h_k = E_kk - E_nn.
        for (std::size_t q = 0; q < roots.size(); ++q) {
          auto [i, j] = roots[q];
          t[(a * d + b) * d + (n - 1) + q] = C[(i - 1) * n + (j - 1)];
        }
        for (std::size_t k = 0; k + 1 < n; ++k) t[(a * d + b) * d + k] = C[k * n + k];
      }
    return {names, t};
  }

  for (std::size_t j = 1; j <= s; ++j) {
    const std::string suf = plain ? "" : "_" + std::to_string(j);
    names.push_back("e" + suf);
    names.push_back("h" + suf);
    names.push_back("f" + suf);
  }
  for (std::size_t k = 1; k <= r; ++k) names.push_back("y_" + std::to_string(k));
  const std::size_t d = names.size();
  std::vector<Gaussian> t(d * d * d);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Gaussian& v) {
    t[(i * d + j) * d + k] += v;
    t[(j * d + i) * d + k] -= v;
  };
  for (std::size_t j = 0; j < s; ++j) {
    const std::size_t e = 3 * j, h = e + 1, f = e + 2;
    set(e, h, e, 2);
    set(h, f, f, 2);
    set(e, f, h, 1);
  }
  const std::size_t y1 = 3 * s, y2 = y1 + 1, y3 = y1 + 2;
  if (r >= 2) set(y1, y2, y1, 1);
  if (spec.family == Family::L1) set(y3, y2, y3, *spec.alpha);
  if (spec.family == Family::L2) {
    set(y1, y2, y3, 1);
    set(y3, y2, y3, 1);
  }
  return {names, t};
}

/// Highest weights of a module with diagonal R_h, from weight multiplicities:
/// the number of copies of V_k is mult(k) - mult(k + 2).
inline std::multiset<std::size_t> character_oracle(const ModuleAction& a) {
  std::map<long, std::size_t> mult;
  const Matrix& H = a.matrices[sl2_h];
  for (std::size_t k = 0; k < a.module_dim; ++k) ++mult[H(k, k).re().get_num().get_si()];
  std::multiset<std::size_t> out;
  for (const auto& [w, c] : mult) {
    if (w < 0) continue;
    std::size_t above = mult.count(w + 2) ? mult[w + 2] : 0;
    for (std::size_t n = above; n < c; ++n) out.insert(static_cast<std::size_t>(w));
  }
  return out;
}

/// Every multiset of highest weights with total dimension <= limit.
inline std::vector<std::vector<std::size_t>> weight_multisets(std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t budget, std::size_t max_m) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t m = 0; m <= max_m && m + 1 <= budget; ++m) {
      cur.push_back(m);
      self(self, budget - (m + 1), m);
      cur.pop_back();
    }
  };
  rec(rec, limit, limit - 1);
  return out;
}

}  // namespace testing_support
