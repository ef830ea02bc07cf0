#pragma once

// Sparse multivariate polynomials over Q(i).

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/exact.hpp"

namespace leibniz {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order by variable index (variable 0 most significant).
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Gaussian, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}
  MultiPoly(std::vector<std::string> variables, const Gaussian& constant) : variables_(std::move(variables)) {
    if (!constant.is_zero()) terms_.emplace(Exponents(variables_.size(), 0), constant);
  }
  MultiPoly(const Gaussian& constant) : MultiPoly(std::vector<std::string>{}, constant) {}  // NOLINT
  template <std::integral T>
  MultiPoly(T constant) : MultiPoly(Gaussian(constant)) {}  // NOLINT

  /// The polynomial consisting of variable `index` of the ordering `variables`.
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index) {
    MultiPoly p(std::move(variables));
    Exponents e(p.variables_.size(), 0);
    e.at(index) = 1;
    p.terms_.emplace(std::move(e), Gaussian(1));
    return p;
  }
  static MultiPoly variable(const std::string& name) { return variable({name}, 0); }

  const std::vector<std::string>& variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned t = 0;
      for (unsigned x : e) t += x;
      d = std::max(d, t);
    }
    return d;
  }

  /// Re-expresses the polynomial over `variables`, which must contain every
  /// variable this polynomial actually uses.
  MultiPoly embed(const std::vector<std::string>& variables) const {
    std::vector<std::size_t> where(variables_.size(), variables.size());
    for (std::size_t k = 0; k < variables_.size(); ++k) {
      auto it = std::find(variables.begin(), variables.end(), variables_[k]);
      where[k] = static_cast<std::size_t>(it - variables.begin());
    }
    MultiPoly out(variables);
    for (const auto& [e, c] : terms_) {
      Exponents f(variables.size(), 0);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (where[k] == variables.size()) throw DimensionMismatch("variable '" + variables_[k] + "' missing from target ordering");
        f[where[k]] = e[k];
      }
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Union ordering: variables of `a` followed by the new variables of `b`.
  static std::vector<std::string> unify(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) { return combine(p, q, false); }
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return combine(p, q, true); }

  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    auto vars = unify(p.variables_, q.variables_);
    MultiPoly a = p.embed(vars), b = q.embed(vars);
    MultiPoly out(vars);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(vars.size());
        for (std::size_t k = 0; k < vars.size(); ++k) e[k] = ea[k] + eb[k];
        out.accumulate(std::move(e), ca * cb);
      }
    }
    return out;
  }

  friend MultiPoly operator*(const Gaussian& s, const MultiPoly& p) { return p.scaled(s); }
  friend MultiPoly operator*(const MultiPoly& p, const Gaussian& s) { return p.scaled(s); }

  MultiPoly& operator+=(const MultiPoly& q) { return *this = *this + q; }
  MultiPoly& operator-=(const MultiPoly& q) { return *this = *this - q; }
  MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

  MultiPoly scaled(const Gaussian& s) const {
    MultiPoly out(variables_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
  }

  /// Equality as polynomials, independent of the variable orderings.
  friend bool operator==(const MultiPoly& p, const MultiPoly& q) { return (p - q).is_zero(); }

  /// Substitutes values for every variable; unknown names throw.
  Gaussian evaluate(const std::map<std::string, Gaussian>& values) const {
    std::vector<Gaussian> x;
    x.reserve(variables_.size());
    for (const auto& v : variables_) {
      auto it = values.find(v);
      if (it == values.end()) throw DimensionMismatch("no value for variable '" + v + "'");
      x.push_back(it->second);
    }
    Gaussian total;
    for (const auto& [e, c] : terms_) {
      Gaussian t = c;
      for (std::size_t k = 0; k < e.size(); ++k)
        for (unsigned r = 0; r < e[k]; ++r) t *= x[k];
      total += t;
    }
    return total;
  }

  /// Coefficient of the monomial given as {variable: exponent}.
  Gaussian coefficient(const std::map<std::string, unsigned>& monomial) const {
    Exponents e(variables_.size(), 0);
    for (const auto& [name, power] : monomial) {
      auto it = std::find(variables_.begin(), variables_.end(), name);
      if (it == variables_.end()) {
        if (power == 0) continue;
        return {};
      }
      e[static_cast<std::size_t>(it - variables_.begin())] = power;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Gaussian{} : it->second;
  }

  /// Human-readable form, terms in decreasing graded-lex order,
  /// e.g. "-4*alpha^2 - 4*beta*gamma + 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += variables_[k];
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      bool negative = c.is_real() && sgn(c.re()) < 0;
      Gaussian mag = negative ? -c : c;
      std::string coeff = mag.is_real() ? mag.to_string() : "(" + mag.to_string() + ")";
      std::string body;
      if (mono.empty()) body = coeff;
      else if (mag == Gaussian(1)) body = mono;
      else body = coeff + "*" + mono;
      if (first) out += negative ? "-" + body : body;
      else out += negative ? " - " + body : " + " + body;
      first = false;
    }
    return out;
  }

 private:
  static MultiPoly combine(const MultiPoly& p, const MultiPoly& q, bool subtract) {
    auto vars = unify(p.variables_, q.variables_);
    MultiPoly out = p.embed(vars);
    MultiPoly b = q.embed(vars);
    for (auto& [e, c] : b.terms_) out.accumulate(e, subtract ? -c : c);
    return out;
  }

  void accumulate(Exponents e, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::vector<std::string> variables_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul, scale };

inline MultiPoly poly_arith(PolyOp op, const MultiPoly& p, const MultiPoly& q) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
    case PolyOp::scale: {
      if (q.degree() > 0) throw DimensionMismatch("scale expects a constant");
      return p.scaled(q.coefficient({}));
    }
  }
  return {};
}

using PolyMatrix3 = std::array<std::array<MultiPoly, 3>, 3>;

/// Determinant by cofactor expansion along the first row.
inline MultiPoly symbolic_det3(const PolyMatrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace leibniz
