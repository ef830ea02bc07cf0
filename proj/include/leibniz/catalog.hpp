#pragma once

// Constructors for the classified families of Leibniz algebras whose
// associated Lie algebra is built from copies of sl2 (or sl_n) and a small
// solvable radical.
//
// Basis order is always: sl2 blocks (e_j, h_j, f_j), then y's, then the
// x-blocks spanning the squares ideal.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/error.hpp"
#include "leibniz/reps.hpp"

namespace leibniz {

enum class Family { THM25, COR35, L1, L2, THM42, SIMPLE_SL2, SLN_TRIVIAL };

inline const std::vector<Family>& all_families() {
  static const std::vector<Family> families{Family::THM25, Family::COR35, Family::L1, Family::L2,
                                            Family::THM42, Family::SIMPLE_SL2, Family::SLN_TRIVIAL};
  return families;
}

inline std::string family_name(Family f) {
  switch (f) {
    case Family::THM25: return "THM25";
    case Family::COR35: return "COR35";
    case Family::L1: return "L1";
    case Family::L2: return "L2";
    case Family::THM42: return "THM42";
    case Family::SIMPLE_SL2: return "SIMPLE_SL2";
    case Family::SLN_TRIVIAL: return "SLN_TRIVIAL";
  }
  return {};
}

inline Family family_from_name(const std::string& name) {
  for (auto f : all_families())
    if (family_name(f) == name) return f;
  throw BadSpec("unknown family '" + name + "'");
}

struct CatalogSpec {
  Family family = Family::THM25;
  std::optional<std::size_t> s;  // copies of sl2 (COR35, L1, L2)
  std::size_t m = 0;             // each x-block has dimension m + 1
  std::optional<Gaussian> alpha;
  std::optional<Gaussian> a;
  std::optional<std::size_t> n;  // rank parameter of sl_n
};

struct ParamSchema {
  std::string key;
  std::string kind;  // "count" or "scalar"
  bool required;
  std::string meaning;
};

struct FamilyDescriptor {
  Family family;
  std::string name;
  std::string citation;
  std::string summary;
  std::vector<ParamSchema> params;
};

inline std::vector<FamilyDescriptor> list_families() {
  const ParamSchema s{"s", "count", false, "number of sl2 copies (default 1)"};
  const ParamSchema m{"m", "count", true, "x-block dimension is m+1"};
  const ParamSchema a{"a", "scalar", true, "eigenvalue of y_2 on the x's"};
  const ParamSchema alpha{"alpha", "scalar", true, "eigenvalue of y_2 on y_3"};
  return {
      {Family::THM25, "THM25", "Theorem 2.5", "sl2 + 2-dim radical acting on V_m", {m, a}},
      {Family::COR35, "COR35", "Corollary 3.5", "s copies of sl2 + 2-dim radical, V_m over the first copy", {s, m, a}},
      {Family::L1, "L1", "Theorem 2.6 / Corollary 3.6, L_1(alpha,a)", "s copies of sl2 + 3-dim radical, diagonal y_2", {s, m, alpha, a}},
      {Family::L2, "L2", "Theorem 2.6 / Corollary 3.6, L_2(a)", "s copies of sl2 + 3-dim radical, Jordan block for y_2", {s, m, a}},
      {Family::THM42, "THM42", "Theorem 4.2", "sl2 + sl2 acting on V_m (x) C^2", {m}},
      {Family::SIMPLE_SL2, "SIMPLE_SL2", "simple Leibniz algebra sl2 + V_m", "semidirect sum of sl2 and V_m", {m}},
      {Family::SLN_TRIVIAL, "SLN_TRIVIAL", "Proposition 5.1 / Theorem 5.2", "sl_n plus a trivial ideal of dim m+1 (m in {0,1})",
       {{"n", "count", true, "sl_n rank parameter, n >= 2"}, {"m", "count", true, "ideal dimension is m+1, m in {0,1}"}}},
  };
}

namespace detail {

inline bool family_has_radical(Family f) {
  return f == Family::THM25 || f == Family::COR35 || f == Family::L1 || f == Family::L2;
}

inline std::size_t radical_dim(Family f) {
  switch (f) {
    case Family::THM25:
    case Family::COR35: return 2;
    case Family::L1:
    case Family::L2: return 3;
    default: return 0;
  }
}

inline std::size_t sl2_copies(const CatalogSpec& spec) {
  switch (spec.family) {
    case Family::COR35:
    case Family::L1:
    case Family::L2: return spec.s.value_or(1);
    case Family::THM42: return 2;
    case Family::SLN_TRIVIAL: return 0;
    default: return 1;
  }
}

inline std::string sl2_suffix(const CatalogSpec& spec, std::size_t j) {
  if (spec.family == Family::THM25 || spec.family == Family::SIMPLE_SL2) return "";
  return "_" + std::to_string(j);
}

inline std::string x_label(const CatalogSpec& spec, std::size_t k, std::size_t block) {
  if (spec.family == Family::THM42) return "x_" + std::to_string(k) + "^" + std::to_string(block);
  return "x_" + std::to_string(k);
}

// Adds [x_k, e/h/f] for V_m on the x-block starting at `x0` over the sl2 at `sl`.
inline void add_irreducible_action(TableBuilder& tb, std::size_t x0, std::size_t sl, std::size_t m) {
  const ModuleAction V = irreducible_module(m);
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t k = 0; k <= m; ++k)
      for (std::size_t r = 0; r <= m; ++r)
        if (!V.matrices[g](r, k).is_zero()) tb.add(x0 + k, sl + g, x0 + r, V.matrices[g](r, k));
}

inline void add_sl2_block(TableBuilder& tb, std::size_t at) {
  const Algebra s = sl2_canonical();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (const auto& t : s.bracket_terms(i, j)) tb.add(at + i, at + j, at + t.index, t.coeff);
}

}  // namespace detail

/// Throws BadSpec unless each parameter is present exactly when required.
inline void validate(const CatalogSpec& spec) {
  const auto name = family_name(spec.family);
  auto need = [&](bool present, const char* key) {
    if (!present) throw BadSpec(name + " requires parameter '" + key + "'");
  };
  auto forbid = [&](bool present, const char* key) {
    if (present) throw BadSpec(name + " does not take parameter '" + key + "'");
  };
  const bool takes_s = spec.family == Family::COR35 || spec.family == Family::L1 || spec.family == Family::L2;
  if (!takes_s) forbid(spec.s.has_value(), "s");
  if (spec.s && *spec.s == 0) throw BadSpec("s must be at least 1");
  switch (spec.family) {
    case Family::THM25:
    case Family::COR35:
    case Family::L2:
      need(spec.a.has_value(), "a");
      forbid(spec.alpha.has_value(), "alpha");
      forbid(spec.n.has_value(), "n");
      break;
    case Family::L1:
      need(spec.a.has_value(), "a");
      need(spec.alpha.has_value(), "alpha");
      forbid(spec.n.has_value(), "n");
      break;
    case Family::THM42:
    case Family::SIMPLE_SL2:
      forbid(spec.a.has_value(), "a");
      forbid(spec.alpha.has_value(), "alpha");
      forbid(spec.n.has_value(), "n");
      break;
    case Family::SLN_TRIVIAL:
      forbid(spec.a.has_value(), "a");
      forbid(spec.alpha.has_value(), "alpha");
      need(spec.n.has_value(), "n");
      if (*spec.n < 2) throw BadSpec("SLN_TRIVIAL needs n >= 2");
      if (spec.m > 1) throw BadSpec("SLN_TRIVIAL needs m in {0,1} (ideal of dimension 1 or 2)");
      break;
  }
}

/// Basis labels in the canonical order of the family.
inline std::vector<std::string> catalog_labels(const CatalogSpec& spec) {
  std::vector<std::string> labels;
  if (spec.family == Family::SLN_TRIVIAL) {
    labels = sln(*spec.n).labels();
    for (std::size_t k = 0; k <= spec.m; ++k) labels.push_back("z_" + std::to_string(k + 1));
    return labels;
  }
  for (std::size_t j = 1; j <= detail::sl2_copies(spec); ++j) {
    auto suffix = detail::sl2_suffix(spec, j);
    for (const char* g : {"e", "h", "f"}) labels.push_back(g + suffix);
  }
  for (std::size_t t = 1; t <= detail::radical_dim(spec.family); ++t) labels.push_back("y_" + std::to_string(t));
  const std::size_t blocks = spec.family == Family::THM42 ? 2 : 1;
  for (std::size_t b = 1; b <= blocks; ++b)
    for (std::size_t k = 0; k <= spec.m; ++k) labels.push_back(detail::x_label(spec, k, b));
  return labels;
}

/// The multiplication table of the family, with no membership checks beyond
/// parameter validation.
inline Algebra build_table(const CatalogSpec& spec) {
  validate(spec);
  const auto labels = catalog_labels(spec);
  TableBuilder tb(labels);
  if (spec.family == Family::SLN_TRIVIAL) {
    const Algebra g = sln(*spec.n);
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        for (const auto& t : g.bracket_terms(i, j)) tb.add(i, j, t.index, t.coeff);
    return tb.build();
  }

  const std::size_t s = detail::sl2_copies(spec);
  for (std::size_t j = 0; j < s; ++j) detail::add_sl2_block(tb, 3 * j);
  const std::size_t y0 = 3 * s;
  const std::size_t x0 = y0 + detail::radical_dim(spec.family);
  const std::size_t m = spec.m;

  switch (spec.family) {
    case Family::THM25:
    case Family::COR35:
      tb.antisym(y0, y0 + 1, y0, 1);
      break;
    case Family::L1:
      tb.antisym(y0, y0 + 1, y0, 1);
      tb.antisym(y0 + 2, y0 + 1, y0 + 2, *spec.alpha);
      break;
    case Family::L2:
      tb.antisym(y0, y0 + 1, y0, 1);
      tb.antisym(y0, y0 + 1, y0 + 2, 1);
      tb.antisym(y0 + 2, y0 + 1, y0 + 2, 1);
      break;
    default: break;
  }
  if (detail::family_has_radical(spec.family))
    for (std::size_t k = 0; k <= m; ++k) tb.add(x0 + k, y0 + 1, x0 + k, *spec.a);

  detail::add_irreducible_action(tb, x0, 0, m);
  if (spec.family == Family::THM42) {
    const std::size_t x1 = x0, x2 = x0 + m + 1;
    const std::size_t e2 = 3, h2 = 4, f2 = 5;
    detail::add_irreducible_action(tb, x2, 0, m);
    for (std::size_t k = 0; k <= m; ++k) {
      tb.add(x1 + k, e2, x2 + k, 1);
      tb.add(x2 + k, h2, x2 + k, 1);
      tb.add(x1 + k, h2, x1 + k, -1);
      tb.add(x2 + k, f2, x1 + k, -1);
    }
  }
  return tb.build();
}

/// True when the x-span is not generated by squares, i.e. the table is a Lie
/// algebra and so lies outside the family.
inline bool is_degenerate(const CatalogSpec& spec) {
  if (spec.m != 0) return false;
  if (spec.family == Family::SIMPLE_SL2) return true;
  return detail::family_has_radical(spec.family) && spec.a && spec.a->is_zero();
}

/// A member of the family; rejects parameter choices for which the x-span
/// would not be the squares ideal.
inline Algebra build(const CatalogSpec& spec) {
  validate(spec);
  if (is_degenerate(spec))
    throw BadSpec(family_name(spec.family) +
                  " with m=0 and a trivially acting x_0 is a Lie algebra; x_0 is not a square");
  return build_table(spec);
}

inline std::map<std::string, std::string> catalog_metadata(const CatalogSpec& spec) {
  std::map<std::string, std::string> md;
  md["family"] = family_name(spec.family);
  for (const auto& d : list_families())
    if (d.family == spec.family) md["citation"] = d.citation;
  md["m"] = std::to_string(spec.m);
  if (spec.s) md["s"] = std::to_string(*spec.s);
  if (spec.n) md["n"] = std::to_string(*spec.n);
  if (spec.a) md["a"] = spec.a->to_string();
  if (spec.alpha) md["alpha"] = spec.alpha->to_string();
  if (detail::family_has_radical(spec.family) && spec.m == 2)
    md["warning"] = "dim I = 3 lies outside the classification hypothesis";
  return md;
}

/// Named block subspaces: sl2 copies, radical R, squares ideal I.
struct BlockSet {
  std::vector<Subspace> sl2;
  Subspace radical;
  Subspace ideal;
};

inline BlockSet natural_blocks(const CatalogSpec& spec) {
  const auto labels = catalog_labels(spec);
  const std::size_t d = labels.size();
  BlockSet b;
  std::vector<std::size_t> r, x;
  for (std::size_t i = 0; i < d; ++i) {
    if (labels[i][0] == 'y') r.push_back(i);
    if (labels[i][0] == 'x') x.push_back(i);
  }
  for (std::size_t j = 0; j < detail::sl2_copies(spec); ++j) b.sl2.push_back(Subspace::coordinates(d, {3 * j, 3 * j + 1, 3 * j + 2}));
  b.radical = Subspace::coordinates(d, r);
  b.ideal = Subspace::coordinates(d, x);
  return b;
}

/// Indices of the x-labelled basis elements.
inline std::vector<std::size_t> x_coordinates(const Algebra& L) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (!L.label(i).empty() && L.label(i)[0] == 'x') out.push_back(i);
  return out;
}

/// sl2 + sl2 acting on two copies of V_m, with sl2^2 acting through
///   [x^1,e_2]=a1 x^1+a2 x^2, [x^2,e_2]=a3 x^1-a1 x^2,
///   [x^1,f_2]=b1 x^1+b2 x^2, [x^2,f_2]=b3 x^1-b1 x^2,
/// and h_2 given by c1=a2b3-a3b2, c2=2(a1b2-a2b1), c3=2(a3b1-a1b3), c4=-c1.
inline Algebra build_generic_action(std::size_t m, const Gaussian& a1, const Gaussian& a2, const Gaussian& a3,
                                    const Gaussian& b1, const Gaussian& b2, const Gaussian& b3) {
  CatalogSpec shape{Family::THM42, std::nullopt, m, std::nullopt, std::nullopt, std::nullopt};
  TableBuilder tb(catalog_labels(shape));
  detail::add_sl2_block(tb, 0);
  detail::add_sl2_block(tb, 3);
  const std::size_t x1 = 6, x2 = 6 + m + 1;
  detail::add_irreducible_action(tb, x1, 0, m);
  detail::add_irreducible_action(tb, x2, 0, m);
  const Gaussian c1 = a2 * b3 - a3 * b2;
  const Gaussian c2 = Gaussian(2) * (a1 * b2 - a2 * b1);
  const Gaussian c3 = Gaussian(2) * (a3 * b1 - a1 * b3);
  const Gaussian c4 = -c1;
  const std::size_t e2 = 3, h2 = 4, f2 = 5;
  for (std::size_t k = 0; k <= m; ++k) {
    const std::size_t p = x1 + k, q = x2 + k;
    tb.add(p, e2, p, a1).add(p, e2, q, a2);
    tb.add(q, e2, p, a3).add(q, e2, q, -a1);
    tb.add(p, f2, p, b1).add(p, f2, q, b2);
    tb.add(q, f2, p, b3).add(q, f2, q, -b1);
    tb.add(p, h2, p, c1).add(p, h2, q, c2);
    tb.add(q, h2, p, c3).add(q, h2, q, c4);
  }
  return tb.build();
}

namespace detail {

inline std::size_t parse_count(const std::string& key, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
    throw BadSpec("parameter '" + key + "' must be a non-negative integer, got '" + value + "'");
  return static_cast<std::size_t>(std::stoul(value));
}

}  // namespace detail

/// CatalogSpec from string parameters (keys s, m, n, alpha, a).
inline CatalogSpec spec_from_params(const std::string& family, const std::map<std::string, std::string>& params) {
  CatalogSpec spec;
  spec.family = family_from_name(family);
  for (const auto& [k, v] : params) {
    if (k == "s") spec.s = detail::parse_count(k, v);
    else if (k == "m") spec.m = detail::parse_count(k, v);
    else if (k == "n") spec.n = detail::parse_count(k, v);
    else if (k == "alpha" || k == "a") {
      Gaussian g;
      try {
        g = Gaussian::parse(v);
      } catch (const ParseError& e) {
        throw BadSpec("parameter '" + k + "': " + e.what());
      }
      (k == "a" ? spec.a : spec.alpha) = g;
    } else {
      throw BadSpec("unknown parameter '" + k + "'");
    }
  }
  if (!params.count("m") && spec.family != Family::SLN_TRIVIAL) throw BadSpec(family + " requires parameter 'm'");
  validate(spec);
  return spec;
}

}  // namespace leibniz
