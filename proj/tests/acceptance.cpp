// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "leibniz/cli.hpp"
#include "support.hpp"

using namespace leibniz;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const std::vector<Gaussian>& scalar_grid() {
  static const std::vector<Gaussian> g{0, 1, -1, 2, Gaussian::i()};
  return g;
}

std::string describe(const CatalogSpec& s) {
  std::string out = family_name(s.family) + " m=" + std::to_string(s.m);
  if (s.s) out += " s=" + std::to_string(*s.s);
  if (s.alpha) out += " alpha=" + s.alpha->to_string();
  if (s.a) out += " a=" + s.a->to_string();
  if (s.n) out += " n=" + std::to_string(*s.n);
  return out;
}

std::vector<CatalogSpec> full_grid() {
  std::vector<CatalogSpec> out;
  for (std::size_t m = 0; m <= 6; ++m) {
    out.push_back({Family::THM42, std::nullopt, m, std::nullopt, std::nullopt, std::nullopt});
    out.push_back({Family::SIMPLE_SL2, std::nullopt, m, std::nullopt, std::nullopt, std::nullopt});
    for (const auto& a : scalar_grid()) {
      out.push_back({Family::THM25, std::nullopt, m, std::nullopt, a, std::nullopt});
      for (std::size_t s = 1; s <= 3; ++s) {
        out.push_back({Family::COR35, s, m, std::nullopt, a, std::nullopt});
        out.push_back({Family::L2, s, m, std::nullopt, a, std::nullopt});
        for (const auto& alpha : scalar_grid()) out.push_back({Family::L1, s, m, alpha, a, std::nullopt});
      }
    }
  }
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t m = 0; m <= 1; ++m) out.push_back({Family::SLN_TRIVIAL, std::nullopt, m, std::nullopt, std::nullopt, n});
  return out;
}

Outcome criterion1() {
  Outcome o;
  std::size_t count = 0, max_dim = 0;
  for (const auto& spec : full_grid()) {
    const Algebra L = build_table(spec);
    ++count;
    max_dim = std::max(max_dim, L.dim());
    const auto rep = check_leibniz(L);
    o.require(rep.passed(), describe(spec) + ": " + std::to_string(rep.violations.size()) + " violating triples");
  }
  o.require(max_dim <= 26, "dimension " + std::to_string(max_dim) + " exceeds 26");
  if (o.ok) o.detail = std::to_string(count) + " algebras, max dim " + std::to_string(max_dim);
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t count = 0, excluded = 0;
  for (const auto& spec : full_grid()) {
    if (is_degenerate(spec)) {
      ++excluded;
      continue;
    }
    const Algebra L = build(spec);
    ++count;
    const auto cl = squares_ideal_closure(L);
    const Subspace expected = spec.family == Family::SLN_TRIVIAL ? Subspace::zero(L.dim())
                                                                 : Subspace::coordinates(L.dim(), x_coordinates(L));
    o.require(cl.ideal == expected, describe(spec) + ": squares ideal differs from the x-span");
    o.require(cl.passes == 1, describe(spec) + ": closure took " + std::to_string(cl.passes) + " passes");
  }
  if (o.ok) o.detail = std::to_string(count) + " algebras, " + std::to_string(excluded) + " Lie-degenerate specs excluded";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& spec : full_grid()) {
    if (is_degenerate(spec)) continue;
    const Algebra L = build(spec);
    const auto q = quotient(L, squares_ideal(L));
    ++count;
    o.require(check_lie(q.algebra), describe(spec) + ": quotient is not Lie");
    o.require(q.algebra == testing_support::expected_quotient(spec), describe(spec) + ": quotient table differs from the oracle");
  }
  if (o.ok) o.detail = std::to_string(count) + " quotients";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto all = testing_support::weight_multisets(12);
  for (const auto& weights : all) {
    std::vector<ModuleAction> parts;
    std::multiset<std::size_t> expected;
    for (auto m : weights) {
      parts.push_back(irreducible_module(m));
      expected.insert(m + 1);
    }
    std::multiset<std::size_t> got;
    for (const auto& s : decompose(direct_sum(parts))) got.insert(s.submodule.dim());
    o.require(got == expected, "wrong summand dimensions for a sum of " + std::to_string(weights.size()) + " modules");
  }
  for (std::size_t m = 0; m <= 6; ++m) o.require(is_irreducible(irreducible_module(m)), "V_" + std::to_string(m) + " reducible");
  o.require(!is_irreducible(direct_sum({irreducible_module(1), irreducible_module(1)})), "V_1+V_1 reported irreducible");
  if (o.ok) o.detail = std::to_string(all.size()) + " multisets";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Algebra sample = build_generic_action(2, 1, 1, -1, 0, 1, 0);
  o.require(check_leibniz(sample).passed(), "(1,1,-1,0,1,0) fails the Leibniz identity");
  o.require(check_action_relations(extract_coefficients(sample)).passed(), "(1,1,-1,0,1,0) fails the action relations");
  for (std::size_t m = 0; m <= 2; ++m) {
    const auto n = normalize_action(m, 1, 1, -1, 0, 1, 0);
    const CatalogSpec target{Family::THM42, std::nullopt, m, std::nullopt, std::nullopt, std::nullopt};
    o.require(change_basis(build_generic_action(m, 1, 1, -1, 0, 1, 0), n.change) == build(target),
              "normalization misses the canonical table at m=" + std::to_string(m));
  }

  const std::vector<Gaussian> grid{0, 1, -1, Gaussian::i(), -Gaussian::i()};
  std::set<std::size_t> by_leibniz, by_relations;
  std::size_t code = 0;
  for (const auto& a1 : grid)
    for (const auto& a2 : grid)
      for (const auto& a3 : grid)
        for (const auto& b1 : grid)
          for (const auto& b2 : grid)
            for (const auto& b3 : grid) {
              const Algebra L = build_generic_action(0, a1, a2, a3, b1, b2, b3);
              if (check_leibniz(L).passed()) by_leibniz.insert(code);
              const bool rel = check_action_relations(extract_coefficients(L)).passed() &&
                               (a1 * a1 + a2 * a3).is_zero() && (b1 * b1 + b2 * b3).is_zero();
              if (rel) by_relations.insert(code);
              ++code;
            }
  o.require(by_leibniz == by_relations, std::to_string(by_leibniz.size()) + " Leibniz vs " + std::to_string(by_relations.size()) +
                                            " relation solutions");
  if (o.ok) o.detail = std::to_string(code) + " assignments, " + std::to_string(by_leibniz.size()) + " solutions in both sets";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::size_t m = 0; m <= 4; ++m) {
    const auto r = verify_submodule_count(build({Family::THM42, std::nullopt, m, std::nullopt, std::nullopt, std::nullopt}));
    const std::string tag = "m=" + std::to_string(m);
    o.require(r.passed(), tag + ": report failed");
    const Check* count = r.find("summand count = m+1");
    o.require(count && count->status == CheckStatus::pass &&
                  count->witness == std::to_string(m + 1) + " summands, m=" + std::to_string(m),
              tag + ": wrong summand count");
    const Check* dims = r.find("each summand has dim 2");
    o.require(dims && dims->status == CheckStatus::pass, tag + ": summand of wrong dimension");
    const Check* sum = r.find("sum of summands = I1 cap I2");
    o.require(sum && sum->status == CheckStatus::pass, tag + ": summands do not span I1 cap I2");
  }
  if (o.ok) o.detail = "m = 0..4";
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const auto& [name, G] : {std::pair{"sl2", sl2_canonical()}, std::pair{"sl3", sln(3)}}) {
    const auto r = verify_one_dim_ideal(G);
    o.require(r.passed() && r.find("kernel dim 0")->witness == "kernel dim 0", std::string(name) + ": nonzero kernel");
  }
  o.require(one_dim_action_kernel(assemble({sln(3), Algebra::abelian({"z"})})) == 1, "control kernel is not 1-dim");
  bool refused = false;
  try {
    verify_one_dim_ideal(assemble({sln(3), Algebra::abelian({"z"})}));
  } catch (const NotPerfect&) {
    refused = true;
  }
  o.require(refused, "control algebra was not rejected as imperfect");

  const auto r = verify_two_dim_ideal(3);
  o.require(r.passed(), "two-dim ideal report failed");
  const std::array<std::string, 3> expected{"-4*alpha^2 - 4*beta*gamma + 1", "-2*alpha^2 - 2*beta*gamma + 2",
                                            "2*alpha^2 + 2*beta*gamma - 2"};
  const auto systems = stated_systems();
  const std::vector<std::string> vars{"alpha", "beta", "gamma"};
  const MultiPoly D = MultiPoly::variable(vars, 0) * MultiPoly::variable(vars, 0) + MultiPoly::variable(vars, 1) * MultiPoly::variable(vars, 2);
  const std::array<MultiPoly, 3> closed{MultiPoly(vars, Gaussian(1)) - D.scaled(4), MultiPoly(vars, Gaussian(2)) - D.scaled(2),
                                        MultiPoly(vars, Gaussian(-2)) + D.scaled(2)};
  for (std::size_t k = 0; k < 3; ++k) {
    const MultiPoly det = symbolic_det3(systems[k]);
    o.require(det.to_string() == expected[k], "determinant " + std::to_string(k) + " printed as " + det.to_string());
    o.require(det == closed[k], "determinant " + std::to_string(k) + " differs from the closed form");
  }
  for (const char* sub : {"resultant of 1-4D and 2-2D is nonzero", "case 1: e_in, e_ni act by zero => action zero",
                          "case 2: e_ij (i,j<n) act by zero => action zero"})
    o.require(r.find(sub) && r.find(sub)->status == CheckStatus::pass, std::string(sub) + " failed");
  if (o.ok) o.detail = "kernels 0, 0, control 1; sl3 sub-checks pass";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t count = 0;
  for (auto fam : {Family::COR35, Family::L1, Family::L2})
    for (std::size_t s = 1; s <= 3; ++s)
      for (std::size_t m = 0; m <= 6; ++m)
        for (const auto& a : {Gaussian(1), Gaussian(-1), Gaussian(2), Gaussian::i()}) {
          CatalogSpec spec{fam, s, m, std::nullopt, a, std::nullopt};
          if (fam == Family::L1) spec.alpha = Gaussian(2);
          const auto r = verify_splitting(build(spec), natural_blocks(spec));
          ++count;
          for (const auto& c : r.checks)
            o.require(c.status == CheckStatus::pass, describe(spec) + ": " + c.name + " " + status_name(c.status));
          if (s >= 2)
            for (const char* name : {"[I,sl2^2]=0", "[R,sl2^2]=0", "[sl2^2,R]=0", "[sl2^1,sl2^2]=0"})
              o.require(r.find(name) != nullptr, describe(spec) + ": missing " + name);
        }
  if (o.ok) o.detail = std::to_string(count) + " instances";
  return o;
}

Outcome criterion9(const fs::path& data) {
  Outcome o;
  auto run = [](std::vector<std::string> args, const std::string& input, std::string& out) {
    std::istringstream in(input);
    std::ostringstream os, es;
    const int code = cli::run(args, in, os, es);
    out = os.str();
    return code;
  };
  std::size_t round_trips = 0;
  for (const auto& spec : full_grid()) {
    if (is_degenerate(spec)) continue;
    std::vector<std::string> args{"catalog", "build", family_name(spec.family)};
    for (const auto& [k, v] : catalog_metadata(spec))
      if (k == "m" || k == "s" || k == "n" || k == "a" || k == "alpha") {
        args.push_back("--param");
        args.push_back(k + "=" + v);
      }
    std::string text;
    o.require(run(args, "", text) == 0, describe(spec) + ": build command failed");
    o.require(read_document(text).algebra == build(spec), describe(spec) + ": document does not reproduce the tensor");
    ++round_trips;
  }

  std::string golden;
  run({"catalog", "build", "THM42", "--param", "m=2"}, "", golden);
  std::ifstream gf(data / "golden" / "thm42_m2.json", std::ios::binary);
  std::ostringstream gs;
  gs << gf.rdbuf();
  o.require(!gs.str().empty() && golden == gs.str(), "THM42(2) document differs from the golden file");

  std::size_t malformed = 0;
  for (const auto& entry : fs::directory_iterator(data / "data" / "malformed")) {
    std::string out;
    ++malformed;
    o.require(run({"check", entry.path().string()}, "", out) == 2, entry.path().filename().string() + " did not exit 2");
  }
  o.require(malformed >= 5, "malformed corpus has " + std::to_string(malformed) + " cases");
  std::string out;
  o.require(run({"check", "-"}, golden, out) == 0, "golden document does not check");
  if (o.ok)
    o.detail = std::to_string(round_trips) + " round trips, golden match, " + std::to_string(malformed) + " malformed cases exit 2";
  return o;
}

}  // namespace

int main() {
  const fs::path data = LEIBNIZ_TEST_DATA_DIR;
  struct Criterion {
    int id;
    double budget_s;  // 0 means no timing requirement
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, 10, criterion1}, {2, 0, criterion2}, {3, 0, criterion3}, {4, 1, criterion4}, {5, 0, criterion5},
      {6, 0, criterion6},  {7, 5, criterion7}, {8, 0, criterion8}, {9, 0, [&] { return criterion9(data); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    all = all && o.ok;
    std::printf("criterion %d: %s  %.3f s  %s\n", c.id, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
  }
  return all ? 0 : 1;
}
