#pragma once

// Command-line front end.  Exit codes: 0 success, 1 failed verification,
// 2 bad input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/document.hpp"
#include "leibniz/reps.hpp"
#include "leibniz/verify.hpp"

namespace leibniz::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_input = 2;

namespace detail {

inline std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::string> out;
  for (const auto& p : raw) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw BadSpec("parameter '" + p + "' is not of the form key=value");
    if (!out.emplace(p.substr(0, eq), p.substr(eq + 1)).second) throw BadSpec("parameter '" + p.substr(0, eq) + "' given twice");
  }
  return out;
}

inline std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline AlgebraDocument load(const std::string& file, std::istream& in) {
  if (file == "-") return read_document(in);
  return read_document_file(file);
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError(path + ": cannot open for writing");
  f << text;
}

inline std::string vec_text(const Algebra& L, const Vec& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out += (out.empty() ? "" : ", ") + L.label(k) + ": " + v[k].to_string();
  return "{" + out + "}";
}

inline json vec_json(const Algebra& L, const Vec& v) {
  json o = json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) o[L.label(k)] = v[k].to_string();
  return o;
}

inline json dims_json(const std::vector<Subspace>& series) {
  json a = json::array();
  for (const auto& s : series) a.push_back(s.dim());
  return a;
}

inline std::string dims_text(const std::vector<Subspace>& series) {
  std::string out;
  for (const auto& s : series) out += (out.empty() ? "" : " ") + std::to_string(s.dim());
  return out;
}

inline int cmd_check(const AlgebraDocument& doc, Format f, std::ostream& out) {
  const Algebra& L = doc.algebra;
  const auto rep = check_leibniz(L);
  const bool lie = rep.passed() && is_antisymmetric(L);
  const bool abelian = is_abelian(L);
  if (f == Format::json) {
    json v = json::array();
    for (const auto& x : rep.violations)
      v.push_back({{"x", L.label(x.x)}, {"y", L.label(x.y)}, {"z", L.label(x.z)}, {"defect", vec_json(L, x.defect)}});
    json o = {{"leibniz", {{"passed", rep.passed()}, {"triples_checked", rep.triples_checked}, {"violations", v}}},
              {"lie", lie},
              {"abelian", abelian}};
    out << o.dump(2) << "\n";
  } else {
    if (rep.passed()) out << "leibniz: pass (" << rep.triples_checked << " triples checked)\n";
    else out << "leibniz: FAIL (" << rep.violations.size() << " violating triples)\n";
    for (const auto& x : rep.violations)
      out << "  (" << L.label(x.x) << "," << L.label(x.y) << "," << L.label(x.z) << ") defect " << vec_text(L, x.defect) << "\n";
    out << "lie: " << (lie ? "yes" : "no") << "\n";
    out << "abelian: " << (abelian ? "yes" : "no") << "\n";
  }
  return rep.passed() ? exit_ok : exit_failed;
}

inline int cmd_invariants(const AlgebraDocument& doc, Format f, std::ostream& out) {
  const Algebra& L = doc.algebra;
  const auto inv = solvability_invariants(L);
  const auto sq = squares_ideal_closure(L);
  if (f == Format::json) {
    json o = {{"dim", L.dim()},
              {"derived_series", dims_json(inv.derived_series)},
              {"lower_central_series", dims_json(inv.lower_central)},
              {"solvable", inv.is_solvable},
              {"nilpotent", inv.is_nilpotent},
              {"right_annihilator_dim", inv.right_annihilator.dim()},
              {"squares_ideal_dim", sq.ideal.dim()},
              {"squares_closure_passes", sq.passes}};
    out << o.dump(2) << "\n";
  } else {
    out << "dim: " << L.dim() << "\n";
    out << "derived series: " << dims_text(inv.derived_series) << "\n";
    out << "lower central series: " << dims_text(inv.lower_central) << "\n";
    out << "solvable: " << (inv.is_solvable ? "yes" : "no") << "\n";
    out << "nilpotent: " << (inv.is_nilpotent ? "yes" : "no") << "\n";
    out << "right annihilator: dim " << inv.right_annihilator.dim() << "\n";
    out << "squares ideal: dim " << sq.ideal.dim() << " (closure passes " << sq.passes << ")\n";
  }
  return exit_ok;
}

inline int cmd_quotient(const AlgebraDocument& doc, const std::string& path, std::ostream& out) {
  const Algebra& L = doc.algebra;
  const auto I = squares_ideal(L);
  const auto q = quotient(L, I);
  AlgebraDocument qd{q.algebra, {{"quotient_by", "squares ideal"}, {"source_dim", L.dim()}}};
  emit(write_document(qd), path, out);
  return exit_ok;
}

inline int cmd_module(const AlgebraDocument& doc, const std::string& actor, const std::string& module, bool split,
                      Format f, std::ostream& out) {
  const Algebra& L = doc.algebra;
  std::vector<std::size_t> mi;
  std::vector<Vec> av;
  for (const auto& l : split_labels(module)) {
    auto i = L.index_of(l);
    if (!i) throw ParseError("--module: unknown label '" + l + "'");
    mi.push_back(*i);
  }
  for (const auto& l : split_labels(actor)) {
    auto i = L.index_of(l);
    if (!i) throw ParseError("--actor: unknown label '" + l + "'");
    av.push_back(unit_vector(L.dim(), *i));
  }
  if (mi.empty() || av.empty()) throw BadSpec("--actor and --module need at least one label");
  const auto action = action_from_algebra(L, Subspace::coordinates(L.dim(), mi), av);
  const bool law = homomorphism_law_holds(action);
  std::vector<Summand> parts;
  if (split) parts = decompose(action);

  if (f == Format::json) {
    json o = {{"actor", split_labels(actor)}, {"module_dim", action.module_dim}, {"homomorphism_law", law}};
    if (split) {
      json s = json::array();
      for (const auto& p : parts) s.push_back({{"highest_weight", p.highest_weight}, {"dim", p.submodule.dim()}});
      o["summands"] = s;
      o["irreducible"] = parts.size() == 1;
    }
    out << o.dump(2) << "\n";
  } else {
    out << "module dim: " << action.module_dim << "\n";
    out << "homomorphism law: " << (law ? "pass" : "FAIL") << "\n";
    if (split) {
      out << "summands:";
      for (const auto& p : parts) out << " V_" << p.highest_weight;
      out << "\nirreducible: " << (parts.size() == 1 ? "yes" : "no") << "\n";
    }
  }
  return law ? exit_ok : exit_failed;
}

inline int cmd_catalog_list(Format f, std::ostream& out) {
  const auto fams = list_families();
  if (f == Format::json) {
    json a = json::array();
    for (const auto& d : fams) {
      json ps = json::array();
      for (const auto& p : d.params)
        ps.push_back({{"key", p.key}, {"kind", p.kind}, {"required", p.required}, {"meaning", p.meaning}});
      a.push_back({{"name", d.name}, {"citation", d.citation}, {"summary", d.summary}, {"params", ps}});
    }
    out << a.dump(2) << "\n";
  } else {
    for (const auto& d : fams) {
      std::string ps;
      for (const auto& p : d.params) ps += (ps.empty() ? "" : " ") + p.key + (p.required ? "" : "?");
      out << d.name << "  [" << d.citation << "]  params: " << ps << "  " << d.summary << "\n";
    }
  }
  return exit_ok;
}

inline int cmd_catalog_build(const std::string& family, const std::vector<std::string>& raw, const std::string& path,
                             std::ostream& out, std::ostream& err) {
  const auto spec = spec_from_params(family, parse_params(raw));
  AlgebraDocument doc{build(spec), json::object()};
  for (const auto& [k, v] : catalog_metadata(spec)) doc.metadata[k] = v;
  if (doc.metadata.contains("warning")) err << "warning: " << doc.metadata["warning"].get<std::string>() << "\n";
  emit(write_document(doc), path, out);
  return exit_ok;
}

inline int cmd_verify(const std::string& id, const std::vector<std::string>& raw, Format f, std::ostream& out) {
  const auto report = run_theorem(id, parse_params(raw));
  out << render_report(report, f);
  return report.passed() ? exit_ok : exit_failed;
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Leibniz algebras given by structure constants", "leibniz"};
  app.require_subcommand(1);

  std::string format = "text", file, output, actor, module, family, theorem;
  std::vector<std::string> params;
  bool split = false;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* check = app.add_subcommand("check", "Check the Leibniz identity, antisymmetry and commutativity");
  check->add_option("file", file, "Document path or - for stdin")->required();
  add_format(check);

  auto* invariants = app.add_subcommand("invariants", "Derived and lower central series, annihilator, squares ideal");
  invariants->add_option("file", file, "Document path or - for stdin")->required();
  add_format(invariants);

  auto* quot = app.add_subcommand("quotient", "Emit the quotient by the ideal generated by squares");
  quot->add_option("file", file, "Document path or - for stdin")->required();
  quot->add_option("-o,--output", output, "Output path");
  add_format(quot);

  auto* mod = app.add_subcommand("module", "Right action of a subalgebra on a subspace");
  mod->add_option("file", file, "Document path or - for stdin")->required();
  mod->add_option("--actor", actor, "Comma-separated actor labels")->required();
  mod->add_option("--module", module, "Comma-separated module labels")->required();
  mod->add_flag("--decompose", split, "Split into irreducible sl2-modules");
  add_format(mod);

  auto* catalog = app.add_subcommand("catalog", "Classified families");
  catalog->require_subcommand(1);
  auto* clist = catalog->add_subcommand("list", "List families and their parameters");
  add_format(clist);
  auto* cbuild = catalog->add_subcommand("build", "Build a family member as a document");
  cbuild->add_option("family", family, "Family name")->required();
  cbuild->add_option("--param", params, "key=value")->allow_extra_args(false);
  cbuild->add_option("-o,--output", output, "Output path");
  add_format(cbuild);

  auto* verify = app.add_subcommand("verify", "Run a structural verifier");
  verify->add_option("theorem", theorem, "Theorem id")->required();
  verify->add_option("--param", params, "key=value")->allow_extra_args(false);
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  const Format f = format == "json" ? Format::json : Format::text;
  try {
    if (*check) return detail::cmd_check(detail::load(file, in), f, out);
    if (*invariants) return detail::cmd_invariants(detail::load(file, in), f, out);
    if (*quot) return detail::cmd_quotient(detail::load(file, in), output, out);
    if (*mod) return detail::cmd_module(detail::load(file, in), actor, module, split, f, out);
    if (*clist) return detail::cmd_catalog_list(f, out);
    if (*cbuild) return detail::cmd_catalog_build(family, params, output, out, err);
    if (*verify) return detail::cmd_verify(theorem, params, f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace leibniz::cli
