#pragma once

// JSON interchange (schema "1") for algebras and verification reports.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/error.hpp"
#include "leibniz/verify.hpp"

namespace leibniz {

using json = nlohmann::json;

inline constexpr const char* schema_version = "1";

struct AlgebraDocument {
  Algebra algebra;
  json metadata = json::object();
};

/// Normalized form: zero products omitted, table sorted by (left, right)
/// label, object keys sorted.
inline json document_to_json(const AlgebraDocument& doc) {
  const Algebra& L = doc.algebra;
  struct Row {
    std::string left, right;
    json value;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const auto& terms = L.bracket_terms(i, j);
      if (terms.empty()) continue;
      json value = json::object();
      for (const auto& t : terms) value[L.label(t.index)] = t.coeff.to_string();
      rows.push_back({L.label(i), L.label(j), std::move(value)});
    }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return std::tie(a.left, a.right) < std::tie(b.left, b.right); });
  json table = json::array();
  for (auto& r : rows) table.push_back({{"left", r.left}, {"right", r.right}, {"value", std::move(r.value)}});
  return {{"schema_version", schema_version},
          {"dim", L.dim()},
          {"basis", L.labels()},
          {"table", std::move(table)},
          {"metadata", doc.metadata.is_null() ? json::object() : doc.metadata}};
}

inline std::string write_document(const AlgebraDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

namespace detail {

inline const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + ": missing field '" + key + "'");
  return *it;
}

inline std::string string_field(const json& obj, const std::string& key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

}  // namespace detail

inline AlgebraDocument document_from_json(const json& root) {
  if (!root.is_object()) throw SchemaError("document: expected a JSON object");
  const std::string version = detail::string_field(root, "schema_version", "document");
  if (version != schema_version) throw SchemaError("schema_version: unsupported version '" + version + "'");

  const json& basis = detail::field(root, "basis", "document");
  if (!basis.is_array()) throw SchemaError("basis: expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string() || basis[i].get<std::string>().empty())
      throw SchemaError("basis[" + std::to_string(i) + "]: expected a non-empty string");
    labels.push_back(basis[i].get<std::string>());
  }
  const json& dim = detail::field(root, "dim", "document");
  if (!dim.is_number_unsigned()) throw SchemaError("dim: expected a non-negative integer");
  if (dim.get<std::size_t>() != labels.size())
    throw SchemaError("dim: " + std::to_string(dim.get<std::size_t>()) + " does not match " + std::to_string(labels.size()) +
                      " basis labels");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw SchemaError("basis: duplicate label '" + *dup + "'");
  }

  TableBuilder tb(labels);
  auto lookup = [&](const std::string& label, const std::string& path) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw ParseError(path + ": unknown label '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  const json& table = detail::field(root, "table", "document");
  if (!table.is_array()) throw SchemaError("table: expected an array");
  std::vector<bool> seen(labels.size() * labels.size(), false);
  for (std::size_t r = 0; r < table.size(); ++r) {
    const std::string path = "table[" + std::to_string(r) + "]";
    const json& entry = table[r];
    if (!entry.is_object()) throw SchemaError(path + ": expected an object");
    const std::size_t i = lookup(detail::string_field(entry, "left", path), path + ".left");
    const std::size_t j = lookup(detail::string_field(entry, "right", path), path + ".right");
    if (seen[i * labels.size() + j])
      throw SchemaError(path + ": duplicate product (" + labels[i] + "," + labels[j] + ")");
    seen[i * labels.size() + j] = true;
    const json& value = detail::field(entry, "value", path);
    if (!value.is_object()) throw SchemaError(path + ".value: expected an object of label -> scalar");
    for (const auto& [label, scalar] : value.items()) {
      const std::string vpath = path + ".value." + label;
      const std::size_t k = lookup(label, vpath);
      if (!scalar.is_string()) throw SchemaError(vpath + ": expected a scalar string");
      Gaussian c;
      try {
        c = Gaussian::parse(scalar.get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError(vpath + ": " + e.what());
      }
      tb.add(i, j, k, c);
    }
  }

  AlgebraDocument doc{tb.build(), json::object()};
  if (auto it = root.find("metadata"); it != root.end()) {
    if (!it->is_object()) throw SchemaError("metadata: expected an object");
    doc.metadata = *it;
  }
  return doc;
}

inline AlgebraDocument read_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return document_from_json(root);
}

inline AlgebraDocument read_document(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_document(buf.str());
}

inline AlgebraDocument read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return read_document(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

inline json report_to_json(const VerdictReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"witness", c.witness}});
  return {{"theorem_id", r.theorem_id}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

inline VerdictReport report_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("report: expected a JSON object");
  VerdictReport r{detail::string_field(j, "theorem_id", "report"), {}};
  const json& checks = detail::field(j, "checks", "report");
  if (!checks.is_array()) throw SchemaError("report.checks: expected an array");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string path = "report.checks[" + std::to_string(i) + "]";
    r.checks.push_back({detail::string_field(checks[i], "name", path),
                        status_from_name(detail::string_field(checks[i], "status", path)),
                        detail::string_field(checks[i], "witness", path)});
  }
  return r;
}

enum class Format { text, json };

inline std::string render_report(const VerdictReport& r, Format f) {
  if (f == Format::json) return report_to_json(r).dump(2) + "\n";
  std::string out = r.theorem_id + ": " + (r.passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& c : r.checks) {
    std::string tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIP";
    out += "  [" + tag + "] " + c.name;
    if (!c.witness.empty()) out += " (" + c.witness + ")";
    out += "\n";
  }
  return out;
}

}  // namespace leibniz
