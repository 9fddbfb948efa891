#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "jordan/catalog.hpp"

namespace jordan {

using json = nlohmann::json;

inline json field_to_json(const FieldSpec& f) {
  if (f.is_rational()) return "Q";
  return json{{"p", f.characteristic()}};
}

inline FieldSpec field_from_json(const json& j) {
  if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
  if (j.is_object() && j.contains("p") && j["p"].is_number_integer()) {
    long long p = j["p"].get<long long>();
    if (p < 0) throw InvalidField("negative modulus");
    return FieldSpec::prime(static_cast<std::uint64_t>(p));
  }
  throw ParseError("field must be \"Q\" or {\"p\": prime}");
}

inline json serialize_algebra(const Algebra& A) {
  json doc;
  doc["name"] = A.name();
  doc["dim"] = A.dim();
  doc["field"] = field_to_json(A.field());
  doc["basis"] = A.basis_names();
  json prods = json::array();
  for (const auto& p : A.products()) {
    json terms = json::array();
    for (const auto& t : p.terms) terms.push_back({{"k", t.k}, {"c", t.c.str()}});
    prods.push_back({{"i", p.i}, {"j", p.j}, {"terms", terms}});
  }
  doc["products"] = prods;
  return doc;
}

inline Algebra parse_algebra(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("algebra document must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw ParseError("missing integer 'dim'");
    long long dim = doc["dim"].get<long long>();
    if (dim < 1) throw ParseError("dim must be at least 1");
    FieldSpec f = doc.contains("field") ? field_from_json(doc["field"]) : FieldSpec::rationals();
    std::vector<std::string> names;
    if (doc.contains("basis")) {
      if (!doc["basis"].is_array()) throw ParseError("'basis' must be an array");
      for (const auto& b : doc["basis"]) {
        if (!b.is_string()) throw ParseError("basis names must be strings");
        names.push_back(b.get<std::string>());
      }
    }
    std::vector<Product> prods;
    if (doc.contains("products")) {
      if (!doc["products"].is_array()) throw ParseError("'products' must be an array");
      for (const auto& p : doc["products"]) {
        auto index = [&](const json& obj, const char* key) -> std::size_t {
          if (!obj.contains(key) || !obj[key].is_number_integer()) throw ParseError(std::string("missing index '") + key + "'");
          long long v = obj[key].get<long long>();
          if (v < 0 || v >= dim) throw StructureError(std::string("index out of range: ") + key + "=" + std::to_string(v));
          return static_cast<std::size_t>(v);
        };
        Product q{index(p, "i"), index(p, "j"), {}};
        if (!p.contains("terms") || !p["terms"].is_array()) throw ParseError("product without 'terms'");
        for (const auto& t : p["terms"]) {
          if (!t.contains("c")) throw ParseError("term without coefficient 'c'");
          Scalar c = t["c"].is_string() ? Scalar::parse(t["c"].get<std::string>(), f)
                                        : Scalar::from_int(t["c"].get<long>(), f);
          q.terms.push_back({index(t, "k"), c});
        }
        prods.push_back(std::move(q));
      }
    }
    std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
    return Algebra(name, static_cast<std::size_t>(dim), f, names, prods);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

inline Algebra parse_algebra_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_algebra(doc);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Resolves "@path" documents and catalog references, optionally reducing to a field.
inline Algebra resolve_algebra(const std::string& ref, std::optional<FieldSpec> field = std::nullopt) {
  Algebra A;
  if (!ref.empty() && ref[0] == '@') {
    A = parse_algebra_text(read_file(ref.substr(1)));
  } else {
    A = instantiate_reference(ref);
  }
  if (field) A = reduce_to_field(A, *field);
  return A;
}

/// Map files: a JSON array of rows of scalar strings, or whitespace-separated rows.
inline Matrix parse_matrix_text(const std::string& text, const FieldSpec& f) {
  std::vector<std::vector<std::string>> rows;
  std::string trimmed = detail::strip_spaces(text);
  if (!trimmed.empty() && trimmed[0] == '[') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed matrix: ") + e.what());
    }
    for (const auto& row : doc) {
      std::vector<std::string> r;
      for (const auto& x : row) r.push_back(x.is_string() ? x.get<std::string>() : x.dump());
      rows.push_back(r);
    }
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::vector<std::string> r;
      std::string tok;
      while (ls >> tok) r.push_back(tok);
      if (!r.empty()) rows.push_back(r);
    }
  }
  return Matrix::parse(rows, f);
}

}  // namespace jordan
