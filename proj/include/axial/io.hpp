#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "axial/algebra.hpp"
#include "axial/error.hpp"
#include "axial/linalg.hpp"
#include "axial/rational.hpp"

namespace axial {

using json = nlohmann::json;

// Algebra files are JSON with every rational written as a string "p" or
// "p/q", so reading and writing is exact:
//
//   { "name": "spin(1,1)", "dimension": 3, "basis": ["1", "u", "v"],
//     "table": [[["1","0","0"], ...], ...],     // table[i][j] = e_i e_j
//     "axes": [["1/2","1/2","0"], ...],
//     "generators": [...] }                     // optional

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

inline json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

inline json to_json(const Element& x) { return to_json(x.coords()); }

inline json to_json(const std::vector<Element>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

inline json to_json(const SubspaceBasis& s) {
  json out = json::array();
  for (const auto& v : s.vectors()) out.push_back(to_json(v));
  return out;
}

inline json serialize_algebra(const Algebra& alg) {
  const std::size_t n = alg.dim();
  json table = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(to_json(alg.structure().product(i, j)));
    table.push_back(std::move(row));
  }
  json out = {{"name", alg.name()},
              {"dimension", n},
              {"basis", alg.basis_names()},
              {"table", std::move(table)},
              {"axes", to_json(alg.axes())}};
  if (!alg.generators().empty()) out["generators"] = to_json(alg.generators());
  return out;
}

namespace detail {

inline Error schema_error(const std::string& where, const std::string& what) {
  return Error(ErrorKind::ParseError, what + " at " + (where.empty() ? "/" : where));
}

inline Rational rational_at(const json& j, const std::string& where) {
  if (!j.is_string()) throw schema_error(where, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw schema_error(where, e.detail());
  }
}

inline Vector vector_at(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw schema_error(where, "expected an array of " + std::to_string(n) + " rationals");
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational_at(j[i], where + "/" + std::to_string(i)));
  return v;
}

inline std::vector<Vector> vectors_at(const json& doc, const char* key, std::size_t n) {
  std::vector<Vector> out;
  if (!doc.contains(key)) return out;
  const json& list = doc[key];
  const std::string where = std::string("/") + key;
  if (!list.is_array()) throw schema_error(where, "expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) out.push_back(vector_at(list[i], n, where + "/" + std::to_string(i)));
  return out;
}

}  // namespace detail

/// Errors: ParseError (with byte offset or JSON pointer), then whatever
/// make_algebra rejects (CommutativityViolation, NotIdempotent).
inline Algebra parse_algebra(const json& doc) {
  using detail::schema_error;
  if (!doc.is_object()) throw schema_error("", "expected an object");
  for (const char* key : {"dimension", "basis", "table", "axes"})
    if (!doc.contains(key)) throw schema_error("", std::string("missing key \"") + key + "\"");
  if (!doc["dimension"].is_number_unsigned()) throw schema_error("/dimension", "expected a nonnegative integer");
  const auto n = doc["dimension"].get<std::size_t>();
  const json& basis = doc["basis"];
  if (!basis.is_array() || basis.size() != n) throw schema_error("/basis", "expected " + std::to_string(n) + " names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis[i].is_string()) throw schema_error("/basis/" + std::to_string(i), "expected a string");
    names.push_back(basis[i].get<std::string>());
  }
  const json& table = doc["table"];
  if (!table.is_array() || table.size() != n) throw schema_error("/table", "expected " + std::to_string(n) + " rows");
  StructureConstants sc(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_at = "/table/" + std::to_string(i);
    if (!table[i].is_array() || table[i].size() != n) throw schema_error(row_at, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const Vector p = detail::vector_at(table[i][j], n, row_at + "/" + std::to_string(j));
      for (std::size_t k = 0; k < n; ++k) sc(i, j, k) = p[k];
    }
  }
  std::string name = doc.value("name", std::string("algebra"));
  return make_algebra(std::move(name), std::move(names), std::move(sc), detail::vectors_at(doc, "axes", n),
                      detail::vectors_at(doc, "generators", n));
}

inline Algebra parse_algebra_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_algebra(doc);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::UsageError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes to a sibling temporary file and renames it over the target.
inline void write_file_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::UsageError, "cannot write " + tmp);
    out << text;
    if (!out) throw Error(ErrorKind::UsageError, "write to " + tmp + " failed");
  }
  std::filesystem::rename(tmp, path);
}

enum class Status { Pass, Fail, Error };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

inline Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "error") return Status::Error;
  throw Error(ErrorKind::ParseError, "unknown status \"" + s + "\"");
}

inline int exit_code(Status s) { return s == Status::Pass ? 0 : s == Status::Fail ? 1 : 2; }

struct Report {
  std::string command;
  json inputs = json::object();
  json findings = json::object();
  Status status = Status::Pass;
  std::string message;

  friend bool operator==(const Report&, const Report&) = default;
};

inline json to_json(const Report& r) {
  return {{"command", r.command},
          {"inputs", r.inputs},
          {"findings", r.findings},
          {"status", to_string(r.status)},
          {"message", r.message}};
}

inline std::string serialize_report(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline Report parse_report(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
    return Report{doc.at("command").get<std::string>(), doc.at("inputs"), doc.at("findings"),
                  parse_status(doc.at("status").get<std::string>()), doc.at("message").get<std::string>()};
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace axial
