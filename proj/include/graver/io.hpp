#pragma once

// JSON formats. Integers are written as decimal strings; readers also accept
// plain JSON integers.
//
//   matrix       {"rows": r, "cols": c, "entries": [["1","0"], ...]}
//   Graver basis {"matrix": <matrix>, "elements": [["1","-1"], ...]}
//   circuits     {"matrix": <matrix>, "circuits": [["1","-1"], ...]}
//   certificate  {"m": 4, "circuits": [["a","u4","c","u2","b","u3"], ...],
//                 "coefficients": ["1", ...], "claimed_bound": "27"}

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graver/bigint.hpp"
#include "graver/errors.hpp"
#include "graver/graver_basis.hpp"
#include "graver/kthree/certificate.hpp"
#include "graver/lattice_vector.hpp"
#include "graver/matrix.hpp"

namespace graver::io {

using json = nlohmann::ordered_json;

inline BigInt integer_from_json(const json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<unsigned long long>())
                                  : BigInt(j.get<long long>());
  }
  throw ParseError("expected an integer or decimal string, got " + j.dump());
}

inline std::size_t count_from_json(const json& j, const char* what) {
  if (!j.is_number_unsigned()) {
    if (j.is_number_integer() && j.get<long long>() >= 0) return j.get<std::size_t>();
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

inline json vector_to_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

inline std::vector<BigInt> vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<BigInt> v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

inline json matrix_to_json(const IntMatrix& m) {
  json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(vector_to_json({m.row(i).begin(), m.row(i).end()}));
  }
  out["entries"] = std::move(rows);
  return out;
}

inline IntMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw ParseError("matrix object needs rows, cols and entries");
  }
  const std::size_t r = count_from_json(j["rows"], "rows");
  const std::size_t c = count_from_json(j["cols"], "cols");
  const json& e = j["entries"];
  if (!e.is_array() || e.size() != r) throw ParseError("entries must hold one array per row");
  std::vector<BigInt> flat;
  flat.reserve(r * c);
  for (const auto& row : e) {
    auto v = vector_from_json(row);
    if (v.size() != c) throw ParseError("matrix row length differs from cols");
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return IntMatrix(r, c, std::move(flat));
}

inline json vectors_to_json(const std::vector<LatticeVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v.entries()));
  return out;
}

inline json graver_basis_to_json(const GraverBasis& g) {
  json out;
  out["matrix"] = matrix_to_json(g.matrix());
  out["elements"] = vectors_to_json(g.elements());
  return out;
}

inline GraverBasis graver_basis_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j.contains("elements")) {
    throw ParseError("Graver basis object needs matrix and elements");
  }
  IntMatrix m = matrix_from_json(j["matrix"]);
  std::vector<LatticeVector> elements;
  for (const auto& e : j["elements"]) {
    auto v = vector_from_json(e);
    if (v.size() != m.cols()) throw ParseError("element length differs from matrix cols");
    elements.emplace_back(std::move(v));
  }
  return GraverBasis(std::move(m), std::move(elements));
}

inline json circuits_to_json(const IntMatrix& m, const std::vector<LatticeVector>& circuits) {
  json out;
  out["matrix"] = matrix_to_json(m);
  out["circuits"] = vectors_to_json(circuits);
  return out;
}

inline json certificate_to_json(const kthree::Certificate& cert) {
  json out;
  out["m"] = cert.m;
  json circuits = json::array();
  for (const auto& c : cert.circuits) {
    json seq = json::array();
    for (const auto& v : c.sequence()) seq.push_back(v.name());
    circuits.push_back(std::move(seq));
  }
  out["circuits"] = std::move(circuits);
  out["coefficients"] = vector_to_json(cert.coefficients);
  out["claimed_bound"] = to_decimal(cert.claimed_bound);
  return out;
}

/// Reads a certificate without judging it: circuits are kept exactly as
/// written so the verifier can report what is wrong with them.
inline kthree::Certificate certificate_from_json(const json& j) {
  for (const char* key : {"m", "circuits", "coefficients", "claimed_bound"}) {
    if (!j.is_object() || !j.contains(key)) {
      throw ParseError(std::string("certificate is missing '") + key + "'");
    }
  }
  kthree::Certificate cert;
  const std::size_t m = count_from_json(j["m"], "m");
  if (m > 1'000'000) throw ParseError("m is unreasonably large");
  cert.m = static_cast<unsigned>(m);
  if (!j["circuits"].is_array()) throw ParseError("circuits must be an array");
  for (const auto& c : j["circuits"]) {
    if (!c.is_array()) throw ParseError("each circuit must be an array of vertex names");
    kthree::VertexSequence seq;
    for (const auto& name : c) {
      if (!name.is_string()) throw ParseError("vertex names must be strings");
      seq.push_back(kthree::parse_vertex(name.get<std::string>()));
    }
    cert.circuits.push_back(kthree::K3mCircuit::unchecked(cert.m, std::move(seq)));
  }
  cert.coefficients = vector_from_json(j["coefficients"]);
  cert.claimed_bound = integer_from_json(j["claimed_bound"]);
  return cert;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace graver::io
