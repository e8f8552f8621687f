#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graver/bigint.hpp"
#include "graver/errors.hpp"
#include "graver/lattice_vector.hpp"
#include "graver/matrix.hpp"

namespace graver::kthree {

/// A vertex of K_{3,m}: one of a, b, c on the A side, or u_1..u_m on the U side.
struct Vertex {
  enum class Side { A, U };
  Side side = Side::A;
  unsigned index = 0;  // 0..2 for a,b,c; 1..m for u_i

  static constexpr Vertex a() { return {Side::A, 0}; }
  static constexpr Vertex b() { return {Side::A, 1}; }
  static constexpr Vertex c() { return {Side::A, 2}; }
  static constexpr Vertex u(unsigned i) { return {Side::U, i}; }

  bool is_a_side() const { return side == Side::A; }

  std::string name() const {
    if (side == Side::A) return std::string(1, static_cast<char>('a' + index));
    return "u" + std::to_string(index);
  }

  // a < b < c < u1 < u2 < ...
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex parse_vertex(std::string_view s) {
  if (s == "a") return Vertex::a();
  if (s == "b") return Vertex::b();
  if (s == "c") return Vertex::c();
  if (s.size() >= 2 && s[0] == 'u' && s[1] != '0') {
    unsigned value = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9' || value > 100000000u) {
        throw ParseError("bad vertex name '" + std::string(s) + "'");
      }
      value = value * 10 + static_cast<unsigned>(s[i] - '0');
    }
    return Vertex::u(value);
  }
  throw ParseError("bad vertex name '" + std::string(s) + "'");
}

using VertexSequence = std::vector<Vertex>;

/// Parses a list such as {"a","u4","c","u2","b","u3"}.
inline VertexSequence parse_sequence(const std::vector<std::string>& names) {
  VertexSequence seq;
  seq.reserve(names.size());
  for (const auto& n : names) seq.push_back(parse_vertex(n));
  return seq;
}

inline std::string format_sequence(const VertexSequence& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += seq[i].name();
  }
  return out + ")";
}

/// Why `seq` is not a simple cycle of K_{3,m}, or nullopt if it is one.
inline std::optional<std::string> sequence_defect(unsigned m, const VertexSequence& seq) {
  if (seq.size() < 4 || seq.size() % 2 != 0) {
    return "cycle length " + std::to_string(seq.size()) + " is not an even number >= 4";
  }
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex& v = seq[i];
    if (v.is_a_side() ? v.index > 2 : (v.index < 1 || v.index > m)) {
      return "vertex " + v.name() + " is not in K_{3," + std::to_string(m) + "}";
    }
    if (v.is_a_side() == seq[(i + 1) % seq.size()].is_a_side()) {
      return "vertices " + v.name() + " and " + seq[(i + 1) % seq.size()].name() +
             " are on the same side";
    }
    if (!seen.insert(v).second) return "vertex " + v.name() + " repeats";
  }
  return std::nullopt;
}

/// The 3 x m edge function of the closed walk `seq`: +1 on (v1,v2), then
/// alternating around the walk, summed over repeated edges. Nullopt when the
/// walk does not alternate between sides or leaves K_{3,m}.
inline std::optional<IntMatrix> walk_matrix(unsigned m, const VertexSequence& seq) {
  if (seq.size() % 2 != 0) return std::nullopt;
  IntMatrix x(3, m);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex& p = seq[i];
    const Vertex& q = seq[(i + 1) % seq.size()];
    if (p.is_a_side() == q.is_a_side()) return std::nullopt;
    const Vertex& av = p.is_a_side() ? p : q;
    const Vertex& uv = p.is_a_side() ? q : p;
    if (av.index > 2 || uv.index < 1 || uv.index > m) return std::nullopt;
    x(av.index, uv.index - 1) += (i % 2 == 0) ? 1 : -1;
  }
  return x;
}

/// Flattens a 3 x m edge matrix to the column order of (1,1,1)^(m): block j
/// holds the edges (a,u_j), (b,u_j), (c,u_j).
inline LatticeVector flatten_edges(const IntMatrix& x) {
  std::vector<BigInt> v;
  v.reserve(3 * x.cols());
  for (std::size_t u = 0; u < x.cols(); ++u)
    for (std::size_t r = 0; r < 3; ++r) v.push_back(x(r, u));
  return LatticeVector(std::move(v), 3);
}

/// A signed cycle of K_{3,m}, stored as its vertex sequence; the 3 x m matrix
/// (rows a,b,c; columns u_1..u_m) is derived once at construction.
///
/// Validated circuits are kept in canonical orientation: start at the least
/// A-vertex on the cycle, walking in the direction whose first edge carries +1.
/// The edge function is unchanged by this normalization.
class K3mCircuit {
 public:
  /// Validates and canonicalizes. Throws InvalidSequence.
  static K3mCircuit from_sequence(unsigned m, VertexSequence seq) {
    if (auto defect = sequence_defect(m, seq)) {
      throw InvalidSequence(format_sequence(seq) + ": " + *defect);
    }
    K3mCircuit c;
    c.m_ = m;
    c.matrix_ = walk_matrix(m, seq);
    c.sequence_ = canonical_rotation(seq);
    c.valid_ = true;
    return c;
  }

  /// Keeps the sequence exactly as given, without validation. Used for
  /// certificates read from files, which the verifier judges independently.
  static K3mCircuit unchecked(unsigned m, VertexSequence seq) {
    K3mCircuit c;
    c.m_ = m;
    c.matrix_ = walk_matrix(m, seq);
    c.valid_ = !sequence_defect(m, seq).has_value();
    c.sequence_ = std::move(seq);
    return c;
  }

  unsigned m() const { return m_; }
  const VertexSequence& sequence() const { return sequence_; }
  bool is_valid_cycle() const { return valid_; }
  bool has_matrix() const { return matrix_.has_value(); }

  const IntMatrix& matrix() const {
    if (!matrix_) throw InvalidSequence(format_sequence(sequence_) + " has no edge matrix");
    return *matrix_;
  }

  LatticeVector flattened() const { return flatten_edges(matrix()); }

  /// Relabels U-vertices by `image` (image[i] is the new index of u_i,
  /// image[0] unused) into K_{3,new_m}.
  K3mCircuit relabeled(unsigned new_m, const std::vector<unsigned>& image) const {
    VertexSequence seq = sequence_;
    for (auto& v : seq) {
      if (!v.is_a_side()) v.index = image.at(v.index);
    }
    return valid_ ? from_sequence(new_m, std::move(seq)) : unchecked(new_m, std::move(seq));
  }

  std::string to_string() const { return format_sequence(sequence_); }

  /// Circuits are equal when their edge functions are.
  friend bool operator==(const K3mCircuit& x, const K3mCircuit& y) {
    if (x.m_ != y.m_) return false;
    if (x.matrix_ && y.matrix_) return *x.matrix_ == *y.matrix_;
    return x.sequence_ == y.sequence_;
  }

 private:
  static VertexSequence canonical_rotation(const VertexSequence& seq) {
    const std::size_t l = seq.size();
    std::optional<VertexSequence> best;
    for (std::size_t s = 0; s < l; ++s) {
      if (!seq[s].is_a_side()) continue;
      // Forward from s uses edge s; backward uses edge s-1. Edge i carries +1
      // when i is even.
      const bool forward = s % 2 == 0;
      VertexSequence cand(l);
      for (std::size_t i = 0; i < l; ++i) {
        cand[i] = forward ? seq[(s + i) % l] : seq[(s + l - i) % l];
      }
      if (!best || cand < *best) best = std::move(cand);
    }
    return *best;
  }

  unsigned m_ = 0;
  VertexSequence sequence_;
  std::optional<IntMatrix> matrix_;
  bool valid_ = false;
};

inline K3mCircuit circuit_from_sequence(unsigned m, VertexSequence seq) {
  return K3mCircuit::from_sequence(m, std::move(seq));
}

inline K3mCircuit circuit_from_names(unsigned m, const std::vector<std::string>& names) {
  return K3mCircuit::from_sequence(m, parse_sequence(names));
}

}  // namespace graver::kthree
