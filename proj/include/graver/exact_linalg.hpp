#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "graver/bigint.hpp"
#include "graver/errors.hpp"
#include "graver/lattice_vector.hpp"
#include "graver/matrix.hpp"

namespace graver {

/// Exact rationals; boost keeps every entry in lowest terms with a positive
/// denominator.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<BigRational> entries)
      : entries_(std::move(entries)) {}

  std::size_t dimension() const { return entries_.size(); }
  const std::vector<BigRational>& entries() const { return entries_; }
  const BigRational& operator[](std::size_t i) const { return entries_[i]; }

  bool is_integral() const {
    for (const auto& q : entries_) {
      if (boost::multiprecision::denominator(q) != 1) return false;
    }
    return true;
  }

  std::vector<BigInt> integer_entries() const {
    std::vector<BigInt> out;
    out.reserve(entries_.size());
    for (const auto& q : entries_) {
      if (boost::multiprecision::denominator(q) != 1) {
        throw error("rational vector has a non-integral entry");
      }
      out.push_back(boost::multiprecision::numerator(q));
    }
    return out;
  }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;

 private:
  std::vector<BigRational> entries_;
};

namespace detail {

inline void divide_out_content(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& v : row) g = gcd(g, v);
  if (g > 1) {
    for (auto& v : row) v /= g;
  }
}

// Integer reduced echelon form: each pivot column has a single nonzero entry
// (its pivot), rows are primitive. Returns pivot columns, one per row kept.
struct IntegerEchelon {
  std::vector<std::vector<BigInt>> rows;
  std::vector<std::size_t> pivots;
};

inline IntegerEchelon integer_reduced_echelon(const IntMatrix& m) {
  IntegerEchelon ech;
  std::vector<std::vector<BigInt>> a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    a.emplace_back(m.row(i).begin(), m.row(i).end());
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const BigInt f = a[i][c];
      const BigInt g = a[r][c];
      for (std::size_t k = 0; k < m.cols(); ++k) {
        a[i][k] = a[i][k] * g - a[r][k] * f;
      }
      divide_out_content(a[i]);
    }
    divide_out_content(a[r]);
    ech.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  ech.rows = std::move(a);
  return ech;
}

}  // namespace detail

/// Rank over the rationals by Bareiss fraction-free elimination.
inline std::size_t rank(const IntMatrix& m) {
  std::vector<BigInt> a = m.entries();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * cols + j]; };
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j)) / prev;
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

/// cols(M) - rank(M) integer vectors spanning the rational kernel of M, one
/// per free column, each with coprime entries.
inline std::vector<LatticeVector> integer_kernel_basis(const IntMatrix& m) {
  const auto ech = detail::integer_reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  BigInt lcm = 1;
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    const BigInt d = abs(ech.rows[i][ech.pivots[i]]);
    lcm = lcm / gcd(lcm, d) * d;
  }

  std::vector<LatticeVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigInt> x(m.cols(), BigInt(0));
    x[f] = lcm;
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
      const auto p = ech.pivots[i];
      x[p] = -ech.rows[i][f] * lcm / ech.rows[i][p];
    }
    detail::divide_out_content(x);
    basis.emplace_back(std::move(x));
  }
  return basis;
}

/// A basis of the integer lattice {x in Z^n : Mx = 0}, from unimodular column
/// operations (M U = [H | 0]). Unlike integer_kernel_basis, its integer span
/// is the whole kernel lattice, not just a full-rank sublattice of it.
inline std::vector<LatticeVector> kernel_lattice_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(m.rows()));
  std::vector<std::vector<BigInt>> u(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) a[j][i] = m(i, j);
    u[j][j] = 1;
  }
  // Combine columns j, k: (col_j, col_k) <- (x col_j + y col_k, q_k col_j - q_j col_k)
  auto combine = [](std::vector<BigInt>& cj, std::vector<BigInt>& ck, const BigInt& x,
                    const BigInt& y, const BigInt& p, const BigInt& q) {
    for (std::size_t t = 0; t < cj.size(); ++t) {
      BigInt nj = x * cj[t] + y * ck[t];
      BigInt nk = p * cj[t] + q * ck[t];
      cj[t] = std::move(nj);
      ck[t] = std::move(nk);
    }
  };

  std::size_t c = 0;
  for (std::size_t i = 0; i < m.rows() && c < n; ++i) {
    for (std::size_t k = c + 1; k < n; ++k) {
      if (a[k][i] == 0) continue;
      if (a[c][i] == 0) {
        std::swap(a[c], a[k]);
        std::swap(u[c], u[k]);
        continue;
      }
      // Extended Euclid on (a[c][i], a[k][i]).
      BigInt r0 = a[c][i], r1 = a[k][i], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
      while (r1 != 0) {
        const BigInt q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
      }
      const BigInt g = r0;
      const BigInt qc = a[c][i] / g;
      const BigInt qk = a[k][i] / g;
      // [[s0, -qk], [t0, qc]] has determinant (s0*qc + t0*qk) = 1.
      combine(a[c], a[k], s0, t0, -qk, qc);
      combine(u[c], u[k], s0, t0, -qk, qc);
    }
    if (a[c][i] != 0) ++c;
  }

  std::vector<LatticeVector> basis;
  for (std::size_t j = c; j < n; ++j) basis.emplace_back(std::move(u[j]));
  return basis;
}

/// The unique (up to scale) dependency among `vectors`, as a coprime integer
/// coefficient vector whose first nonzero entry is positive. Returns nullopt
/// when the vectors are independent; throws AmbiguousRelation when the
/// dependency space has dimension two or more.
inline std::optional<RationalVector> relation_coefficients(
    const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) return std::nullopt;
  const std::size_t dim = vectors.front().dimension();
  std::vector<std::vector<BigInt>> columns;
  columns.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.dimension() != dim) {
      throw DimensionMismatch("relation_coefficients: vectors differ in dimension");
    }
    columns.push_back(v.entries());
  }
  const auto kernel = integer_kernel_basis(IntMatrix::from_columns(dim, columns));
  if (kernel.empty()) return std::nullopt;
  if (kernel.size() > 1) {
    throw AmbiguousRelation("dependency space has dimension " +
                            std::to_string(kernel.size()));
  }
  const auto h = primitive_normalized(kernel.front());
  std::vector<BigRational> q(h.entries().begin(), h.entries().end());
  return RationalVector(std::move(q));
}

}  // namespace graver
