#pragma once

// Brute-force references for tests and acceptance runs. Nothing here shares
// an elimination or completion path with the engine it is used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "graver/bigint.hpp"
#include "graver/errors.hpp"
#include "graver/exact_linalg.hpp"
#include "graver/lattice_vector.hpp"
#include "graver/matrix.hpp"

namespace graver::oracle {

inline constexpr std::uint64_t kDefaultMaxPoints = 100'000'000;

/// Enumeration guard: GRAVER_MAX_POINTS when set to a positive integer,
/// otherwise 10^8.
inline std::uint64_t max_points_from_env() {
  if (const char* env = std::getenv("GRAVER_MAX_POINTS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxPoints;
}

/// Gauss-Jordan over the rationals. Returns the reduced rows and pivot columns.
struct RationalEchelon {
  std::vector<std::vector<BigRational>> rows;
  std::vector<std::size_t> pivots;
};

inline RationalEchelon rational_rref(const IntMatrix& m) {
  std::vector<std::vector<BigRational>> a(m.rows(), std::vector<BigRational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = BigRational(m(i, j));
  RationalEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const BigRational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const BigRational f = a[i][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

inline std::size_t rational_rank(const IntMatrix& m) { return rational_rref(m).pivots.size(); }

/// Rational kernel basis, one vector per free column (free entry 1).
inline std::vector<RationalVector> rational_kernel(const IntMatrix& m) {
  const auto e = rational_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRational> x(m.cols(), BigRational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = -e.rows[i][f];
    out.emplace_back(std::move(x));
  }
  return out;
}

/// Clears denominators and common factors; sign kept.
inline LatticeVector to_primitive_integers(const RationalVector& q) {
  BigInt l = 1;
  for (const auto& v : q.entries()) {
    const BigInt d = boost::multiprecision::denominator(v);
    l = l / gcd(l, d) * d;
  }
  std::vector<BigInt> x;
  for (const auto& v : q.entries())
    x.push_back(boost::multiprecision::numerator(v) * (l / boost::multiprecision::denominator(v)));
  BigInt g = 0;
  for (const auto& v : x) g = gcd(g, v);
  if (g > 1)
    for (auto& v : x) v /= g;
  return LatticeVector(std::move(x));
}

inline constexpr std::size_t kMaxCircuitOracleColumns = 12;

/// Circuits by trying every column subset: a subset with a one-dimensional
/// rational kernel contributes its primitive generator (both signs); results
/// whose support strictly contains another result's support are dropped.
inline std::vector<LatticeVector> brute_force_circuits(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (n > kMaxCircuitOracleColumns) {
    throw TooLarge("brute_force_circuits: more than " +
                   std::to_string(kMaxCircuitOracleColumns) + " columns");
  }
  std::vector<LatticeVector> found;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1u << j)) cols.push_back(j);
    const auto kernel = rational_kernel(a.select_columns(cols));
    if (kernel.size() != 1) continue;
    const LatticeVector small = to_primitive_integers(kernel.front());
    std::vector<BigInt> full(n, BigInt(0));
    for (std::size_t i = 0; i < cols.size(); ++i) full[cols[i]] = small[i];
    LatticeVector v(std::move(full));
    found.push_back(-v);
    found.push_back(std::move(v));
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  auto support_within = [](const LatticeVector& u, const LatticeVector& v) {
    for (std::size_t i = 0; i < u.dimension(); ++i)
      if (u[i] != 0 && v[i] == 0) return false;
    return true;
  };
  std::vector<LatticeVector> out;
  for (const auto& v : found) {
    bool minimal = true;
    for (const auto& u : found) {
      if (support_within(u, v) && !support_within(v, u)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(v);
  }
  return out;
}

struct BruteForceGraver {
  std::vector<LatticeVector> elements;  // lexicographic order
  /// False when some element has an entry of magnitude `box`, or when the box
  /// visibly misses part of the basis: a circuit lies outside it, or (past
  /// the circuit oracle's column limit) the elements found do not span the
  /// kernel. Elements just outside the box could then be missing.
  bool conclusive = true;
};

/// ⊑-minimal nonzero x with Ax = 0 and |x|_inf <= box, by exhaustive
/// enumeration of the box. Throws TooLarge past `max_points` points.
inline BruteForceGraver brute_force_graver(const IntMatrix& a, unsigned box,
                                           std::uint64_t max_points = max_points_from_env()) {
  if (box < 1) throw error("brute_force_graver: box must be >= 1");
  const std::size_t n = a.cols();
  const std::uint64_t side = 2ull * box + 1;
  std::uint64_t points = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (points > max_points / side) {
      throw TooLarge("brute_force_graver: more than " + std::to_string(max_points) +
                     " points to enumerate");
    }
    points *= side;
  }
  const BigInt cap = BigInt(std::numeric_limits<std::int64_t>::max() / 1024);
  std::vector<std::int64_t> entries;
  for (const auto& v : a.entries()) {
    if (abs(v) * (static_cast<std::int64_t>(box) * static_cast<std::int64_t>(n) + 1) > cap) {
      throw TooLarge("brute_force_graver: matrix entries too large");
    }
    entries.push_back(static_cast<std::int64_t>(v));
  }

  std::vector<std::vector<std::int64_t>> kernel;
  std::vector<std::int64_t> x(n, -static_cast<std::int64_t>(box));
  for (std::uint64_t p = 0; p < points; ++p) {
    bool zero = true;
    for (auto v : x) zero = zero && v == 0;
    bool in_kernel = !zero;
    for (std::size_t i = 0; i < a.rows() && in_kernel; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += entries[i * n + j] * x[j];
      in_kernel = acc == 0;
    }
    if (in_kernel) kernel.push_back(x);
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] < static_cast<std::int64_t>(box)) {
        ++x[j];
        break;
      }
      x[j] = -static_cast<std::int64_t>(box);
    }
  }

  auto l1 = [](const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (auto e : v) s += e < 0 ? -e : e;
    return s;
  };
  std::stable_sort(kernel.begin(), kernel.end(),
                   [&](const auto& u, const auto& v) { return l1(u) < l1(v); });
  auto below = [](const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      if ((u[i] > 0) != (v[i] > 0) || v[i] == 0) return false;
      if ((u[i] < 0 ? -u[i] : u[i]) > (v[i] < 0 ? -v[i] : v[i])) return false;
    }
    return true;
  };
  // Anything strictly below x has smaller ℓ1 norm and was seen first.
  std::vector<std::vector<std::int64_t>> minimal;
  for (const auto& v : kernel) {
    bool dominated = false;
    for (const auto& g : minimal) {
      if (below(g, v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(v);
  }

  BruteForceGraver out;
  for (const auto& v : minimal) {
    for (auto e : v)
      if (e == static_cast<std::int64_t>(box) || e == -static_cast<std::int64_t>(box))
        out.conclusive = false;
    out.elements.emplace_back(std::vector<BigInt>(v.begin(), v.end()));
  }
  std::sort(out.elements.begin(), out.elements.end());

  const BigInt limit = box;
  if (n <= kMaxCircuitOracleColumns) {
    for (const auto& c : brute_force_circuits(a))
      if (c.linf_norm() > limit) out.conclusive = false;
  } else {
    std::vector<std::vector<BigInt>> cols;
    for (const auto& v : out.elements) cols.push_back(v.entries());
    const std::size_t found = cols.empty() ? 0 : rational_rank(IntMatrix::from_columns(n, cols));
    if (found != n - rational_rank(a)) out.conclusive = false;
  }
  return out;
}

}  // namespace graver::oracle
