#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "graver/bigint.hpp"
#include "graver/errors.hpp"

namespace graver {

/// Exact integer vector, optionally split into equal blocks of width t.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<BigInt> entries,
                         std::optional<std::size_t> block_width = std::nullopt)
      : entries_(std::move(entries)) {
    set_block_width(block_width);
  }
  LatticeVector(std::initializer_list<long long> entries)
      : entries_(entries.begin(), entries.end()) {}

  std::size_t dimension() const { return entries_.size(); }
  const std::vector<BigInt>& entries() const { return entries_; }
  std::span<const BigInt> span() const { return entries_; }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }

  std::optional<std::size_t> block_width() const { return block_width_; }

  /// Returns a copy carrying block width t; t must be positive and divide the dimension.
  LatticeVector with_block_width(std::size_t t) const {
    LatticeVector copy = *this;
    copy.set_block_width(t);
    return copy;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const BigInt& v) { return v == 0; });
  }

  BigInt l1_norm() const {
    BigInt s = 0;
    for (const auto& v : entries_) s += abs(v);
    return s;
  }

  BigInt linf_norm() const {
    BigInt s = 0;
    for (const auto& v : entries_) s = std::max(s, abs(v));
    return s;
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : entries_) g = gcd(g, v);
    return g;
  }

  LatticeVector operator-() const {
    LatticeVector r = *this;
    for (auto& v : r.entries_) v = -v;
    return r;
  }

  // Equality and order ignore the block width; order is lexicographic on entries.
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const LatticeVector& a,
                                          const LatticeVector& b) {
    const std::size_t n = std::min(a.dimension(), b.dimension());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.entries_[i] < b.entries_[i]) return std::strong_ordering::less;
      if (b.entries_[i] < a.entries_[i]) return std::strong_ordering::greater;
    }
    return a.dimension() <=> b.dimension();
  }

 private:
  void set_block_width(std::optional<std::size_t> t) {
    if (t && (*t == 0 || entries_.size() % *t != 0)) {
      throw DimensionMismatch("block width must be positive and divide the dimension");
    }
    block_width_ = t;
  }

  std::vector<BigInt> entries_;
  std::optional<std::size_t> block_width_;
};

/// u ⊑ v: componentwise |u_i| <= |v_i| and u_i v_i >= 0.
inline bool conforms(const LatticeVector& u, const LatticeVector& v) {
  if (u.dimension() != v.dimension()) {
    throw DimensionMismatch("conforms: vectors differ in dimension");
  }
  for (std::size_t i = 0; i < u.dimension(); ++i) {
    const int su = sign(u[i]);
    if (su == 0) continue;
    if (su * sign(v[i]) <= 0) return false;
    if (abs(u[i]) > abs(v[i])) return false;
  }
  return true;
}

/// Number of nonzero blocks of x under its block width.
inline std::size_t type_of(const LatticeVector& x) {
  const auto t = x.block_width();
  if (!t) throw BlockWidthUnset("type_of requires a block width");
  std::size_t count = 0;
  for (std::size_t start = 0; start < x.dimension(); start += *t) {
    for (std::size_t i = start; i < start + *t; ++i) {
      if (x[i] != 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

/// Scales v so its entries are coprime and its first nonzero entry is positive.
inline LatticeVector primitive_normalized(const LatticeVector& v) {
  const BigInt g = v.content();
  if (g == 0) return v;
  std::vector<BigInt> e = v.entries();
  BigInt divisor = g;
  for (const auto& x : e) {
    if (x != 0) {
      if (x < 0) divisor = -divisor;
      break;
    }
  }
  for (auto& x : e) x /= divisor;
  return LatticeVector(std::move(e), v.block_width());
}

}  // namespace graver
