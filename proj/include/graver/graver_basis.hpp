#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "graver/bigint.hpp"
#include "graver/detail/completion.hpp"
#include "graver/errors.hpp"
#include "graver/exact_linalg.hpp"
#include "graver/lattice_vector.hpp"
#include "graver/matrix.hpp"

namespace graver {

/// The ⊑-minimal nonzero integer kernel vectors of a matrix. Elements are
/// kept in canonical (lexicographic) order and the set is closed under
/// negation.
class GraverBasis {
 public:
  GraverBasis() = default;
  GraverBasis(IntMatrix matrix, std::vector<LatticeVector> elements)
      : matrix_(std::move(matrix)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  const IntMatrix& matrix() const& { return matrix_; }
  IntMatrix matrix() && { return std::move(matrix_); }
  const std::vector<LatticeVector>& elements() const& { return elements_; }
  std::vector<LatticeVector> elements() && { return std::move(elements_); }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool contains(const LatticeVector& v) const {
    return std::binary_search(elements_.begin(), elements_.end(), v);
  }

  /// One element per ± pair: those whose first nonzero entry is positive.
  std::vector<LatticeVector> sign_representatives() const {
    std::vector<LatticeVector> out;
    for (const auto& e : elements_) {
      for (const auto& x : e.entries()) {
        if (x == 0) continue;
        if (x > 0) out.push_back(e);
        break;
      }
    }
    return out;
  }

 private:
  IntMatrix matrix_;
  std::vector<LatticeVector> elements_;
};

namespace detail {

inline bool fits_int64(const std::vector<LatticeVector>& vs) {
  // Leave headroom so the first pair sums cannot overflow.
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4);
  for (const auto& v : vs)
    for (const auto& x : v.entries())
      if (abs(x) > limit) return false;
  return true;
}

template <class Scalar, std::size_t W>
std::vector<LatticeVector> complete_as(std::size_t dim,
                                       const std::vector<LatticeVector>& seeds) {
  std::vector<std::vector<Scalar>> gens;
  gens.reserve(seeds.size());
  for (const auto& s : seeds) {
    std::vector<Scalar> v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = static_cast<Scalar>(s[k]);
    gens.push_back(std::move(v));
  }
  Completion<Scalar, W> engine(dim);
  engine.run(gens);
  std::vector<LatticeVector> out;
  for (const auto& v : engine.minimal_elements()) {
    std::vector<BigInt> e(v.begin(), v.end());
    LatticeVector x(std::move(e));
    out.push_back(-x);
    out.push_back(std::move(x));
  }
  return out;
}

template <std::size_t W>
std::vector<LatticeVector> complete(std::size_t dim,
                                    const std::vector<LatticeVector>& seeds) {
  if (fits_int64(seeds)) {
    try {
      return complete_as<std::int64_t, W>(dim, seeds);
    } catch (const arithmetic_overflow&) {
      // fall through to arbitrary precision
    }
  }
  return complete_as<BigInt, W>(dim, seeds);
}

}  // namespace detail

/// Largest column count graver_basis accepts.
inline constexpr std::size_t kMaxGraverColumns = 256;

/// Graver basis by completion: seeds are the rational kernel basis together
/// with a lattice basis of the integer kernel (the former alone may only
/// span a sublattice).
inline GraverBasis graver_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (n > kMaxGraverColumns) {
    throw TooLarge("graver_basis supports at most " +
                   std::to_string(kMaxGraverColumns) + " columns");
  }
  std::vector<LatticeVector> seeds = integer_kernel_basis(a);
  for (auto& v : kernel_lattice_basis(a)) seeds.push_back(std::move(v));
  if (seeds.empty()) return GraverBasis(a, {});

  std::vector<LatticeVector> elements =
      n <= 64 ? detail::complete<1>(n, seeds) : detail::complete<4>(n, seeds);
  return GraverBasis(a, std::move(elements));
}

}  // namespace graver
