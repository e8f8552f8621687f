#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "graver/exact_linalg.hpp"
#include "graver/lattice_vector.hpp"
#include "graver/matrix.hpp"

namespace graver {

namespace detail {

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// All circuits of A (both signs), in lexicographic order.
///
/// A column subset S supports a circuit exactly when the restriction A_S has
/// a one-dimensional kernel whose generator is nonzero on every column of S.
/// Supports never exceed rank(A) + 1 columns, so only those subsets are tried.
inline std::vector<LatticeVector> circuits(const IntMatrix& a) {
  const std::size_t n = a.cols();
  const std::size_t max_size = std::min(n, rank(a) + 1);
  std::vector<LatticeVector> out;
  for (std::size_t k = 1; k <= max_size; ++k) {
    detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
      const auto kernel = integer_kernel_basis(a.select_columns(cols));
      if (kernel.size() != 1) return;
      const auto& v = kernel.front();
      for (std::size_t i = 0; i < k; ++i) {
        if (v[i] == 0) return;
      }
      std::vector<BigInt> full(n, BigInt(0));
      for (std::size_t i = 0; i < k; ++i) full[cols[i]] = v[i];
      LatticeVector c = primitive_normalized(LatticeVector(std::move(full)));
      out.push_back(-c);
      out.push_back(std::move(c));
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace graver
