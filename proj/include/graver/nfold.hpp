#pragma once

#include <cstddef>

#include "graver/errors.hpp"
#include "graver/matrix.hpp"

namespace graver {

/// A^(n) for an s x t matrix A: a strip of n identity blocks I_t on top of
/// n block-diagonal copies of A. The result is (t + n s) x (n t).
template <class T>
basic_matrix<T> nfold_product(const basic_matrix<T>& a, std::size_t n) {
  if (n == 0) throw error("nfold_product requires n >= 1");
  const std::size_t s = a.rows();
  const std::size_t t = a.cols();
  basic_matrix<T> out(t + n * s, n * t);
  for (std::size_t block = 0; block < n; ++block) {
    const std::size_t col0 = block * t;
    for (std::size_t k = 0; k < t; ++k) out(k, col0 + k) = 1;
    const std::size_t row0 = t + block * s;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < t; ++j) out(row0 + i, col0 + j) = a(i, j);
  }
  return out;
}

}  // namespace graver
