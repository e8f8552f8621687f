#pragma once

#include <algorithm>
#include <vector>

#include "graver/bigint.hpp"
#include "graver/graver_basis.hpp"
#include "graver/matrix.hpp"

namespace graver {

inline BigInt max_l1_norm(const GraverBasis& g) {
  BigInt best = 0;
  for (const auto& e : g.elements()) best = std::max(best, e.l1_norm());
  return best;
}

/// The matrix whose columns are all Graver elements of A, in canonical order.
inline IntMatrix graver_column_matrix(const GraverBasis& g) {
  std::vector<std::vector<BigInt>> cols;
  for (const auto& e : g.elements()) cols.push_back(e.entries());
  return IntMatrix::from_columns(g.matrix().cols(), cols);
}

/// Same, keeping one column per ± pair.
inline IntMatrix graver_representative_matrix(const GraverBasis& g) {
  std::vector<std::vector<BigInt>> cols;
  for (const auto& e : g.sign_representatives()) cols.push_back(e.entries());
  return IntMatrix::from_columns(g.matrix().cols(), cols);
}

/// max ℓ1 over the Graver basis of the sign-closed matrix [R, -R], computed
/// from R alone.
///
/// Graver elements of [R, -R] are the pairs ±(e_i, e_i) (ℓ1 norm 2) and, for
/// each z in the Graver basis of R, the splittings (p, q) with p - q = z and
/// p_i q_i <= 0, all of ℓ1 norm |z|_1. So the maximum is
/// max(2, max |z|_1) when R has a column, and 0 otherwise.
inline BigInt complexity_from_sign_representatives(const IntMatrix& reps) {
  if (reps.cols() == 0) return 0;
  return std::max(BigInt(2), max_l1_norm(graver_basis(reps)));
}

/// g(A) = max ℓ1 norm over the Graver basis of the matrix whose columns are
/// the Graver elements of A; 0 when A has no Graver elements.
inline BigInt graver_complexity(const IntMatrix& a) {
  const GraverBasis g = graver_basis(a);
  if (g.empty()) return 0;
  return complexity_from_sign_representatives(graver_representative_matrix(g));
}

/// g(A) computed on the full sign-closed column matrix. Exponentially more
/// expensive than graver_complexity; kept as a cross-check for small A.
inline BigInt graver_complexity_full(const IntMatrix& a) {
  const GraverBasis g = graver_basis(a);
  if (g.empty()) return 0;
  return max_l1_norm(graver_basis(graver_column_matrix(g)));
}

}  // namespace graver
