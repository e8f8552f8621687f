#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "graver/bigint.hpp"
#include "graver/errors.hpp"
#include "graver/kthree/circuit.hpp"
#include "graver/matrix.hpp"

namespace graver::kthree {

/// Circuits x^1..x^k of K_{3,m} with positive coefficients h_1..h_k such
/// that sum h_i x^i = 0 is a primitive relation. The relation certifies
/// g(m) >= sum h_i = claimed_bound.
struct Certificate {
  unsigned m = 0;
  std::vector<K3mCircuit> circuits;
  std::vector<BigInt> coefficients;
  BigInt claimed_bound = 0;

  std::size_t size() const { return circuits.size(); }

  BigInt coefficient_sum() const {
    BigInt s = 0;
    for (const auto& h : coefficients) s += h;
    return s;
  }
};

/// 17 * 2^(m-3) - 7, the bound certified for K_{3,m}. Throws BadM for m < 4.
inline BigInt bound_formula(unsigned m) {
  if (m < 4) throw BadM("bound formula needs m >= 4, got " + std::to_string(m));
  return BigInt(17) * pow2(m - 3) - 7;
}

/// The circuit (a, u_{m-2}, b, u_{m-1}, c, u_m) that ends every inductive
/// certificate.
inline K3mCircuit chaining_circuit(unsigned m) {
  if (m < 3) throw BadM("chaining circuit needs m >= 3");
  return K3mCircuit::from_sequence(
      m, {Vertex::a(), Vertex::u(m - 2), Vertex::b(), Vertex::u(m - 1), Vertex::c(),
          Vertex::u(m)});
}

/// Seven circuits of K_{3,4} with x^1 + 2x^2 + 3x^3 + 3x^4 + 5x^5 + 6x^6 + 7x^7 = 0.
inline Certificate base_certificate_m4() {
  using V = Vertex;
  const std::vector<VertexSequence> seqs = {
      {V::a(), V::u(4), V::c(), V::u(2), V::b(), V::u(3)},
      {V::a(), V::u(2), V::c(), V::u(3), V::b(), V::u(1)},
      {V::a(), V::u(4), V::b(), V::u(1), V::c(), V::u(2)},
      {V::a(), V::u(4), V::b(), V::u(2), V::c(), V::u(1)},
      {V::a(), V::u(1), V::b(), V::u(2), V::c(), V::u(3)},
      {V::a(), V::u(3), V::b(), V::u(4), V::c(), V::u(2)},
      {V::a(), V::u(2), V::b(), V::u(3), V::c(), V::u(4)},
  };
  Certificate cert;
  cert.m = 4;
  for (const auto& s : seqs) cert.circuits.push_back(K3mCircuit::from_sequence(4, s));
  for (int h : {1, 2, 3, 3, 5, 6, 7}) cert.coefficients.emplace_back(h);
  cert.claimed_bound = cert.coefficient_sum();
  return cert;
}

/// Applies a relabeling of u_1..u_m to every circuit; coefficients unchanged.
inline Certificate relabel_u(const Certificate& cert, const std::vector<unsigned>& image) {
  Certificate out = cert;
  for (auto& c : out.circuits) c = c.relabeled(cert.m, image);
  return out;
}

/// A lift step together with the three replacement circuits before the
/// closing relabeling, for checking y^k + y^{k+1} + y^{k+2} = 2 x^k.
struct LiftTrace {
  Certificate result;
  K3mCircuit replaced;                 // x^k, embedded in K_{3,m+1}
  std::array<K3mCircuit, 3> replacements;  // y^k, y^{k+1}, y^{k+2}
};

namespace detail {

// Cheap structural checks; full primitivity is left to verify_certificate.
inline void check_liftable(const Certificate& cert) {
  const std::size_t k = cert.size();
  if (cert.m < 4) throw InvalidCertificate("lift needs m >= 4");
  if (k == 0 || cert.coefficients.size() != k) {
    throw InvalidCertificate("circuit and coefficient counts differ or are zero");
  }
  LatticeVector zero(std::vector<BigInt>(3 * cert.m, BigInt(0)));
  std::vector<BigInt> sum(3 * cert.m, BigInt(0));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = cert.circuits[i];
    if (c.m() != cert.m || !c.is_valid_cycle()) {
      throw InvalidCertificate("circuit " + std::to_string(i + 1) + " is not a cycle of K_{3," +
                               std::to_string(cert.m) + "}");
    }
    if (cert.coefficients[i] <= 0) {
      throw InvalidCertificate("coefficient " + std::to_string(i + 1) + " is not positive");
    }
    const auto flat = c.flattened();
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += cert.coefficients[i] * flat[j];
  }
  if (LatticeVector(sum) != zero) throw InvalidCertificate("relation does not sum to zero");
  if (!(cert.circuits.back() == chaining_circuit(cert.m))) {
    throw PreconditionViolated("last circuit is " + cert.circuits.back().to_string() +
                               ", expected " + chaining_circuit(cert.m).to_string());
  }
  if (cert.coefficients.back() % 2 == 0) {
    throw PreconditionViolated("last coefficient is even");
  }
}

}  // namespace detail

/// One induction step from K_{3,m} to K_{3,m+1}.
///
/// x^k = (a,u_{m-2},b,u_{m-1},c,u_m) is replaced by
///   y^k     = (a,u_{m-2},b,u_{m-1},c,u_{m+1})
///   y^{k+1} = (a,u_{m-2},b,u_{m+1},c,u_m)
///   y^{k+2} = (a,u_{m+1},b,u_{m-1},c,u_m)
/// with coefficient h_k each; the other coefficients double. Every circuit is
/// then relabeled by u_{m+1} -> u_{m-1}, u_{m-1} -> u_m, u_m -> u_{m+1}, so
/// the new last circuit is again of the chaining shape.
inline LiftTrace lift_with_trace(const Certificate& cert) {
  detail::check_liftable(cert);
  const unsigned m = cert.m;
  const unsigned n = m + 1;
  const std::size_t k = cert.size();
  using V = Vertex;

  std::vector<unsigned> embed(n + 1);
  for (unsigned i = 0; i <= n; ++i) embed[i] = i;

  std::vector<K3mCircuit> ys;
  ys.reserve(k + 2);
  for (std::size_t i = 0; i + 1 < k; ++i) ys.push_back(cert.circuits[i].relabeled(n, embed));
  const std::array<K3mCircuit, 3> replacements = {
      K3mCircuit::from_sequence(
          n, {V::a(), V::u(m - 2), V::b(), V::u(m - 1), V::c(), V::u(m + 1)}),
      K3mCircuit::from_sequence(
          n, {V::a(), V::u(m - 2), V::b(), V::u(m + 1), V::c(), V::u(m)}),
      K3mCircuit::from_sequence(
          n, {V::a(), V::u(m + 1), V::b(), V::u(m - 1), V::c(), V::u(m)}),
  };
  for (const auto& y : replacements) ys.push_back(y);

  std::vector<unsigned> sigma = embed;
  sigma[m + 1] = m - 1;
  sigma[m - 1] = m;
  sigma[m] = m + 1;

  LiftTrace trace{Certificate{}, cert.circuits.back().relabeled(n, embed), replacements};
  Certificate& out = trace.result;
  out.m = n;
  for (const auto& y : ys) out.circuits.push_back(y.relabeled(n, sigma));
  for (std::size_t i = 0; i + 1 < k; ++i) out.coefficients.push_back(2 * cert.coefficients[i]);
  for (int r = 0; r < 3; ++r) out.coefficients.push_back(cert.coefficients.back());
  out.claimed_bound = out.coefficient_sum();
  return trace;
}

inline Certificate lift(const Certificate& cert) { return lift_with_trace(cert).result; }

/// The base certificate lifted m - 4 times: 2m - 1 circuits, sum 17 * 2^(m-3) - 7.
inline Certificate generate_certificate(unsigned m) {
  if (m < 4) throw BadM("certificates exist for m >= 4, got " + std::to_string(m));
  Certificate cert = base_certificate_m4();
  while (cert.m < m) cert = lift(cert);
  return cert;
}

}  // namespace graver::kthree
