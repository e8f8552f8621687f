#include <gtest/gtest.h>

#include "graver/kthree/certificate.hpp"
#include "graver/kthree/verify.hpp"

namespace graver::kthree {
namespace {

std::vector<std::string> failed(const Certificate& c, VerifyOptions o = {}) {
  return verify_certificate(c, o).failed_checks();
}

using Names = std::vector<std::string>;

TEST(Verify, BaseCertificatePasses) {
  const auto report = verify_certificate(base_certificate_m4(), {true});
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.results().size(), 7u);
  for (const auto& r : report.results()) EXPECT_EQ(r.status, CheckStatus::pass) << r.name;
}

TEST(Verify, ChainingSkippedUnlessRequested) {
  const auto report = verify_certificate(base_certificate_m4());
  EXPECT_EQ(report.at(checks::chaining).status, CheckStatus::skipped);
  EXPECT_TRUE(report.ok());
}

TEST(Verify, PerturbedCoefficientFailsOnlyRelation) {
  auto cert = base_certificate_m4();
  cert.coefficients[0] = 2;
  cert.claimed_bound = cert.coefficient_sum();
  EXPECT_EQ(failed(cert, {true}), Names{checks::zero_relation});
}

TEST(Verify, DoubledCoefficientsFailOnlyCoprimality) {
  auto cert = base_certificate_m4();
  for (auto& h : cert.coefficients) h *= 2;
  cert.claimed_bound = cert.coefficient_sum();
  EXPECT_EQ(failed(cert), Names{checks::coprimality});
  // The last coefficient is now even too.
  EXPECT_EQ(failed(cert, {true}), (Names{checks::coprimality, checks::chaining}));
}

TEST(Verify, BrokenCircuitFailsOnlyCircuitValidity) {
  auto cert = base_certificate_m4();
  // Same edge function as x^1, but the walk revisits a and u1.
  cert.circuits[0] = K3mCircuit::unchecked(
      4, parse_sequence({"a", "u4", "c", "u2", "b", "u3", "a", "u1", "a", "u1"}));
  EXPECT_EQ(failed(cert, {true}), Names{checks::circuit_validity});
}

TEST(Verify, UnusableCircuitFailsDependentChecks) {
  auto cert = base_certificate_m4();
  cert.circuits[2] = K3mCircuit::unchecked(4, parse_sequence({"a", "u1", "b"}));
  EXPECT_EQ(failed(cert),
            (Names{checks::circuit_validity, checks::zero_relation, checks::subset_independence}));
}

TEST(Verify, WrongClaimedBound) {
  auto cert = base_certificate_m4();
  cert.claimed_bound = 28;
  EXPECT_EQ(failed(cert, {true}), Names{checks::bound_arithmetic});
}

TEST(Verify, NonPositiveCoefficient) {
  auto cert = base_certificate_m4();
  cert.coefficients[3] = 0;
  cert.claimed_bound = cert.coefficient_sum();
  const auto f = failed(cert);
  EXPECT_NE(std::find(f.begin(), f.end(), checks::positivity), f.end());
}

TEST(Verify, DependentSubsetFailsIndependence) {
  // x1 + (-x1) + x3 + (-x3) = 0 holds, but {x1, -x1, x3} is dependent.
  Certificate cert;
  cert.m = 3;
  cert.circuits = {
      K3mCircuit::from_sequence(3, parse_sequence({"a", "u1", "b", "u2"})),
      K3mCircuit::from_sequence(3, parse_sequence({"b", "u1", "a", "u2"})),
      K3mCircuit::from_sequence(3, parse_sequence({"a", "u2", "c", "u3"})),
      K3mCircuit::from_sequence(3, parse_sequence({"c", "u2", "a", "u3"})),
  };
  cert.coefficients = {1, 1, 1, 1};
  cert.claimed_bound = 4;
  EXPECT_EQ(failed(cert), Names{checks::subset_independence});
}

TEST(Verify, TwoOppositeCircuitsArePrimitive) {
  Certificate cert;
  cert.m = 2;
  cert.circuits = {K3mCircuit::from_sequence(2, parse_sequence({"a", "u1", "b", "u2"})),
                   K3mCircuit::from_sequence(2, parse_sequence({"b", "u1", "a", "u2"}))};
  cert.coefficients = {1, 1};
  cert.claimed_bound = 2;
  EXPECT_TRUE(verify_certificate(cert).ok());
}

TEST(Verify, CountMismatchAndEmpty) {
  auto cert = base_certificate_m4();
  cert.coefficients.pop_back();
  cert.claimed_bound = cert.coefficient_sum();
  const auto f = failed(cert);
  EXPECT_NE(std::find(f.begin(), f.end(), checks::zero_relation), f.end());
  EXPECT_FALSE(verify_certificate(Certificate{}).ok());
}

TEST(Verify, CircuitFromAnotherM) {
  auto cert = base_certificate_m4();
  cert.circuits[0] = cert.circuits[0].relabeled(5, {0, 1, 2, 3, 4});
  EXPECT_FALSE(verify_certificate(cert).ok());
  EXPECT_FALSE(verify_certificate(cert).passed(checks::circuit_validity));
}

TEST(Verify, GeneratedCertificatesPassWithChaining) {
  for (unsigned m = 4; m <= 10; ++m) {
    EXPECT_TRUE(verify_certificate(generate_certificate(m), {true}).ok()) << m;
  }
}

}  // namespace
}  // namespace graver::kthree
