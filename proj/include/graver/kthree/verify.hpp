#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graver/bigint.hpp"
#include "graver/exact_linalg.hpp"
#include "graver/kthree/certificate.hpp"
#include "graver/kthree/circuit.hpp"
#include "graver/matrix.hpp"
#include "graver/nfold.hpp"

namespace graver::kthree {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIP";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

namespace checks {
inline constexpr const char* circuit_validity = "circuit_validity";
inline constexpr const char* zero_relation = "zero_relation";
inline constexpr const char* positivity = "positivity";
inline constexpr const char* coprimality = "coprimality";
inline constexpr const char* subset_independence = "subset_independence";
inline constexpr const char* bound_arithmetic = "bound_arithmetic";
inline constexpr const char* chaining = "chaining";
}  // namespace checks

class VerificationReport {
 public:
  void add(std::string name, CheckStatus status, std::string detail = {}) {
    results_.push_back({std::move(name), status, std::move(detail)});
  }

  const std::vector<CheckResult>& results() const { return results_; }

  const CheckResult& at(const std::string& name) const {
    for (const auto& r : results_)
      if (r.name == name) return r;
    throw error("no check named " + name);
  }

  bool passed(const std::string& name) const { return at(name).status == CheckStatus::pass; }

  /// Every check that ran passed.
  bool ok() const {
    for (const auto& r : results_)
      if (r.status == CheckStatus::fail) return false;
    return !results_.empty();
  }

  std::vector<std::string> failed_checks() const {
    std::vector<std::string> out;
    for (const auto& r : results_)
      if (r.status == CheckStatus::fail) out.push_back(r.name);
    return out;
  }

 private:
  std::vector<CheckResult> results_;
};

struct VerifyOptions {
  /// Also require the inductive shape: last circuit (a,u_{m-2},b,u_{m-1},c,u_m)
  /// with an odd coefficient.
  bool require_chaining = false;
};

namespace detail {

// Empty string when x is a circuit of (1,1,1)^(m); otherwise the reason.
inline std::string circuit_defect(unsigned m, const K3mCircuit& c) {
  if (c.m() != m) return "declared for m=" + std::to_string(c.m());
  if (auto d = sequence_defect(m, c.sequence())) return *d;
  const IntMatrix& x = c.matrix();
  for (std::size_t r = 0; r < 3; ++r) {
    BigInt row_sum = 0;
    for (std::size_t u = 0; u < m; ++u) {
      if (abs(x(r, u)) > 1) return "entry outside {-1,0,1}";
      row_sum += x(r, u);
    }
    if (row_sum != 0) return "nonzero row sum";
  }
  for (std::size_t u = 0; u < m; ++u) {
    if (x(0, u) + x(1, u) + x(2, u) != 0) return "nonzero column sum";
  }
  // Support-minimal: restricting the incidence matrix to the support leaves
  // a one-dimensional kernel.
  const LatticeVector flat = flatten_edges(x);
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < flat.dimension(); ++j)
    if (flat[j] != 0) support.push_back(j);
  if (support.empty()) return "zero edge function";
  const IntMatrix incidence = nfold_product(IntMatrix::from_rows({{1, 1, 1}}), m);
  for (const auto& v : incidence.multiply(flat.span()))
    if (v != 0) return "not in the kernel of (1,1,1)^(m)";
  const IntMatrix restricted = incidence.select_columns(support);
  if (restricted.cols() - rank(restricted) != 1) return "support is not inclusion-minimal";
  return {};
}

}  // namespace detail

/// Checks a certificate from scratch. Each check is evaluated on its own so a
/// tampered certificate fails only the checks its defect touches. Never
/// throws for a bad certificate and never constructs one.
inline VerificationReport verify_certificate(const Certificate& cert,
                                             const VerifyOptions& options = {}) {
  VerificationReport report;
  const std::size_t k = cert.circuits.size();
  const unsigned m = cert.m;

  // (1) circuits
  {
    std::string detail;
    for (std::size_t i = 0; i < k && detail.empty(); ++i) {
      const std::string d = detail::circuit_defect(m, cert.circuits[i]);
      if (!d.empty()) detail = "circuit " + std::to_string(i + 1) + " " +
                               cert.circuits[i].to_string() + ": " + d;
    }
    if (k == 0) detail = "no circuits";
    report.add(checks::circuit_validity, detail.empty() ? CheckStatus::pass : CheckStatus::fail,
               detail);
  }

  bool matrices = true;
  for (const auto& c : cert.circuits) matrices = matrices && c.has_matrix() && c.m() == m;
  const bool counts_match = cert.coefficients.size() == k;

  // (2) sum h_i x^i = 0
  if (!matrices || !counts_match) {
    report.add(checks::zero_relation, CheckStatus::fail,
               !counts_match ? "coefficient count differs from circuit count"
                             : "some circuit has no edge function");
  } else {
    std::vector<BigInt> sum(3 * static_cast<std::size_t>(m), BigInt(0));
    for (std::size_t i = 0; i < k; ++i) {
      const auto flat = cert.circuits[i].flattened();
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += cert.coefficients[i] * flat[j];
    }
    std::size_t bad = sum.size();
    for (std::size_t j = 0; j < sum.size() && bad == sum.size(); ++j)
      if (sum[j] != 0) bad = j;
    if (bad == sum.size()) {
      report.add(checks::zero_relation, CheckStatus::pass);
    } else {
      const auto edge = std::string("(") + static_cast<char>('a' + bad % 3) + ",u" +
                        std::to_string(bad / 3 + 1) + ")";
      report.add(checks::zero_relation, CheckStatus::fail,
                 "sum is " + to_decimal(sum[bad]) + " on edge " + edge);
    }
  }

  // (3) h_i > 0
  {
    std::string detail;
    for (std::size_t i = 0; i < cert.coefficients.size() && detail.empty(); ++i)
      if (cert.coefficients[i] <= 0)
        detail = "h_" + std::to_string(i + 1) + " = " + to_decimal(cert.coefficients[i]);
    if (cert.coefficients.empty()) detail = "no coefficients";
    report.add(checks::positivity, detail.empty() ? CheckStatus::pass : CheckStatus::fail,
               detail);
  }

  // (4) gcd(h) = 1
  {
    BigInt g = 0;
    for (const auto& h : cert.coefficients) g = gcd(g, h);
    report.add(checks::coprimality, g == 1 ? CheckStatus::pass : CheckStatus::fail,
               g == 1 ? "" : "gcd is " + to_decimal(g));
  }

  // (5) every k-1 of the circuits are linearly independent
  if (!matrices || k == 0) {
    report.add(checks::subset_independence, CheckStatus::fail,
               "some circuit has no edge function");
  } else {
    std::vector<std::vector<BigInt>> flats;
    for (const auto& c : cert.circuits) flats.push_back(c.flattened().entries());
    std::string detail;
    for (std::size_t drop = 0; drop < k && detail.empty(); ++drop) {
      std::vector<std::vector<BigInt>> cols;
      for (std::size_t i = 0; i < k; ++i)
        if (i != drop) cols.push_back(flats[i]);
      const auto r = rank(IntMatrix::from_columns(3 * static_cast<std::size_t>(m), cols));
      if (r != k - 1) {
        detail = "circuits other than " + std::to_string(drop + 1) + " have rank " +
                 std::to_string(r) + " < " + std::to_string(k - 1);
      }
    }
    report.add(checks::subset_independence,
               detail.empty() ? CheckStatus::pass : CheckStatus::fail, detail);
  }

  // (6) claimed bound
  {
    const BigInt s = cert.coefficient_sum();
    report.add(checks::bound_arithmetic,
               s == cert.claimed_bound ? CheckStatus::pass : CheckStatus::fail,
               "sum of coefficients " + to_decimal(s) + ", claimed " +
                   to_decimal(cert.claimed_bound));
  }

  // (7) inductive shape
  if (!options.require_chaining) {
    report.add(checks::chaining, CheckStatus::skipped);
  } else {
    std::string detail;
    if (m < 3 || k == 0 || !counts_match) {
      detail = "certificate too small for the chaining shape";
    } else if (!cert.circuits.back().has_matrix() ||
               !(cert.circuits.back() == chaining_circuit(m))) {
      detail = "last circuit is " + cert.circuits.back().to_string() + ", expected " +
               chaining_circuit(m).to_string();
    } else if (cert.coefficients.back() % 2 == 0) {
      detail = "last coefficient " + to_decimal(cert.coefficients.back()) + " is even";
    }
    report.add(checks::chaining, detail.empty() ? CheckStatus::pass : CheckStatus::fail,
               detail);
  }
  return report;
}

}  // namespace graver::kthree
