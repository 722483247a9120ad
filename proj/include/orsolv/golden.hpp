#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orsolv/classifier.hpp"

namespace orsolv {

/* Fixed expectation table for the worked examples the tool must reproduce
 * exactly. param pins the family parameter where one exists: n for
 * CommutatorPowerFamily, k for BasicTower, genus for SurfaceRelator, span
 * for MagnusFreeByCyclic. */
struct ExpectedCertificate {
  CertificateKind kind;
  std::optional<long long> param;
};

struct GoldenCase {
  std::string name;
  std::string text;
  Status expected_status;
  std::vector<ExpectedCertificate> expect_present;
  std::optional<CertificateKind> expected_primary;
};

const std::vector<GoldenCase>& golden_corpus();

struct GoldenOutcome {
  bool ok = false;
  std::string detail;  // expected-vs-actual narrative
};

/* Parses, classifies, re-verifies every emitted certificate, and compares
 * against the case's expectations. */
GoldenOutcome check_golden_case(const GoldenCase& c);

}  // namespace orsolv
