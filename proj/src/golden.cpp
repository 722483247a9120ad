#include "orsolv/golden.hpp"

#include <sstream>

#include "orsolv/errors.hpp"
#include "orsolv/presentation.hpp"

namespace orsolv {

namespace {

std::optional<long long> witness_param(const Certificate& c) {
  switch (c.kind) {
    case CertificateKind::CommutatorPowerFamily:
      return std::get<PowerFamilyWitness>(c.witness).n;
    case CertificateKind::BasicTower:
      return std::get<TowerWitness>(c.witness).k;
    case CertificateKind::SurfaceRelator:
      return std::get<SurfaceWitness>(c.witness).genus;
    case CertificateKind::MagnusFreeByCyclic:
      return std::get<MagnusWitness>(c.witness).verdict.span;
    default:
      return std::nullopt;
  }
}

}  // namespace

const std::vector<GoldenCase>& golden_corpus() {
  static const std::vector<GoldenCase> corpus = {
      {"positive-abab", "a,b ; abab", Status::CertifiedResiduallySolvable,
       {{CertificateKind::PositiveRelator, std::nullopt}},
       CertificateKind::PositiveRelator},

      {"power-family-1", "a,b ; [a,[a,b]]", Status::CertifiedResiduallySolvable,
       {{CertificateKind::CommutatorPowerFamily, 1},
        {CertificateKind::BasicTower, 2},
        {CertificateKind::MagnusFreeByCyclic, 3}},
       CertificateKind::BasicTower},

      {"power-family-2", "a,b ; [a,[a,b]^2]", Status::CertifiedResiduallySolvable,
       {{CertificateKind::CommutatorPowerFamily, 2}},
       CertificateKind::CommutatorPowerFamily},

      {"power-family-3", "a,b ; [a,[a,b]^3]", Status::CertifiedResiduallySolvable,
       {{CertificateKind::CommutatorPowerFamily, 3}},
       CertificateKind::CommutatorPowerFamily},

      {"tower-1", "x,y ; [x,y]", Status::CertifiedResiduallySolvable,
       {{CertificateKind::BasicTower, 1},
        {CertificateKind::PositiveQuotientForm, std::nullopt},
        {CertificateKind::CommutatorOfPositiveWords, std::nullopt},
        {CertificateKind::SurfaceRelator, 1},
        {CertificateKind::MagnusFreeByCyclic, 2}},
       CertificateKind::PositiveQuotientForm},

      {"tower-2", "x,y ; [[x,y],y]", Status::CertifiedResiduallySolvable,
       {{CertificateKind::BasicTower, 2}},
       CertificateKind::BasicTower},

      {"tower-3", "x,y ; [[[x,y],y],y]", Status::CertifiedResiduallySolvable,
       {{CertificateKind::BasicTower, 3}},
       CertificateKind::BasicTower},

      {"surface-genus-2", "a,b,c,d ; [a,b][c,d]", Status::CertifiedResiduallySolvable,
       {{CertificateKind::SurfaceRelator, 2},
        {CertificateKind::MagnusFreeByCyclic, 2}},
       CertificateKind::SurfaceRelator},

      {"registry-deep-commutator",
       "a,b ; [a, [a,b] [ ([a,b]^-1 [a,b]^a), ([a,b]^-1 [a,b]^a)^b ] ]",
       Status::KnownNotResiduallySolvable,
       {},
       std::nullopt},

      {"trivial-relator", "a,b ; [a,b]^0", Status::CertifiedResiduallySolvable,
       {{CertificateKind::FreeGroup, std::nullopt}},
       CertificateKind::FreeGroup},

      {"baumslag-solitar-1-2", "a,b ; b^-1 a b a^-2", Status::Unknown, {}, std::nullopt},
  };
  return corpus;
}

GoldenOutcome check_golden_case(const GoldenCase& c) {
  std::ostringstream detail;
  try {
    OneRelatorPresentation p = parse_presentation(c.text);
    Verdict v = classify(p);

    bool ok = true;
    if (v.status != c.expected_status) {
      ok = false;
      detail << "status: expected " << to_string(c.expected_status) << ", got "
             << to_string(v.status) << "; ";
    }

    for (const ExpectedCertificate& e : c.expect_present) {
      bool found = false;
      for (const Certificate& cert : v.certificates) {
        if (cert.kind != e.kind) continue;
        if (e.param && witness_param(cert) != e.param) continue;
        found = true;
        break;
      }
      if (!found) {
        ok = false;
        detail << "missing certificate " << to_string(e.kind);
        if (e.param) detail << "(" << *e.param << ")";
        detail << "; ";
      }
    }

    if (c.expected_primary) {
      if (v.certificates.empty()) {
        ok = false;
        detail << "expected primary " << to_string(*c.expected_primary)
               << " but no certificate was emitted; ";
      } else if (v.primary().kind != *c.expected_primary) {
        ok = false;
        detail << "primary: expected " << to_string(*c.expected_primary) << ", got "
               << to_string(v.primary().kind) << "; ";
      }
    }

    for (const Certificate& cert : v.certificates) {
      if (!verify_certificate(p, cert)) {
        ok = false;
        detail << "certificate " << to_string(cert.kind) << " failed re-verification; ";
      }
    }

    if (ok) detail << "status " << to_string(v.status) << ", " << v.certificates.size()
                   << " certificate(s)";
    return {ok, detail.str()};
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace orsolv
