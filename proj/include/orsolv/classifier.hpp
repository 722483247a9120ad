#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orsolv/hall.hpp"
#include "orsolv/magnus.hpp"
#include "orsolv/presentation.hpp"
#include "orsolv/word.hpp"

namespace orsolv {

enum class CertificateKind {
  FreeGroup,
  PositiveRelator,
  PositiveQuotientForm,
  CommutatorOfPositiveWords,
  MagnusFreeByCyclic,
  CommutatorPowerFamily,
  BasicTower,
  SurfaceRelator,
};

std::string to_string(CertificateKind k);
std::optional<CertificateKind> certificate_kind_from_string(std::string_view s);

struct FreeGroupWitness {};

// the cyclic relator, or its inverse, is a positive word
struct PositiveRelatorWitness {
  Word positive_form;
  bool inverted;
};

// cyclic relator splits as u w^-1, u and w positive, every exponent sum zero
struct PositiveQuotientWitness {
  Word u;
  Word w;
};

// relator is [u, w] with u and w positive, up to rotation and inversion
struct PositiveCommutatorWitness {
  Word u;
  Word w;
};

struct MagnusWitness {
  MagnusVerdict verdict;
};

// relator is [a, [a,b]^n], up to renaming, rotation and inversion
struct PowerFamilyWitness {
  int gen_a;
  int gen_b;
  long long n;
};

// relator is [s_k, y] where s_1 = x and s_{j+1} = [s_j, y]
struct TowerWitness {
  int gen_x;
  int gen_y;
  int k;
};

// relator is [a_1,b_1]...[a_g,b_g]; gens lists a_1, b_1, ..., a_g, b_g
struct SurfaceWitness {
  std::vector<int> gens;
  int genus;
};

using Witness = std::variant<FreeGroupWitness, PositiveRelatorWitness, PositiveQuotientWitness,
                             PositiveCommutatorWitness, MagnusWitness, PowerFamilyWitness,
                             TowerWitness, SurfaceWitness>;

struct Certificate {
  CertificateKind kind;
  Witness witness;
  std::string paper_ref;  // citation for the theorem backing the certificate
};

/* The one registered family known to fail residual solvability:
 * relator [a, v] with v = [a,b] [w, w^b] and w = [a,b]^-1 [a,b]^a.
 * The word w survives in the group but lies in every derived-series term. */
struct CounterexampleMatch {
  std::string family;
  int gen_a;
  int gen_b;
};

Word counterexample_relator(int gen_a, int gen_b);

enum class Status {
  CertifiedResiduallySolvable,
  KnownNotResiduallySolvable,
  Unknown,
};

std::string to_string(Status s);

struct Verdict {
  Status status = Status::Unknown;
  std::vector<Certificate> certificates;  // all matching rules, primary first
  std::optional<CounterexampleMatch> counterexample;

  const Certificate& primary() const { return certificates.front(); }
};

/* Runs every sufficiency matcher and the counterexample registry. Certified
 * when at least one matcher fires; the registry alone yields
 * KnownNotResiduallySolvable; otherwise Unknown. A registry hit on a
 * presentation that also carries a certificate is an internal defect and
 * throws. */
Verdict classify(const OneRelatorPresentation& p);

/* Re-derives the claim from the recorded witness alone; false signals an
 * internal defect in the matcher that produced the certificate. */
bool verify_certificate(const OneRelatorPresentation& p, const Certificate& c);

}  // namespace orsolv
