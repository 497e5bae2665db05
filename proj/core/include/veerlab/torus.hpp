#pragma once

#include <optional>
#include <vector>

#include "veerlab/braid.hpp"
#include "veerlab/farey.hpp"
#include "veerlab/modular.hpp"
#include "veerlab/verdict.hpp"

namespace veerlab {

// b = (sigma1 sigma2 sigma1)^k w, with w over {sigma1^-1, sigma2} in cases
// 1 and 2, and over {sigma1, sigma2^-1} in cases 3 and 4.
struct TorusDecomposition {
  long k = 0;
  BraidWord w{3};
  int case_tag = 1;
};

TorusDecomposition decompose(const BraidWord& b);
Rational rot(const BraidWord& b);
// Phi of the PSL(2,Z) image of a B_3 word.
long phi(const BraidWord& b);
bool verify_theorem_lk(const BraidWord& b);

Verdict right_veering(const BraidWord& b);

// Product of conjugates g sigma_i g^-1, in order.
struct QpFactor {
  BraidWord conjugator;
  int generator = 1;
};
using QpWitness = std::vector<QpFactor>;
BraidWord expand(const QpWitness& witness, int strands);
std::string to_string(const QpWitness& witness);
// "g1 | i1 ; g2 | i2 ; ..." where each g is a braid word.
QpWitness parse_witness(const std::string& text, int strands);

Verdict quasipositive_verdict(const BraidWord& b, const std::optional<QpWitness>& witness = std::nullopt);
// Recomputes the decisive numbers of a verdict through independent routes.
bool verify_certificate(const BraidWord& b, const Verdict& v, const std::optional<QpWitness>& witness = std::nullopt);

struct DeltaTriple {
  long dlk = 0;
  Rational drot;
  long dphi = 0;
  friend bool operator==(const DeltaTriple& x, const DeltaTriple& y) {
    return x.dlk == y.dlk && x.drot == y.drot && x.dphi == y.dphi;
  }
};
// Changes in (lk, rot, Phi) from bprime to twist * bprime.
DeltaTriple dehn_twist_delta(const BraidWord& bprime, const BraidWord& twist);
bool is_positive_twist(const BraidWord& twist);

struct PsiRow {
  long j = 0;
  long phi = 0;
  Rational rot;
  bool fires = false;
  bool expected = false;
};
struct PsiReport {
  long m = 0;
  long psi = 0;
  std::vector<PsiRow> rows;
  bool consistent = true;
};
long psi_bound(long m);
PsiReport family_psi_check(long m);

}  // namespace veerlab
