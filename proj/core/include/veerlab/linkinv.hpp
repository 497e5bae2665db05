#pragma once

#include "veerlab/braid.hpp"
#include "veerlab/matrix.hpp"
#include "veerlab/rational.hpp"

namespace veerlab {

// Seifert matrix of the canonical surface of the closed braid: one disk per
// strand, one band per letter; H_1 is spanned by loops through consecutive
// bands in the same column.
struct SeifertData {
  IntMatrix seifert_matrix;
};

SeifertData seifert_data(const BraidWord& b);
long seifert_signature(const BraidWord& b);

// -sum Meyer(g_i, g_{i+1} ... g_k) over the letters' homology images.
long meyer_signature(const BraidWord& b);

struct SignMaslovReport {
  long signature = 0;
  long lk = 0;
  Rational mu;
  Rational rhs;  // -lk + 2 mu
  bool holds = false;
};
SignMaslovReport verify_sign_maslov(const BraidWord& b);

struct EqSignatureReport {
  long sig_ab = 0, sig_a = 0, sig_b = 0, meyer = 0;
  bool holds = false;
};
EqSignatureReport verify_eq_signature(const BraidWord& a, const BraidWord& b);

struct GGReport {
  long signature = 0;
  long lk = 0;
  long phi = 0;
  Rational lhs;  // sign + (2/3) lk
  Rational rhs;  // -(1/3) Phi
  bool holds = false;
  // Same identity with Phi evaluated on the conjugacy class. Signature and lk
  // are class functions while the normal-form Phi is not.
  long phi_class = 0;
  Rational rhs_class;
  bool holds_class = false;
};
// Requires a B_3 word with Anosov image.
GGReport gg_remark_check(const BraidWord& b);

}  // namespace veerlab
