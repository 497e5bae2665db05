#pragma once

#include <vector>

#include "veerlab/braid.hpp"
#include "veerlab/matrix.hpp"
#include "veerlab/polynomial.hpp"
#include "veerlab/symplectic.hpp"

namespace veerlab {

// Action of B_{2n+1} on the first homology of the double branched cover,
// in the basis of curves C_1..C_{2n} with omega(C_i, C_j) = d_{i+1,j} - d_{i-1,j}.
struct HomologyRep {
  int strands = 3;
  IntMatrix form;
  std::vector<IntMatrix> generator_images;  // index i-1 holds sigma_i

  std::size_t dim() const { return form.rows(); }
  SymplecticSpace space() const { return SymplecticSpace(to_rational(form)); }
};

HomologyRep homology_rep(int strands);  // strands must be odd
IntMatrix intersection_form(int strands);

// Even strand counts are embedded first.
IntMatrix burau_matrix(const BraidWord& b);
QMatrix burau_matrix_q(const BraidWord& b);

// Path from the identity to the image of one letter: A1(t), A2(t), or the
// reversed shear, using -t for inverse letters.
PolyMatrix generator_path(int strands, int letter);

struct SymplecticLift {
  BraidWord word{3};
  std::vector<PolyMatrix> segments;  // prefix product times generator path
};
SymplecticLift lift(const BraidWord& b);

BraidWord embed_even(const BraidWord& b);
// Embeds even words and leaves odd ones alone.
BraidWord odd_strands(const BraidWord& b);

struct StandardizedRep {
  QMatrix transform;                      // T with T^T Omega T = [[0, I], [-I, 0]]
  std::vector<QMatrix> generator_images;  // T^-1 g T
};
StandardizedRep standardize_form(const HomologyRep& rep);
QMatrix standardizing_transform(const QMatrix& omega);

// mu(Graph(lift(b)), Graph(id)) in the doubled homology space.
Rational lift_maslov(const BraidWord& b);

}  // namespace veerlab
