#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "veerlab/matrix.hpp"
#include "veerlab/polynomial.hpp"
#include "veerlab/rational.hpp"

namespace veerlab {

// A Lagrangian is not transverse to the complement of the requested chart.
class ChartMiss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// R^{2n} with a nondegenerate skew form.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(QMatrix form);  // throws InputError if not skew or degenerate
  static SymplecticSpace standard(std::size_t n);  // [[0, I], [-I, 0]]
  // (R^{2n} + R^{2n}, form + (-form)), the home of graphs.
  SymplecticSpace doubled() const;

  std::size_t dim() const { return form_.rows(); }
  std::size_t half_dim() const { return form_.rows() / 2; }
  const QMatrix& form() const { return form_; }
  Rational omega(const QMatrix& u, const QMatrix& v) const;  // column vectors
  bool is_lagrangian(const QMatrix& basis) const;
  bool is_symplectic(const QMatrix& g) const;

 private:
  QMatrix form_;
};

// Basis (2n x n, full column rank, isotropic) of a Lagrangian subspace.
struct LagrangianFrame {
  QMatrix basis;
  LagrangianFrame() = default;
  LagrangianFrame(const SymplecticSpace& space, QMatrix b);  // validates
  // Same subspace, compared by rank.
  bool same_subspace(const LagrangianFrame& o) const;
  bool transverse_to(const LagrangianFrame& o) const;
};

// Piecewise polynomial path; each segment is a 2n x n matrix in t over [0, 1],
// and consecutive segments meet.
struct LagrangianPath {
  std::vector<PolyMatrix> segments;

  LagrangianFrame start(const SymplecticSpace& space) const;
  LagrangianFrame end(const SymplecticSpace& space) const;
  LagrangianPath reversed() const;
  LagrangianPath then(const LagrangianPath& o) const;
  // Each segment split into `pieces` equal reparameterized pieces.
  LagrangianPath refined(int pieces) const;
  LagrangianPath transformed(const QMatrix& psi) const;
  // Checks isotropy identically in t, full rank at endpoints, and continuity.
  void validate(const SymplecticSpace& space) const;
};

LagrangianPath constant_path(const LagrangianFrame& f);

using SymmetricForm = QMatrix;
bool is_symmetric(const QMatrix& m);
// (#positive - #negative) eigenvalues, by symmetric elimination.
int signature(const SymmetricForm& s);

// The symmetric A with lambda = {y = A x}, where x runs along lambda0 and y
// along lambda0p. Throws ChartMiss if lambda meets lambda0p.
SymmetricForm chart_coordinates(const SymplecticSpace& space, const LagrangianFrame& lambda,
                                const LagrangianFrame& lambda0, const LagrangianFrame& lambda0p);

struct MaslovOptions {
  int max_depth = 48;
};
// Robbin-Salamon index of the path relative to lambda0.
Rational maslov_index(const SymplecticSpace& space, const LagrangianPath& path, const LagrangianFrame& lambda0,
                      const MaslovOptions& opts = {});

long ternary_index(const SymplecticSpace& space, const LagrangianFrame& l1, const LagrangianFrame& l2,
                   const LagrangianFrame& l3);
// Signature of Q' on triples v1 + v2 + v3 = 0.
long ternary_index_triples(const SymplecticSpace& space, const LagrangianFrame& l1, const LagrangianFrame& l2,
                           const LagrangianFrame& l3);

// Graph {(v, g v)} in the doubled space.
LagrangianFrame graph_lagrangian(const SymplecticSpace& space, const QMatrix& g);
// Graph of each segment of a path of symplectic matrices.
LagrangianPath graph_path(const SymplecticSpace& space, const std::vector<PolyMatrix>& matrix_path);

long meyer(const SymplecticSpace& space, const QMatrix& g1, const QMatrix& g2);

// Straight segment y = t A x in the chart (base, complement) from base to
// target; the complement is a seeded choice transverse to both ends.
LagrangianPath chart_segment(const SymplecticSpace& space, const LagrangianFrame& from, const LagrangianFrame& to,
                             unsigned seed = 1);

}  // namespace veerlab
