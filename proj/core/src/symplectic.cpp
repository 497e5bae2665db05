#include "veerlab/symplectic.hpp"

#include "veerlab/errors.hpp"
#include "veerlab/random.hpp"

namespace veerlab {

SymplecticSpace::SymplecticSpace(QMatrix form) : form_(std::move(form)) {
  if (!form_.square() || form_.rows() % 2 != 0) throw InputError("symplectic form must be square of even size");
  if (!(form_.transpose() == -form_)) throw InputError("symplectic form must be skew-symmetric");
  if (determinant(form_) == 0) throw InputError("symplectic form must be nondegenerate");
}

SymplecticSpace SymplecticSpace::standard(std::size_t n) {
  QMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return SymplecticSpace(j);
}

SymplecticSpace SymplecticSpace::doubled() const { return SymplecticSpace(direct_sum(form_, -form_)); }

Rational SymplecticSpace::omega(const QMatrix& u, const QMatrix& v) const { return (u.transpose() * form_ * v)(0, 0); }

bool SymplecticSpace::is_lagrangian(const QMatrix& b) const {
  return b.rows() == dim() && b.cols() == half_dim() && rank(b) == half_dim() && (b.transpose() * form_ * b).is_zero();
}

bool SymplecticSpace::is_symplectic(const QMatrix& g) const {
  return g.rows() == dim() && g.cols() == dim() && g.transpose() * form_ * g == form_;
}

LagrangianFrame::LagrangianFrame(const SymplecticSpace& space, QMatrix b) : basis(std::move(b)) {
  if (!space.is_lagrangian(basis)) throw InputError("frame " + to_string(basis) + " is not Lagrangian");
}

bool LagrangianFrame::same_subspace(const LagrangianFrame& o) const {
  return rank(basis.hcat(o.basis)) == basis.cols() && rank(o.basis) == basis.cols();
}

bool LagrangianFrame::transverse_to(const LagrangianFrame& o) const {
  return rank(basis.hcat(o.basis)) == basis.cols() + o.basis.cols();
}

LagrangianFrame LagrangianPath::start(const SymplecticSpace& space) const {
  if (segments.empty()) throw InputError("empty path");
  return LagrangianFrame(space, evaluate(segments.front(), 0));
}

LagrangianFrame LagrangianPath::end(const SymplecticSpace& space) const {
  if (segments.empty()) throw InputError("empty path");
  return LagrangianFrame(space, evaluate(segments.back(), 1));
}

LagrangianPath LagrangianPath::reversed() const {
  LagrangianPath p;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) p.segments.push_back(compose_affine(*it, 1, -1));
  return p;
}

LagrangianPath LagrangianPath::then(const LagrangianPath& o) const {
  LagrangianPath p = *this;
  p.segments.insert(p.segments.end(), o.segments.begin(), o.segments.end());
  return p;
}

LagrangianPath LagrangianPath::refined(int pieces) const {
  if (pieces < 1) throw InputError("refinement needs at least one piece");
  LagrangianPath p;
  for (const auto& s : segments)
    for (int k = 0; k < pieces; ++k) p.segments.push_back(compose_affine(s, make_rational(k, pieces), make_rational(1, pieces)));
  return p;
}

LagrangianPath LagrangianPath::transformed(const QMatrix& psi) const {
  LagrangianPath p;
  const PolyMatrix c = constant(psi);
  for (const auto& s : segments) p.segments.push_back(c * s);
  return p;
}

void LagrangianPath::validate(const SymplecticSpace& space) const {
  const PolyMatrix om = constant(space.form());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const PolyMatrix& s = segments[i];
    if (!(s.transpose() * om * s).is_zero()) throw InvariantViolation("path segment is not isotropic");
    LagrangianFrame(space, evaluate(s, 0));
    LagrangianFrame(space, evaluate(s, 1));
    if (i > 0 && !LagrangianFrame(space, evaluate(segments[i - 1], 1))
                     .same_subspace(LagrangianFrame(space, evaluate(s, 0))))
      throw InvariantViolation("path segments do not meet");
  }
}

LagrangianPath constant_path(const LagrangianFrame& f) {
  LagrangianPath p;
  p.segments.push_back(constant(f.basis));
  return p;
}

bool is_symmetric(const QMatrix& m) { return m.square() && m.transpose() == m; }

int signature(const SymmetricForm& input) {
  if (!is_symmetric(input)) throw InputError("signature of a non-symmetric matrix");
  QMatrix s = input;
  std::vector<std::size_t> live(s.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  int sig = 0;
  while (!live.empty()) {
    std::size_t pick = live.size();
    for (std::size_t k = 0; k < live.size() && pick == live.size(); ++k)
      if (s(live[k], live[k]) != 0) pick = k;
    if (pick == live.size()) {
      // No nonzero diagonal: add row/column j to i where s(i, j) != 0.
      std::size_t ii = 0, jj = 0;
      bool found = false;
      for (std::size_t a = 0; a < live.size() && !found; ++a)
        for (std::size_t b = a + 1; b < live.size() && !found; ++b)
          if (s(live[a], live[b]) != 0) {
            ii = live[a];
            jj = live[b];
            pick = a;
            found = true;
          }
      if (!found) break;
      for (std::size_t c = 0; c < s.cols(); ++c) s(ii, c) += s(jj, c);
      for (std::size_t r = 0; r < s.rows(); ++r) s(r, ii) += s(r, jj);
    }
    const std::size_t k = live[pick];
    const Rational piv = s(k, k);
    sig += sgn(piv);
    live.erase(live.begin() + static_cast<long>(pick));
    for (std::size_t i : live) {
      if (s(i, k) == 0) continue;
      const Rational f = s(i, k) / piv;
      for (std::size_t j : live) s(i, j) -= f * s(k, j);
    }
    for (std::size_t i : live) {
      s(i, k) = 0;
      s(k, i) = 0;
    }
  }
  return sig;
}

namespace {

// W spanning the complement, rescaled so that V^T Omega W = I.
QMatrix normalize_complement(const SymplecticSpace& space, const QMatrix& v, const QMatrix& w) {
  const QMatrix pairing = v.transpose() * space.form() * w;
  if (determinant(pairing) == 0) throw InputError("Lagrangians are not complementary");
  return w * inverse(pairing);
}

// A Lagrangian complement of V with V^T Omega W = I.
QMatrix lagrangian_complement(const SymplecticSpace& space, const QMatrix& v) {
  const std::size_t n = space.dim();
  QMatrix w(n, 0), ext = v;
  for (std::size_t e = 0; e < n && w.cols() < space.half_dim(); ++e) {
    QMatrix col(n, 1);
    col(e, 0) = 1;
    const QMatrix trial = ext.hcat(col);
    if (rank(trial) == trial.cols()) {
      ext = trial;
      w = w.hcat(col);
    }
  }
  w = normalize_complement(space, v, w);
  const QMatrix k = w.transpose() * space.form() * w;
  return w + v * (Rational(1, 2) * k);
}

}  // namespace

SymmetricForm chart_coordinates(const SymplecticSpace& space, const LagrangianFrame& lambda,
                                const LagrangianFrame& lambda0, const LagrangianFrame& lambda0p) {
  const QMatrix w = normalize_complement(space, lambda0.basis, lambda0p.basis);
  const QMatrix coords = inverse(lambda0.basis.hcat(w)) * lambda.basis;
  const std::size_t m = space.half_dim();
  const QMatrix a = coords.block(0, 0, m, m), b = coords.block(m, 0, m, m);
  if (determinant(a) == 0) throw ChartMiss("Lagrangian is not transverse to the chart complement");
  const QMatrix s = b * inverse(a);
  if (!is_symmetric(s)) throw InvariantViolation("chart matrix of a Lagrangian is not symmetric");
  return s;
}

Rational maslov_index(const SymplecticSpace& space, const LagrangianPath& path, const LagrangianFrame& lambda0,
                      const MaslovOptions& opts) {
  const std::size_t m = space.half_dim();
  const QMatrix& v = lambda0.basis;
  const QMatrix w = lagrangian_complement(space, v);
  // Coordinates along (V, W): x = -W^T Omega Z, y = V^T Omega Z. The
  // complement W + V S gives x' = x - S y.
  const PolyMatrix xform = constant(-(w.transpose() * space.form()));
  const PolyMatrix yform = constant(v.transpose() * space.form());

  std::vector<QMatrix> pool;
  pool.push_back(QMatrix(m, m));
  for (int c : {1, -1, 2, -2}) pool.push_back(QMatrix::identity(m) * Rational(c));
  Rng rng(0x5eedULL + m);
  for (int k = 0; k < 4; ++k) pool.push_back(random_symmetric(rng, m, 3));

  long halves = 0;
  for (const PolyMatrix& seg : path.segments) {
    const PolyMatrix x = xform * seg, y = yform * seg;
    std::vector<QMatrix> local = pool;
    struct Piece {
      Rational lo, hi;
      int depth;
    };
    std::vector<Piece> stack{{0, 1, 0}};
    while (!stack.empty()) {
      const Piece piece = stack.back();
      stack.pop_back();
      auto try_charts = [&](const std::vector<QMatrix>& cands) -> bool {
        for (const QMatrix& s : cands) {
          const PolyMatrix xs = x - constant(s) * y;
          const Polynomial d = determinant(xs);
          if (has_root_in(d, piece.lo, piece.hi)) continue;
          auto sig_at = [&](const Rational& t) {
            return signature(evaluate(xs, t).transpose() * evaluate(y, t));
          };
          halves += sig_at(piece.hi) - sig_at(piece.lo);
          return true;
        }
        return false;
      };
      if (try_charts(local)) continue;
      // Bespoke complement transverse at the midpoint.
      const Rational mid = (piece.lo + piece.hi) / 2;
      const QMatrix xm = evaluate(x, mid), ym = evaluate(y, mid);
      QMatrix bespoke;
      for (int attempt = 0;; ++attempt) {
        if (attempt > 200) throw InvariantViolation("no complement transverse to the path midpoint was found");
        bespoke = random_symmetric(rng, m, 2 + attempt / 10);
        if (determinant(xm - bespoke * ym) != 0) break;
      }
      local.push_back(bespoke);
      if (try_charts({bespoke})) continue;
      if (piece.depth >= opts.max_depth) throw InvariantViolation("Maslov subdivision exceeded the depth limit");
      stack.push_back({piece.lo, mid, piece.depth + 1});
      stack.push_back({mid, piece.hi, piece.depth + 1});
    }
  }
  return make_rational(halves, 2);
}

namespace {

long gram_signature(const SymplecticSpace& space, const std::vector<QMatrix>& left, const std::vector<QMatrix>& right) {
  const std::size_t k = left.size();
  QMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i, j) = space.omega(left[i], right[j]);
  if (!is_symmetric(g)) throw InvariantViolation("ternary form is not symmetric");
  return signature(g);
}

void require_frames(const SymplecticSpace& space, std::initializer_list<const LagrangianFrame*> fs) {
  for (const auto* f : fs)
    if (!space.is_lagrangian(f->basis)) throw InputError("ternary index needs Lagrangians of the same space");
}

}  // namespace

long ternary_index(const SymplecticSpace& space, const LagrangianFrame& l1, const LagrangianFrame& l2,
                   const LagrangianFrame& l3) {
  require_frames(space, {&l1, &l2, &l3});
  const std::size_t m = space.half_dim();
  // Z1 a + Z2 b = Z3 c parametrizes (L1 + L2) n L3 (with degenerate extras).
  const QMatrix k = nullspace(l1.basis.hcat(l2.basis).hcat(-l3.basis));
  std::vector<QMatrix> v2, w;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    const QMatrix col = k.column(c);
    v2.push_back(l2.basis * col.block(m, 0, m, 1));
    w.push_back(l3.basis * col.block(2 * m, 0, m, 1));
  }
  return gram_signature(space, v2, w);
}

long ternary_index_triples(const SymplecticSpace& space, const LagrangianFrame& l1, const LagrangianFrame& l2,
                           const LagrangianFrame& l3) {
  require_frames(space, {&l1, &l2, &l3});
  const std::size_t m = space.half_dim();
  const QMatrix k = nullspace(l1.basis.hcat(l2.basis).hcat(l3.basis));
  std::vector<QMatrix> v1, v3;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    const QMatrix col = k.column(c);
    v1.push_back(l1.basis * col.block(0, 0, m, 1));
    v3.push_back(l3.basis * col.block(2 * m, 0, m, 1));
  }
  return gram_signature(space, v1, v3);
}

LagrangianFrame graph_lagrangian(const SymplecticSpace& space, const QMatrix& g) {
  if (!space.is_symplectic(g)) throw InputError("matrix " + to_string(g) + " does not preserve the form");
  return LagrangianFrame(space.doubled(), QMatrix::identity(space.dim()).vcat(g));
}

LagrangianPath graph_path(const SymplecticSpace& space, const std::vector<PolyMatrix>& matrix_path) {
  LagrangianPath p;
  const PolyMatrix id = constant(QMatrix::identity(space.dim()));
  for (const auto& g : matrix_path) {
    if (g.rows() != space.dim() || g.cols() != space.dim()) throw InputError("matrix path has the wrong size");
    p.segments.push_back(id.vcat(g));
  }
  return p;
}

long meyer(const SymplecticSpace& space, const QMatrix& g1, const QMatrix& g2) {
  const SymplecticSpace d = space.doubled();
  return ternary_index(d, graph_lagrangian(space, QMatrix::identity(space.dim())), graph_lagrangian(space, g1),
                       graph_lagrangian(space, g1 * g2));
}

LagrangianPath chart_segment(const SymplecticSpace& space, const LagrangianFrame& from, const LagrangianFrame& to,
                             unsigned seed) {
  Rng rng(seed);
  QMatrix w;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 500) throw InvariantViolation("no common complement found for a chart segment");
    const LagrangianFrame cand = random_lagrangian(rng, space, 2 + attempt / 20);
    if (cand.transverse_to(from) && cand.transverse_to(to)) {
      w = cand.basis;
      break;
    }
  }
  const SymmetricForm a = chart_coordinates(space, to, from, LagrangianFrame(space, w));
  const QMatrix wn = normalize_complement(space, from.basis, w);
  // Z(t) = V + t W A
  PolyMatrix seg = constant(from.basis);
  const QMatrix wa = wn * a;
  for (std::size_t r = 0; r < seg.rows(); ++r)
    for (std::size_t c = 0; c < seg.cols(); ++c) seg(r, c) += Polynomial::linear(0, wa(r, c));
  LagrangianPath p;
  p.segments.push_back(seg);
  return p;
}

}  // namespace veerlab
