#include "veerlab/burau.hpp"

#include <cstdlib>

#include "veerlab/errors.hpp"

namespace veerlab {

IntMatrix intersection_form(int strands) {
  if (strands < 3 || strands % 2 == 0) throw InputError("intersection form needs an odd strand count >= 3");
  const std::size_t n = static_cast<std::size_t>(strands - 1);
  IntMatrix om(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    om(i, i + 1) = 1;
    om(i + 1, i) = -1;
  }
  return om;
}

PolyMatrix generator_path(int strands, int letter) {
  if (strands < 3 || strands % 2 == 0) throw InputError("generator paths need an odd strand count >= 3");
  const std::size_t n = static_cast<std::size_t>(strands - 1);
  const std::size_t i = static_cast<std::size_t>(std::abs(letter));
  if (i < 1 || i > n) throw InputError("letter " + std::to_string(letter) + " out of range");
  const Polynomial t = letter > 0 ? Polynomial::t() : -Polynomial::t();
  PolyMatrix g = PolyMatrix::identity(n);
  if (i == 1) {
    g(0, 1) = t;
  } else if (i == n) {
    g(n - 1, n - 2) = -t;
  } else {
    g(i - 1, i - 2) = -t;
    g(i - 1, i) = t;
  }
  return g;
}

HomologyRep homology_rep(int strands) {
  HomologyRep rep;
  rep.strands = strands;
  rep.form = intersection_form(strands);
  for (int i = 1; i < strands; ++i)
    rep.generator_images.push_back(
        evaluate(generator_path(strands, i), 1).map([](const Rational& q) { return Integer(q.get_num()); }));
  return rep;
}

BraidWord embed_even(const BraidWord& b) {
  if (b.strands() % 2 != 0) throw InputError("embed_even needs an even strand count");
  return stabilize(b);
}

BraidWord odd_strands(const BraidWord& b) { return b.strands() % 2 == 0 ? embed_even(b) : b; }

IntMatrix burau_matrix(const BraidWord& word) {
  const BraidWord b = odd_strands(word);
  const HomologyRep rep = homology_rep(b.strands());
  const std::size_t n = rep.dim();
  // Inverses of the unipotent images: I - N.
  std::vector<IntMatrix> inv;
  for (const auto& g : rep.generator_images) inv.push_back(IntMatrix::identity(n) * Integer(2) - g);
  IntMatrix m = IntMatrix::identity(n);
  for (int l : b.letters()) {
    const std::size_t k = static_cast<std::size_t>(std::abs(l) - 1);
    m = m * (l > 0 ? rep.generator_images[k] : inv[k]);
  }
  return m;
}

QMatrix burau_matrix_q(const BraidWord& b) { return to_rational(burau_matrix(b)); }

SymplecticLift lift(const BraidWord& word) {
  SymplecticLift out;
  out.word = odd_strands(word);
  const std::size_t n = static_cast<std::size_t>(out.word.strands() - 1);
  QMatrix prefix = QMatrix::identity(n);
  for (int l : out.word.letters()) {
    const PolyMatrix g = generator_path(out.word.strands(), l);
    out.segments.push_back(constant(prefix) * g);
    prefix = prefix * evaluate(g, 1);
  }
  return out;
}

QMatrix standardizing_transform(const QMatrix& omega) {
  const SymplecticSpace space(omega);
  const std::size_t dim = omega.rows();
  std::vector<QMatrix> rest;
  for (std::size_t k = 0; k < dim; ++k) {
    QMatrix e(dim, 1);
    e(k, 0) = 1;
    rest.push_back(e);
  }
  std::vector<QMatrix> es, fs;
  while (!rest.empty()) {
    const QMatrix e = rest.front();
    rest.erase(rest.begin());
    std::size_t j = 0;
    while (j < rest.size() && space.omega(e, rest[j]) == 0) ++j;
    if (j == rest.size()) throw InvariantViolation("form is degenerate during skew Gram-Schmidt");
    const QMatrix f = rest[j] * (1 / space.omega(e, rest[j]));
    rest.erase(rest.begin() + static_cast<long>(j));
    for (auto& x : rest) x = x + f * space.omega(x, e) - e * space.omega(x, f);
    es.push_back(e);
    fs.push_back(f);
  }
  QMatrix t(dim, 0);
  for (const auto& e : es) t = t.hcat(e);
  for (const auto& f : fs) t = t.hcat(f);
  if (!(t.transpose() * omega * t == SymplecticSpace::standard(dim / 2).form()))
    throw InvariantViolation("skew Gram-Schmidt did not reach the standard form");
  return t;
}

StandardizedRep standardize_form(const HomologyRep& rep) {
  StandardizedRep out;
  out.transform = standardizing_transform(to_rational(rep.form));
  const QMatrix ti = inverse(out.transform);
  for (const auto& g : rep.generator_images) out.generator_images.push_back(ti * to_rational(g) * out.transform);
  return out;
}

Rational lift_maslov(const BraidWord& word) {
  const SymplecticLift l = lift(word);
  const HomologyRep rep = homology_rep(l.word.strands());
  const SymplecticSpace space = rep.space();
  const LagrangianFrame base = graph_lagrangian(space, QMatrix::identity(space.dim()));
  if (l.segments.empty()) return 0;
  return maslov_index(space.doubled(), graph_path(space, l.segments), base);
}

}  // namespace veerlab
