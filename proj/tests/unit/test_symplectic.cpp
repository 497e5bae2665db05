#include <doctest.h>

#include "oracles.hpp"
#include "veerlab/errors.hpp"
#include "veerlab/random.hpp"
#include "veerlab/symplectic.hpp"

using namespace veerlab;

namespace {
QMatrix qm(std::size_t rows, std::size_t cols, std::vector<long> entries) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i / cols, i % cols) = entries[i];
  return m;
}

const SymplecticSpace kR2 = SymplecticSpace::standard(1);

LagrangianFrame line(long x, long y) { return LagrangianFrame(kR2, qm(2, 1, {x, y})); }

LagrangianPath line_path(Polynomial x, Polynomial y) {
  PolyMatrix m(2, 1);
  m(0, 0) = std::move(x);
  m(1, 0) = std::move(y);
  return LagrangianPath{{m}};
}

// {y = A x} in R^{2n}.
LagrangianFrame graph_of_form(const SymplecticSpace& space, const QMatrix& a) {
  return LagrangianFrame(space, QMatrix::identity(a.rows()).vcat(a));
}

LagrangianFrame horizontal(const SymplecticSpace& space) {
  const std::size_t n = space.half_dim();
  return LagrangianFrame(space, QMatrix::identity(n).vcat(QMatrix(n, n)));
}
LagrangianFrame vertical(const SymplecticSpace& space) {
  const std::size_t n = space.half_dim();
  return LagrangianFrame(space, QMatrix(n, n).vcat(QMatrix::identity(n)));
}

Polynomial poly(std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return Polynomial(std::move(r));
}
}  // namespace

TEST_CASE("spaces and frames validate their input") {
  CHECK_THROWS_AS(SymplecticSpace(qm(2, 2, {0, 1, 1, 0})), InputError);
  CHECK_THROWS_AS(SymplecticSpace(qm(2, 2, {0, 0, 0, 0})), InputError);
  const SymplecticSpace r4 = SymplecticSpace::standard(2);
  CHECK_THROWS_AS(LagrangianFrame(r4, qm(4, 2, {1, 0, 0, 0, 0, 1, 0, 0})), InputError);  // e1, e3: not isotropic
  CHECK_NOTHROW(LagrangianFrame(r4, qm(4, 2, {1, 0, 0, 1, 0, 0, 0, 0})));
  CHECK(line(1, 2).same_subspace(line(-2, -4)));
  CHECK(line(1, 0).transverse_to(line(1, 1)));
  CHECK_FALSE(line(1, 0).transverse_to(line(3, 0)));
}

TEST_CASE("signature examples") {
  CHECK(signature(qm(2, 2, {1, 0, 0, -1})) == 0);
  CHECK(signature(qm(2, 2, {0, 1, 1, 0})) == 0);
  CHECK(signature(qm(3, 3, {2, 1, 0, 1, 2, 1, 0, 1, 2})) == 3);
  CHECK(signature(qm(2, 2, {0, 0, 0, 0})) == 0);
  CHECK(signature(qm(2, 2, {-1, 0, 0, 0})) == -1);
  CHECK(signature(QMatrix(0, 0)) == 0);
  CHECK_THROWS_AS(signature(qm(2, 2, {0, 1, 0, 0})), InputError);
}

TEST_CASE("signature agrees with the characteristic-polynomial oracle") {
  Rng rng(211);
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    QMatrix s = random_symmetric(rng, n, 4);
    // Force some rank deficiency now and then.
    if (i % 3 == 0) {
      const QMatrix v = random_symmetric(rng, n, 2).column(0);
      s = v * v.transpose() - s.column(0) * s.column(0).transpose();
    }
    CHECK(signature(s) == oracle::descartes_signature(s));
    // Congruence invariance.
    QMatrix p = QMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) p(r, c) = rng.uniform(-3, 3);
    CHECK(signature(p.transpose() * s * p) == signature(s));
  }
}

TEST_CASE("chart coordinates") {
  const SymplecticSpace r4 = SymplecticSpace::standard(2);
  const QMatrix a = qm(2, 2, {1, 2, 2, -3});
  CHECK(chart_coordinates(r4, graph_of_form(r4, a), horizontal(r4), vertical(r4)) == a);
  CHECK(chart_coordinates(kR2, line(1, 5), line(1, 0), line(0, 1)) == qm(1, 1, {5}));
  CHECK(chart_coordinates(kR2, line(2, 3), line(1, 0), line(0, 1)) == QMatrix(1, 1, Rational(3, 2)));
  CHECK_THROWS_AS(chart_coordinates(kR2, line(0, 1), line(1, 0), line(0, 1)), ChartMiss);
  CHECK_THROWS_AS(chart_coordinates(r4, vertical(r4), horizontal(r4), vertical(r4)), ChartMiss);
}

TEST_CASE("Maslov index of explicit paths in R^2") {
  const LagrangianFrame x_axis = line(1, 0), y_axis = line(0, 1), diag = line(1, 1);
  // Interior crossing of the x-axis.
  const LagrangianPath through = line_path(poly({1}), poly({-1, 2}));
  CHECK(maslov_index(kR2, through, x_axis) == 1);
  CHECK(maslov_index(kR2, through.reversed(), x_axis) == -1);
  // Crossing at the start only counts half.
  const LagrangianPath from_axis = line_path(poly({1}), Polynomial::t());
  CHECK(maslov_index(kR2, from_axis, x_axis) == Rational(1, 2));
  CHECK(maslov_index(kR2, from_axis.reversed(), x_axis) == Rational(-1, 2));
  CHECK(maslov_index(kR2, constant_path(x_axis), x_axis) == 0);
  CHECK(maslov_index(kR2, constant_path(diag), x_axis) == 0);
  // The generator of the fundamental group of the Lagrangian Grassmannian.
  const LagrangianPath loop = line_path(poly({0, 4, -4}), poly({-2, 4}));
  for (const auto& base : {x_axis, y_axis, diag, line(3, -7)}) CHECK(maslov_index(kR2, loop, base) == 1);
}

TEST_CASE("Maslov index properties on random chart paths") {
  Rng rng(223);
  for (int i = 0; i < 120; ++i) {
    const SymplecticSpace space = SymplecticSpace::standard(i % 2 ? 2 : 1);
    const LagrangianFrame a = random_lagrangian(rng, space), b = random_lagrangian(rng, space),
                          c = random_lagrangian(rng, space), l0 = random_lagrangian(rng, space);
    const unsigned seed = static_cast<unsigned>(rng.next() % 1000 + 1);
    const LagrangianPath ab = chart_segment(space, a, b, seed), bc = chart_segment(space, b, c, seed + 1);
    ab.validate(space);
    CHECK(ab.start(space).same_subspace(a));
    CHECK(ab.end(space).same_subspace(b));
    const Rational mab = maslov_index(space, ab, l0);
    CHECK(maslov_index(space, ab.refined(3), l0) == mab);
    CHECK(maslov_index(space, ab.reversed(), l0) == -mab);
    CHECK(maslov_index(space, ab.then(bc), l0) == mab + maslov_index(space, bc, l0));
    const QMatrix psi = random_symplectic(rng, space);
    CHECK(maslov_index(space, ab.transformed(psi), LagrangianFrame(space, psi * l0.basis)) == mab);
    // Loops: independent of the reference Lagrangian.
    const LagrangianPath loop = ab.then(bc).then(chart_segment(space, c, a, seed + 2));
    const Rational m1 = maslov_index(space, loop, l0);
    CHECK(m1.get_den() == 1);
    CHECK(maslov_index(space, loop, random_lagrangian(rng, space)) == m1);
  }
}

TEST_CASE("ternary index examples") {
  const SymplecticSpace r4 = SymplecticSpace::standard(2);
  const QMatrix a = qm(2, 2, {1, 0, 0, -3});
  CHECK(ternary_index(kR2, line(1, 0), line(0, 1), line(1, 2)) == -1);
  CHECK(ternary_index(kR2, line(1, 0), line(0, 1), line(1, -2)) == 1);
  CHECK(ternary_index(r4, horizontal(r4), vertical(r4), graph_of_form(r4, a)) == 0);
  CHECK(ternary_index(r4, horizontal(r4), vertical(r4), graph_of_form(r4, QMatrix::identity(2))) == -2);
  CHECK(ternary_index(kR2, line(1, 3), line(1, 3), line(2, 1)) == 0);
  CHECK(ternary_index_triples(kR2, line(1, 0), line(0, 1), line(1, 2)) == -1);
}

TEST_CASE("ternary index properties") {
  Rng rng(227);
  for (int i = 0; i < 150; ++i) {
    const SymplecticSpace space = SymplecticSpace::standard(i % 2 ? 2 : 1);
    const LagrangianFrame l1 = random_lagrangian(rng, space), l2 = random_lagrangian(rng, space),
                          l3 = random_lagrangian(rng, space), l4 = random_lagrangian(rng, space);
    const long t = ternary_index(space, l1, l2, l3);
    CHECK(ternary_index_triples(space, l1, l2, l3) == t);
    CHECK(ternary_index(space, l2, l1, l3) == -t);
    CHECK(ternary_index(space, l2, l3, l1) == t);
    CHECK(ternary_index(space, l1, l1, l3) == 0);
    CHECK(ternary_index(space, l1, l2, l3) - ternary_index(space, l1, l2, l4) + ternary_index(space, l1, l3, l4) -
              ternary_index(space, l2, l3, l4) ==
          0);
    const QMatrix psi = random_symplectic(rng, space);
    CHECK(ternary_index(space, LagrangianFrame(space, psi * l1.basis), LagrangianFrame(space, psi * l2.basis),
                        LagrangianFrame(space, psi * l3.basis)) == t);
  }
}

TEST_CASE("graphs and Meyer examples") {
  const QMatrix u = qm(2, 2, {1, 1, 0, 1});
  const SymplecticSpace d = kR2.doubled();
  CHECK(graph_lagrangian(kR2, u).same_subspace(LagrangianFrame(d, qm(4, 2, {1, 0, 0, 1, 1, 1, 0, 1}))));
  const QMatrix s1 = qm(2, 2, {1, 0, -1, 1});
  CHECK(meyer(kR2, s1, s1) == 1);
  CHECK(meyer(kR2, QMatrix::identity(2), s1) == 0);
  CHECK(meyer(kR2, s1, QMatrix::identity(2)) == 0);
  const QMatrix j = qm(2, 2, {0, 1, -1, 0});
  CHECK(meyer(kR2, j, j * j * j) == meyer(kR2, j * j * j, j));
}

TEST_CASE("Meyer cocycle identity and conjugation invariance") {
  Rng rng(229);
  for (int i = 0; i < 150; ++i) {
    const SymplecticSpace space = SymplecticSpace::standard(i % 2 ? 2 : 1);
    const QMatrix a = random_symplectic(rng, space), b = random_symplectic(rng, space),
                  c = random_symplectic(rng, space), h = random_symplectic(rng, space);
    CHECK(meyer(space, a, b) + meyer(space, a * b, c) == meyer(space, a, b * c) + meyer(space, b, c));
    CHECK(meyer(space, a, b) == meyer(space, b, a));
    const QMatrix hi = inverse(h);
    CHECK(meyer(space, h * a * hi, h * b * hi) == meyer(space, a, b));
  }
}
