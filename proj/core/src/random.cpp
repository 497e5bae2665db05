#include "veerlab/random.hpp"

namespace veerlab {

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 e(seq);
  return Rng(e());
}

BraidWord random_braid(Rng& rng, int strands, std::size_t length) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < length; ++i) {
    const int g = static_cast<int>(rng.uniform(1, strands - 1));
    letters.push_back(rng.coin() ? g : -g);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord random_braid_upto(Rng& rng, int strands, std::size_t max_length) {
  return random_braid(rng, strands, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_length))));
}

BraidWord random_positive_braid(Rng& rng, int strands, std::size_t length) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < length; ++i) letters.push_back(static_cast<int>(rng.uniform(1, strands - 1)));
  return BraidWord(strands, std::move(letters));
}

PSL2Element random_psl(Rng& rng, std::size_t max_length) {
  const long len = rng.uniform(0, static_cast<long>(max_length));
  SL2Matrix m;
  for (long i = 0; i < len; ++i) {
    switch (rng.uniform(0, 2)) {
      case 0: m = m * mod::A(); break;
      case 1: m = m * mod::B(); break;
      default: m = m * mod::Binv(); break;
    }
  }
  return PSL2Element(m);
}

QMatrix random_symmetric(Rng& rng, std::size_t n, long range) {
  QMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      s(i, j) = rng.uniform(-range, range);
      s(j, i) = s(i, j);
    }
  return s;
}

QMatrix random_symplectic(Rng& rng, const SymplecticSpace& space, int steps, long range) {
  const std::size_t n = space.dim();
  QMatrix g = QMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    QMatrix v(n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = rng.uniform(-range, range);
    const Rational c = rng.coin() ? 1 : -1;
    const QMatrix t = QMatrix::identity(n) + c * (v * v.transpose() * space.form());
    g = g * t;
  }
  return g;
}

LagrangianFrame random_lagrangian(Rng& rng, const SymplecticSpace& space, long range) {
  const std::size_t n = space.dim(), m = space.half_dim();
  QMatrix basis(n, 0);
  while (basis.cols() < m) {
    // Random vector in the omega-orthogonal complement of the current span.
    QMatrix perp = basis.cols() == 0 ? QMatrix::identity(n) : nullspace(basis.transpose() * space.form());
    QMatrix v(n, 1);
    for (std::size_t k = 0; k < perp.cols(); ++k) {
      const Rational c = rng.uniform(-range, range);
      if (c != 0) v = v + c * perp.column(k);
    }
    const QMatrix extended = basis.hcat(v);
    if (rank(extended) == extended.cols()) basis = extended;
  }
  return LagrangianFrame(space, basis);
}

}  // namespace veerlab
