#include "veerlab/linkinv.hpp"

#include <cstdlib>
#include <map>

#include "veerlab/burau.hpp"
#include "veerlab/errors.hpp"
#include "veerlab/modular.hpp"
#include "veerlab/symplectic.hpp"

namespace veerlab {

namespace {

struct Loop {
  int column;
  std::size_t s, t;  // positions of the two bands
};

}  // namespace

SeifertData seifert_data(const BraidWord& b) {
  const auto& w = b.letters();
  std::map<int, std::vector<std::size_t>> cols;
  for (std::size_t pos = 0; pos < w.size(); ++pos) cols[std::abs(w[pos])].push_back(pos);
  std::vector<Loop> loops;
  for (const auto& [c, ps] : cols)
    for (std::size_t j = 0; j + 1 < ps.size(); ++j) loops.push_back({c, ps[j], ps[j + 1]});

  auto eps = [&](std::size_t pos) { return w[pos] > 0 ? 1 : -1; };
  const std::size_t n = loops.size();
  IntMatrix v(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const Loop& x = loops[a];
    v(a, a) = -(eps(x.s) + eps(x.t)) / 2;
    for (std::size_t c = 0; c < n; ++c) {
      if (a == c) continue;
      const Loop& y = loops[c];
      if (y.column == x.column && y.s == x.t) {
        // Consecutive loops sharing the band at x.t.
        if (eps(x.t) > 0) v(a, c) += 1;
        else v(c, a) -= 1;
      }
      if (y.column == x.column + 1) {
        if (x.s < y.s && y.s < x.t && x.t < y.t) v(c, a) += 1;
        else if (y.s < x.s && x.s < y.t && y.t < x.t) v(c, a) -= 1;
      }
    }
  }
  return {v};
}

long seifert_signature(const BraidWord& b) {
  const IntMatrix v = seifert_data(b).seifert_matrix;
  if (v.rows() == 0) return 0;
  return signature(to_rational(v + v.transpose()));
}

long meyer_signature(const BraidWord& word) {
  const BraidWord b = odd_strands(word);
  const HomologyRep rep = homology_rep(b.strands());
  const SymplecticSpace space = rep.space();
  const std::size_t k = b.length();
  std::vector<QMatrix> g;
  for (int l : b.letters()) g.push_back(burau_matrix_q(BraidWord(b.strands(), {l})));
  // suffix[i] = g_i ... g_{k-1}
  std::vector<QMatrix> suffix(k + 1, QMatrix::identity(space.dim()));
  for (std::size_t i = k; i-- > 0;) suffix[i] = g[i] * suffix[i + 1];
  long total = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) total += meyer(space, g[i], suffix[i + 1]);
  return -total;
}

SignMaslovReport verify_sign_maslov(const BraidWord& b) {
  SignMaslovReport r;
  r.signature = seifert_signature(b);
  r.lk = linking_number(b);
  r.mu = lift_maslov(b);
  r.rhs = Rational(-r.lk) + 2 * r.mu;
  r.holds = Rational(r.signature) == r.rhs;
  return r;
}

EqSignatureReport verify_eq_signature(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw InputError("verify_eq_signature needs equal strand counts");
  EqSignatureReport r;
  r.sig_ab = seifert_signature(concat(a, b));
  r.sig_a = seifert_signature(a);
  r.sig_b = seifert_signature(b);
  const HomologyRep rep = homology_rep(odd_strands(a).strands());
  r.meyer = meyer(rep.space(), burau_matrix_q(a), burau_matrix_q(b));
  r.holds = r.sig_ab == r.sig_a + r.sig_b - r.meyer;
  return r;
}

GGReport gg_remark_check(const BraidWord& b) {
  if (b.strands() != 3) throw InputError("the remark is stated for B_3");
  if (classify(project_b3(b)) != Classification::Anosov) throw InputError("word " + to_string(b) + " is not Anosov");
  GGReport r;
  r.signature = seifert_signature(b);
  r.lk = linking_number(b);
  const IntMatrix m = burau_matrix(b);
  const PSL2Element g(SL2Matrix(m(0, 0), m(0, 1), m(1, 0), m(1, 1)));
  r.phi = rademacher(g);
  r.phi_class = rademacher_class(g);
  r.lhs = Rational(r.signature) + Rational(2, 3) * r.lk;
  r.rhs = make_rational(-r.phi, 3);
  r.rhs_class = make_rational(-r.phi_class, 3);
  r.holds = r.lhs == r.rhs;
  r.holds_class = r.lhs == r.rhs_class;
  return r;
}

}  // namespace veerlab
