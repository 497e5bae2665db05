#include "veerlab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "veerlab/burau.hpp"
#include "veerlab/errors.hpp"
#include "veerlab/farey.hpp"
#include "veerlab/linkinv.hpp"
#include "veerlab/random.hpp"
#include "veerlab/symplectic.hpp"
#include "veerlab/torus.hpp"

namespace veerlab {
namespace {

using Check = std::function<std::optional<std::string>(Rng&)>;

std::string str(long v) { return std::to_string(v); }

std::optional<std::string> theorem_lk(Rng& rng) {
  const BraidWord b = random_braid_upto(rng, 3, 40);
  if (verify_theorem_lk(b)) return std::nullopt;
  return to_string(b) + ": lk=" + str(linking_number(b)) + " rot=" + to_string(rot(b)) + " phi=" + str(phi(b));
}

std::optional<std::string> two_road(Rng& rng) {
  const PSL2Element g = random_psl(rng, 60);
  const NormalForm nf = normal_form(g);
  if (!(evaluate(nf) == g)) return "normal form of " + to_string(g.representative()) + " does not round-trip";
  const long a = rademacher(g), b = rademacher_turns(g);
  if (a == b) return std::nullopt;
  return to_string(g.representative()) + ": normal form " + str(a) + ", turns " + str(b);
}

bool in_set(const DeltaTriple& t, bool restricted) {
  const DeltaTriple a{1, 0, 1}, b{1, make_rational(1, 4), -2}, c{1, make_rational(1, 2), -5};
  return t == a || t == b || (!restricted && t == c);
}

std::string triple_text(const DeltaTriple& t) {
  return "(" + str(t.dlk) + "," + to_string(t.drot) + "," + str(t.dphi) + ")";
}

std::optional<std::string> dehn_delta(Rng& rng) {
  const BraidWord bprime = random_braid_upto(rng, 3, 20);
  const BraidWord twist = conjugate(generator(3, 1), random_braid_upto(rng, 3, 10));
  const DeltaTriple t = dehn_twist_delta(bprime, twist);
  if (!in_set(t, false)) return "b'=" + to_string(bprime) + " twist=" + to_string(twist) + " " + triple_text(t);
  const DeltaTriple t0 = dehn_twist_delta(BraidWord(3), twist);
  if (!in_set(t0, true)) return "b'=id twist=" + to_string(twist) + " " + triple_text(t0);
  return std::nullopt;
}

int small_odd_strands(Rng& rng) { return rng.coin() ? 3 : 5; }

std::optional<std::string> dual_engine(Rng& rng) {
  const BraidWord b = random_braid_upto(rng, small_odd_strands(rng), 12);
  const long s = seifert_signature(b), m = meyer_signature(b);
  if (s == m) return std::nullopt;
  return to_string(b) + " (B_" + str(b.strands()) + "): seifert " + str(s) + ", meyer " + str(m);
}

std::optional<std::string> sign_maslov(Rng& rng) {
  const BraidWord b = random_braid_upto(rng, small_odd_strands(rng), 12);
  const SignMaslovReport r = verify_sign_maslov(b);
  if (r.holds) return std::nullopt;
  return to_string(b) + " (B_" + str(b.strands()) + "): sign " + str(r.signature) + ", lk " + str(r.lk) + ", mu " +
         to_string(r.mu);
}

std::optional<std::string> eq_signature(Rng& rng) {
  const int n = small_odd_strands(rng);
  const BraidWord a = random_braid_upto(rng, n, 8), b = random_braid_upto(rng, n, 8);
  const EqSignatureReport r = verify_eq_signature(a, b);
  if (r.holds) return std::nullopt;
  return to_string(a) + " / " + to_string(b) + ": " + str(r.sig_ab) + " vs " + str(r.sig_a) + "+" + str(r.sig_b) +
         "-" + str(r.meyer);
}

BraidWord random_anosov(Rng& rng) {
  for (;;) {
    BraidWord b = random_braid_upto(rng, 3, 16);
    if (classify(project_b3(b)) == Classification::Anosov) return b;
  }
}

std::string gg_text(const BraidWord& b, const GGReport& r) {
  return to_string(b) + ": sign " + str(r.signature) + ", lk " + str(r.lk) + ", phi " + str(r.phi) + ", class phi " +
         str(r.phi_class) + ", k " + str(decompose(b).k);
}

std::optional<std::string> gg_remark(Rng& rng) {
  const BraidWord b = random_anosov(rng);
  const GGReport r = gg_remark_check(b);
  if (r.holds_class) return std::nullopt;
  return gg_text(b, r);
}

// The remark read with the normal-form Phi of the given word. Reports the
// words where it differs from the class value.
std::optional<std::string> gg_remark_literal(Rng& rng) {
  const BraidWord b = random_anosov(rng);
  const GGReport r = gg_remark_check(b);
  if (r.holds) return std::nullopt;
  return gg_text(b, r);
}

std::optional<std::string> cochain(Rng& rng) {
  const BraidWord a = random_braid_upto(rng, 3, 20), b = random_braid_upto(rng, 3, 20);
  const BraidWord ab = concat(a, b);
  const long dphi = phi(a) + phi(b) - phi(ab);
  const Rational drot = rot(a) + rot(b) - rot(ab);
  if (Rational(dphi) == -12 * drot) return std::nullopt;
  return to_string(a) + " / " + to_string(b) + ": dphi " + str(dphi) + ", drot " + to_string(drot);
}

std::optional<std::string> quasimorphism(Rng& rng) {
  const PSL2Element g = random_psl(rng, 60), h = random_psl(rng, 60);
  const long d = rademacher(g * h) - rademacher(g) - rademacher(h);
  if (d >= -3 && d <= 3) return std::nullopt;
  return to_string(g.representative()) + " * " + to_string(h.representative()) + ": defect " + str(d);
}

SymplecticSpace small_space(Rng& rng) { return SymplecticSpace::standard(rng.coin() ? 1 : 2); }

LagrangianFrame transverse_lagrangian(Rng& rng, const SymplecticSpace& space,
                                      const std::vector<const LagrangianFrame*>& others) {
  for (;;) {
    LagrangianFrame l = random_lagrangian(rng, space);
    if (std::all_of(others.begin(), others.end(), [&](const LagrangianFrame* o) { return l.transverse_to(*o); }))
      return l;
  }
}

std::optional<std::string> ternary(Rng& rng) {
  const SymplecticSpace space = small_space(rng);
  const LagrangianFrame l1 = transverse_lagrangian(rng, space, {});
  const LagrangianFrame l2 = transverse_lagrangian(rng, space, {&l1});
  const LagrangianFrame l3 = transverse_lagrangian(rng, space, {&l1, &l2});
  const unsigned s = static_cast<unsigned>(rng.next());
  const long i1 = ternary_index(space, l1, l2, l3);
  const long i2 = ternary_index_triples(space, l1, l2, l3);
  // gamma_31 runs back along gamma_12 gamma_23, closing a loop.
  const LagrangianPath g12 = chart_segment(space, l1, l2, s), g23 = chart_segment(space, l2, l3, s + 1);
  const LagrangianPath g31 = g12.then(g23).reversed();
  const Rational sum = maslov_index(space, g12, l1) + maslov_index(space, g23, l2) + maslov_index(space, g31, l3);
  if (i1 == i2 && Rational(i1) == 2 * sum) return std::nullopt;
  return "dim " + str(static_cast<long>(space.dim())) + ": I=" + str(i1) + " I'=" + str(i2) +
         " 2(mu+mu+mu)=" + to_string(Rational(2 * sum));
}

std::optional<std::string> cocycle(Rng& rng) {
  const int n = small_odd_strands(rng);
  const SymplecticSpace space = homology_rep(n).space();
  const QMatrix g1 = burau_matrix_q(random_braid_upto(rng, n, 8));
  const QMatrix g2 = burau_matrix_q(random_braid_upto(rng, n, 8));
  const QMatrix g3 = burau_matrix_q(random_braid_upto(rng, n, 8));
  const long lhs = meyer(space, g1, g2) + meyer(space, g1 * g2, g3);
  const long rhs = meyer(space, g2, g3) + meyer(space, g1, g2 * g3);
  if (lhs == rhs) return std::nullopt;
  return "B_" + str(n) + " triple: " + str(lhs) + " vs " + str(rhs);
}

std::optional<std::string> seifert_moves(Rng& rng) {
  const int n = small_odd_strands(rng);
  const BraidWord b = random_braid_upto(rng, n, 10);
  const long s = seifert_signature(b);
  const BraidWord conj = conjugate(b, random_braid_upto(rng, n, 6));
  const BraidWord stab = concat(stabilize(b), generator(n + 1, rng.coin() ? n : -n));
  const long sc = seifert_signature(conj), ss = seifert_signature(stab);
  if (sc == s && ss == s) return std::nullopt;
  return to_string(b) + ": " + str(s) + ", conjugate " + str(sc) + ", stabilized " + str(ss);
}

QpWitness random_witness(Rng& rng, int strands) {
  QpWitness w;
  const long factors = rng.uniform(1, 4);
  for (long i = 0; i < factors; ++i)
    w.push_back({random_braid_upto(rng, strands, 6), static_cast<int>(rng.uniform(1, strands - 1))});
  return w;
}

std::optional<std::string> qp_coherence(Rng& rng) {
  const QpWitness wa = random_witness(rng, 3), wb = random_witness(rng, 3);
  const BraidWord a = expand(wa, 3), b = expand(wb, 3);
  if (quasipositive_verdict(a, wa).answer != Answer::Yes) return "witness rejected for " + to_string(a);
  QpWitness both = wa;
  both.insert(both.end(), wb.begin(), wb.end());
  const BraidWord ab = concat(a, b);
  if (quasipositive_verdict(ab).answer == Answer::No) return "product " + to_string(ab) + " judged No";
  if (quasipositive_verdict(ab, both).answer != Answer::Yes) return "joined witness rejected for " + to_string(ab);
  return std::nullopt;
}

std::optional<std::string> qp_shadow(Rng& rng) {
  const int n = small_odd_strands(rng);
  const BraidWord b = expand(random_witness(rng, n), n);
  const long s = seifert_signature(b);
  const Rational mu = lift_maslov(b);
  if (Rational(s) <= 2 * mu) return std::nullopt;
  return "quasipositive " + to_string(b) + ": sign " + str(s) + " > 2mu = " + to_string(Rational(2 * mu));
}

const std::map<std::string, Check>& registry() {
  static const std::map<std::string, Check> r{
      {"theorem-lk", theorem_lk},       {"two-road", two_road},
      {"dehn-delta", dehn_delta},       {"dual-engine", dual_engine},
      {"sign-maslov", sign_maslov},     {"eq-signature", eq_signature},
      {"gg-remark", gg_remark},         {"gg-remark-literal", gg_remark_literal},         {"cochain", cochain},
      {"quasimorphism", quasimorphism}, {"ternary", ternary},
      {"cocycle", cocycle},             {"seifert-moves", seifert_moves},
      {"qp-coherence", qp_coherence},   {"qp-shadow", qp_shadow},
  };
  return r;
}

constexpr std::size_t kMaxSamples = 5;

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, check] : registry()) out.push_back(name);
  return out;
}

bool has_suite(const std::string& name) { return registry().count(name) != 0; }

SuiteResult run_suite(const std::string& name, std::size_t count, std::uint64_t seed, unsigned threads) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InputError("unknown suite '" + name + "'");
  const Check& check = it->second;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  // Failures are keyed by item index so the report is identical for any
  // thread count.
  std::vector<std::optional<std::string>> outcome(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      Rng rng = Rng::stream(seed, i);
      try {
        outcome[i] = check(rng);
      } catch (const InvariantViolation& e) {
        outcome[i] = std::string("invariant violation: ") + e.what();
      } catch (const std::exception& e) {
        outcome[i] = std::string("error: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult r;
  r.suite = name;
  r.report_only = name == "gg-remark-literal";
  r.seed = seed;
  r.count = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (!outcome[i]) continue;
    ++r.failures;
    if (r.samples.size() < kMaxSamples) r.samples.push_back("#" + std::to_string(i) + " " + *outcome[i]);
  }
  return r;
}

}  // namespace veerlab
