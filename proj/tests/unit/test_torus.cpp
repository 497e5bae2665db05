#include <doctest.h>

#include <algorithm>

#include "veerlab/errors.hpp"
#include "veerlab/random.hpp"
#include "veerlab/torus.hpp"

using namespace veerlab;

namespace {
BraidWord w3(std::vector<int> letters) { return BraidWord(3, std::move(letters)); }
BraidWord parse3(const char* s) { return parse_braid(s, 3); }
const char* const kExample = "1 2 1 1 2 1 -1 -1 -1 -1 2 -1 2 -1";

BraidWord family(long j, long m) { return concat(power(delta3(), j), power(w3({1}), -m)); }

// Random word over one of the two alphabets of the decomposition.
BraidWord random_tail(Rng& rng, bool first_alphabet, std::size_t len) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < len; ++i) {
    const bool one = rng.coin();
    letters.push_back(first_alphabet ? (one ? -1 : 2) : (one ? 1 : -2));
  }
  return BraidWord(3, letters);
}
}  // namespace

TEST_CASE("decompose examples") {
  const TorusDecomposition id = decompose(BraidWord(3));
  CHECK(id.k == 0);
  CHECK(id.w.empty());
  const TorusDecomposition twist = decompose(power(delta3(), 4));
  CHECK(twist.k == 4);
  CHECK(twist.w.empty());
  const TorusDecomposition ex = decompose(parse3(kExample));
  CHECK(ex.k == 2);
  CHECK(linking_number(ex.w) == -4);
  CHECK_THROWS_AS(decompose(BraidWord(4)), InputError);
}

TEST_CASE("decompose recovers words built as (s1 s2 s1)^k w") {
  Rng rng(41);
  for (int i = 0; i < 2000; ++i) {
    const long k = rng.uniform(-9, 9);
    const bool first = rng.coin();
    const BraidWord w = random_tail(rng, first, static_cast<std::size_t>(rng.uniform(0, 15)));
    const BraidWord b = concat(power(delta3(), k), w);
    const TorusDecomposition d = decompose(b);
    CHECK_MESSAGE(d.k == k, to_string(b));
    CHECK(braid3_equal(concat(power(delta3(), d.k), d.w), b));
    // Alphabet and parity match the case tag.
    const bool case12 = d.case_tag <= 2;
    for (int l : d.w.letters()) CHECK((case12 ? (l == -1 || l == 2) : (l == 1 || l == -2)));
    const bool even = d.k % 2 == 0;
    CHECK(even == (d.case_tag == 1 || d.case_tag == 4));
  }
}

TEST_CASE("rotation number") {
  CHECK(rot(power(delta3(), 4)) == 1);
  CHECK(rot(parse3(kExample)) == Rational(1, 2));
  for (long m = 0; m <= 30; ++m) CHECK(rot(family(2, m)) == Rational(1, 2));
  CHECK(rot(BraidWord(3)) == 0);
}

TEST_CASE("lk = 12 rot + Phi on examples and random words") {
  CHECK(verify_theorem_lk(parse3(kExample)));
  CHECK(verify_theorem_lk(BraidWord(3)));
  Rng rng(43);
  for (int i = 0; i < 3000; ++i) {
    const BraidWord b = random_braid(rng, 3, 40);
    REQUIRE(verify_theorem_lk(b));
  }
}

TEST_CASE("central shift moves rot by 1/2 and leaves Phi alone") {
  Rng rng(47);
  const BraidWord z = power(delta3(), 2);
  for (int i = 0; i < 500; ++i) {
    const BraidWord b = random_braid_upto(rng, 3, 25);
    CHECK(rot(concat(z, b)) == rot(b) + Rational(1, 2));
    CHECK(phi(concat(z, b)) == phi(b));
  }
}

TEST_CASE("right-veering examples") {
  CHECK(right_veering(parse3(kExample)).answer == Answer::Yes);
  CHECK(right_veering(w3({1, 2})).answer == Answer::Yes);
  const Verdict inv = right_veering(w3({-1}));
  CHECK(inv.answer == Answer::No);
  CHECK(inv.rule == "reducible");
  REQUIRE(inv.find("n") != nullptr);
  CHECK(*inv.find("n") == "0");
  CHECK(*inv.find("m") == "-1");
  CHECK(right_veering(w3({1})).answer == Answer::Yes);
  CHECK(right_veering(BraidWord(3)).answer == Answer::Yes);
}

TEST_CASE("periodic lifts: a_i (s1 s2 s1)^{2k} is right-veering exactly for k >= 0") {
  const std::vector<BraidWord> lifts{delta3(), w3({1, 2}), power(w3({1, 2}), 2)};
  CHECK(project_b3(lifts[0]) == SL2Matrix(0, 1, -1, 0));
  CHECK(project_b3(lifts[1]) == SL2Matrix(1, 1, -1, 0));
  CHECK(PSL2Element(project_b3(lifts[2])) == PSL2Element(SL2Matrix(0, 1, -1, -1)));
  Rng rng(53);
  for (const auto& a : lifts)
    for (long k = -3; k <= 3; ++k) {
      const BraidWord lift = concat(a, power(delta3(), 2 * k));
      const BraidWord conj = conjugate(lift, random_braid_upto(rng, 3, 8));
      for (const auto& b : {lift, conj}) {
        const Verdict v = right_veering(b);
        CHECK(v.rule == "periodic");
        CHECK((v.answer == Answer::Yes) == (k >= 0));
      }
    }
}

TEST_CASE("reducible right-veering reads (n, m) with lk = 6n + m") {
  Rng rng(59);
  for (int i = 0; i < 300; ++i) {
    const long n = rng.uniform(-3, 3), m = rng.uniform(-6, 6);
    if (m == 0) continue;
    const BraidWord g = random_braid_upto(rng, 3, 8);
    const BraidWord b = concat(power(delta3(), 2 * n), conjugate(power(w3({1}), m), g));
    const Verdict v = right_veering(b);
    REQUIRE(v.rule == "reducible");
    CHECK(*v.find("n") == std::to_string(n));
    CHECK(*v.find("m") == std::to_string(m));
    CHECK((v.answer == Answer::Yes) == (n > 0 || (n == 0 && m >= 0)));
  }
}

TEST_CASE("Anosov right-veering thresholds") {
  Rng rng(61);
  int unknown = 0;
  for (int i = 0; i < 500; ++i) {
    const BraidWord b = random_braid_upto(rng, 3, 20);
    if (classify(project_b3(b)) != Classification::Anosov) continue;
    const Verdict v = right_veering(b);
    if (rot(b) >= Rational(1, 2)) CHECK(v.answer == Answer::Yes);
    else if (rot(invert(b)) >= Rational(1, 2)) CHECK(v.answer == Answer::No);
    else {
      CHECK(v.answer == Answer::Unknown);
      ++unknown;
    }
  }
  CHECK(unknown > 0);
}

TEST_CASE("quasipositivity examples") {
  const Verdict m5 = quasipositive_verdict(family(2, 5));
  CHECK(m5.answer == Answer::No);
  std::vector<std::string> fired{m5.rule};
  fired.insert(fired.end(), m5.also_fired.begin(), m5.also_fired.end());
  CHECK(std::find(fired.begin(), fired.end(), "-phi>=10rot") != fired.end());

  const QpWitness witness = parse_witness("2 | 1 ; 1 | 2", 3);
  CHECK(braid3_equal(expand(witness, 3), parse3("2 1 -2 1 2 -1")));
  const Verdict m4 = quasipositive_verdict(family(2, 4), witness);
  CHECK(m4.answer == Answer::Yes);
  CHECK(m4.rule == "witness");
  CHECK(verify_certificate(family(2, 4), m4, witness));

  const Verdict ex = quasipositive_verdict(parse3(kExample));
  CHECK(ex.answer == Answer::No);
  CHECK(ex.rule == "lk=2,word-equations");
  CHECK(*ex.find("W") == "LLLLRLRL");
  CHECK(verify_certificate(parse3(kExample), ex));
}

TEST_CASE("obstructions fire in order") {
  CHECK(quasipositive_verdict(w3({-1})).rule == "lk<0");
  CHECK(quasipositive_verdict(w3({1, -2})).rule == "lk=0,nontrivial");
  CHECK(quasipositive_verdict(BraidWord(3)).answer == Answer::Yes);
  CHECK(quasipositive_verdict(w3({1, -1})).answer != Answer::No);
  CHECK(quasipositive_verdict(concat(w3({1, 1}), w3({-2}))).rule == "lk=1,not-conjugate-to-half-twist");
  CHECK(quasipositive_verdict(conjugate(w3({1}), w3({2, -1, 2}))).answer != Answer::No);
  // Positive words are accepted without a witness.
  CHECK(quasipositive_verdict(w3({1, 2, 2, 1})).rule == "positive-word");
  // Obstructions (i), (ii) apply in any braid group.
  CHECK(quasipositive_verdict(BraidWord(5, {3, -4})).rule == "lk=0,nontrivial");
  CHECK(quasipositive_verdict(BraidWord(6, {-5})).rule == "lk<0");
  CHECK(quasipositive_verdict(BraidWord(4, {2, 3, -2, -3})).answer == Answer::No);
}

TEST_CASE("witnesses are checked against the word") {
  const QpWitness good = parse_witness("1 | 2", 3);
  CHECK(quasipositive_verdict(conjugate(w3({2}), w3({1})), good).answer == Answer::Yes);
  const Verdict rejected = quasipositive_verdict(w3({-1}), good);
  CHECK(rejected.answer == Answer::No);
  CHECK(rejected.find("witness_rejected") != nullptr);
  CHECK_THROWS_AS(parse_witness("1 | 3", 3), InputError);
  CHECK_THROWS_AS(parse_witness("1 2", 3), InputError);
}

TEST_CASE("verdict certificates re-verify") {
  Rng rng(67);
  for (int i = 0; i < 1500; ++i) {
    const BraidWord b = random_braid_upto(rng, 3, 18);
    const Verdict v = quasipositive_verdict(b);
    CHECK_MESSAGE(verify_certificate(b, v), to_string(b));
  }
}

TEST_CASE("Dehn twist delta triples") {
  const DeltaTriple base = dehn_twist_delta(BraidWord(3), w3({1}));
  CHECK(base == DeltaTriple{1, 0, 1});
  CHECK_THROWS_AS(dehn_twist_delta(BraidWord(3), w3({1, 1})), InputError);
  CHECK_THROWS_AS(dehn_twist_delta(BraidWord(3), w3({-1})), InputError);
  Rng rng(71);
  const DeltaTriple a{1, 0, 1}, b{1, Rational(1, 4), -2}, c{1, Rational(1, 2), -5};
  bool saw_b = false, saw_c = false;
  for (int i = 0; i < 1000; ++i) {
    const BraidWord twist = conjugate(w3({1}), random_braid_upto(rng, 3, 10));
    const DeltaTriple t0 = dehn_twist_delta(BraidWord(3), twist);
    CHECK((t0 == a || t0 == b));
    const DeltaTriple t = dehn_twist_delta(random_braid_upto(rng, 3, 20), twist);
    CHECK((t == a || t == b || t == c));
    saw_b |= t == b;
    saw_c |= t == c;
  }
  CHECK(saw_b);
  CHECK(saw_c);
}

TEST_CASE("family frontier of the inequality obstruction") {
  CHECK(psi_bound(0) == 1);
  CHECK(psi_bound(4) == 2);
  CHECK(psi_bound(5) == 3);
  CHECK(psi_bound(7) == 3);
  CHECK(psi_bound(8) == 4);
  const PsiReport m5 = family_psi_check(5);
  REQUIRE(m5.rows.size() == 3);
  CHECK(m5.rows[2].fires);
  const PsiReport m4 = family_psi_check(4);
  REQUIRE(m4.rows.size() == 2);
  CHECK(m4.rows[1].fires);
  const PsiReport m0 = family_psi_check(0);
  REQUIRE(m0.rows.size() == 1);
  CHECK_FALSE(m0.rows[0].fires);
  for (long m = 0; m <= 25; ++m) CHECK(family_psi_check(m).consistent);
}

TEST_CASE("cochain identity dPhi = -12 drot") {
  Rng rng(73);
  for (int i = 0; i < 1000; ++i) {
    const BraidWord x = random_braid_upto(rng, 3, 20), y = random_braid_upto(rng, 3, 20);
    const long dphi = phi(x) + phi(y) - phi(concat(x, y));
    const Rational drot = rot(x) + rot(y) - rot(concat(x, y));
    CHECK(Rational(dphi) == -12 * drot);
  }
}
