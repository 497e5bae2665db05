#include "veerlab/torus.hpp"

#include <sstream>

#include "veerlab/burau.hpp"
#include "veerlab/errors.hpp"

namespace veerlab {

namespace {

void require_b3(const BraidWord& b, const char* what) {
  if (b.strands() != 3) throw InputError(std::string(what) + " requires a word in B_3");
}

PSL2Element image(const BraidWord& b) { return PSL2Element(project_b3(b)); }

bool is_identity_b3(const BraidWord& b) { return braid3_equal(b, BraidWord(3)); }

}  // namespace

TorusDecomposition decompose(const BraidWord& b) {
  require_b3(b, "decompose");
  const TurnPath path = turn_path(image(b));
  TorusDecomposition d;
  d.case_tag = path.lower ? (path.reversed ? 4 : 2) : (path.reversed ? 3 : 1);
  const bool first_alphabet = d.case_tag <= 2;
  std::vector<int> letters;
  for (char c : path.word.letters) {
    if (first_alphabet) letters.push_back(c == 'R' ? 2 : -1);
    else letters.push_back(c == 'R' ? 1 : -2);
  }
  d.w = BraidWord(3, std::move(letters));
  const long diff = linking_number(b) - linking_number(d.w);
  if (diff % 3 != 0) throw InvariantViolation("lk(b) - lk(w) is not divisible by 3 for " + to_string(b));
  d.k = diff / 3;
  const bool odd = (d.k % 2) != 0;
  if (odd != (d.case_tag == 2 || d.case_tag == 3))
    throw InvariantViolation("parity of k does not match case " + std::to_string(d.case_tag) + " for " + to_string(b));
  if (!braid3_equal(concat(power(delta3(), d.k), d.w), b))
    throw InvariantViolation("decomposition does not reassemble to " + to_string(b));
  return d;
}

Rational rot(const BraidWord& b) { return make_rational(decompose(b).k, 4); }

long phi(const BraidWord& b) {
  require_b3(b, "phi");
  return rademacher(image(b));
}

bool verify_theorem_lk(const BraidWord& b) { return Rational(linking_number(b)) == 12 * rot(b) + phi(b); }

namespace {

// Primitive integer vector spanning ker(M - eps I) for a parabolic M.
std::pair<Integer, Integer> fixed_column(const SL2Matrix& m, const Integer& eps) {
  Integer q, p;
  if (m.b != 0 || m.a != eps) {
    q = -m.b;
    p = m.a - eps;
  } else {
    q = -(m.d - eps);
    p = m.c;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  return {q / g, p / g};
}

struct ParabolicData {
  Integer eps;  // trace / 2
  Integer m;    // h^-1 M h = (eps 0; -eps m eps)
  std::string slope;
};

// Conjugates the fixed slope of a parabolic M to infinity.
ParabolicData parabolic_data(const SL2Matrix& m) {
  ParabolicData d;
  d.eps = m.trace() / 2;
  const auto [q, p] = fixed_column(m, d.eps);
  // h = (s q; -t p) sends infinity = (0, 1) to (q, p); s p + t q = 1.
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  const SL2Matrix h(s, q, -t, p);
  const SL2Matrix n = h.inverse() * m * h;
  if (n.b != 0 || n.a != d.eps || n.d != d.eps) throw InvariantViolation("conjugation did not fix infinity");
  d.m = -d.eps * n.c;
  d.slope = to_string(ExtSlope(q, p));
  return d;
}

}  // namespace

Verdict right_veering(const BraidWord& b) {
  require_b3(b, "right_veering");
  const SL2Matrix m = project_b3(b);
  const long lk = linking_number(b);
  const Classification cls = classify(m);
  Verdict v;
  v.fact("classification", to_string(cls)).fact("lk", std::to_string(lk));
  switch (cls) {
    case Classification::Periodic: {
      v.rule = "periodic";
      const bool id = is_identity_b3(b);
      v.answer = (lk > 0 || id) ? Answer::Yes : Answer::No;
      v.fact("identity", id ? "true" : "false");
      return v;
    }
    case Classification::Reducible: {
      v.rule = "reducible";
      const ParabolicData pd = parabolic_data(m);
      const Integer rest = Integer(lk) - pd.m;
      if (rest % 6 != 0) throw InvariantViolation("lk - m is not divisible by 6 for " + to_string(b));
      const Integer nn = rest / 6;
      const Integer parity_sign = (nn % 2 == 0) ? 1 : -1;
      if (parity_sign != pd.eps) throw InvariantViolation("sign of the image does not match the twist parity");
      v.fact("fixed_slope", pd.slope).fact("n", nn.get_str()).fact("m", pd.m.get_str());
      v.answer = (nn > 0 || (nn == 0 && pd.m >= 0)) ? Answer::Yes : Answer::No;
      return v;
    }
    default: {
      v.rule = "anosov";
      const Rational r = rot(b), ri = rot(invert(b));
      v.fact("rot", to_string(r)).fact("rot_inverse", to_string(ri));
      const Rational half(1, 2);
      if (r >= half) v.answer = Answer::Yes;
      else if (ri >= half) v.answer = Answer::No;
      else {
        v.answer = Answer::Unknown;
        v.fact("reason", "rot(b) < 1/2 and rot(b^-1) < 1/2");
      }
      return v;
    }
  }
}

BraidWord expand(const QpWitness& witness, int strands) {
  BraidWord acc(strands);
  for (const auto& f : witness) {
    if (f.conjugator.strands() != strands) throw InputError("witness conjugator has the wrong strand count");
    acc = concat(acc, conjugate(generator(strands, f.generator), f.conjugator));
  }
  return acc;
}

std::string to_string(const QpWitness& witness) {
  std::string s;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) s += " ; ";
    s += to_string(witness[i].conjugator) + " | " + std::to_string(witness[i].generator);
  }
  return s;
}

QpWitness parse_witness(const std::string& text, int strands) {
  QpWitness w;
  std::stringstream all(text);
  std::string part;
  while (std::getline(all, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    const auto bar = part.find('|');
    if (bar == std::string::npos) throw InputError("witness factor '" + part + "' needs the form 'g | i'");
    QpFactor f;
    f.conjugator = parse_braid(part.substr(0, bar), strands);
    const BraidWord gen = parse_braid(part.substr(bar + 1), strands);
    if (gen.length() != 1 || gen.letters()[0] < 0)
      throw InputError("witness factor '" + part + "' must name one positive generator");
    f.generator = gen.letters()[0];
    w.push_back(f);
  }
  return w;
}

namespace {

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() == 3) return braid3_equal(a, b);
  // Outside B_3 only literal equality after free reduction is decided.
  return free_reduce(a) == free_reduce(b);
}

// Proof that b is not the identity for lk = 0, or nullopt if none is found.
std::optional<std::string> nontrivial_proof(const BraidWord& b) {
  if (b.strands() == 3) {
    if (!is_identity_b3(b)) return "PSL(2,Z) image or lk differs from the identity";
    return std::nullopt;
  }
  if (b.strands() == 2) {
    if (!free_reduce(b).empty()) return "B_2 is infinite cyclic";
    return std::nullopt;
  }
  if (free_reduce(b).empty()) return std::nullopt;
  const BraidWord odd = b.strands() % 2 == 0 ? embed_even(b) : b;
  const IntMatrix m = burau_matrix(odd);
  if (!(m == IntMatrix::identity(m.rows()))) return "homology representation is not the identity";
  return std::nullopt;
}

}  // namespace

Verdict quasipositive_verdict(const BraidWord& b, const std::optional<QpWitness>& witness) {
  Verdict v;
  const long lk = linking_number(b);
  v.fact("lk", std::to_string(lk));
  std::vector<std::string> fired;
  std::vector<std::pair<std::string, std::string>> extra;

  if (lk < 0) fired.push_back("lk<0");
  if (lk == 0) {
    if (auto why = nontrivial_proof(b)) {
      fired.push_back("lk=0,nontrivial");
      extra.emplace_back("nontrivial_because", *why);
    }
  }
  if (b.strands() == 3) {
    const PSL2Element g = image(b);
    const Rational r = rot(b);
    const long ph = rademacher(g);
    v.fact("rot", to_string(r)).fact("phi", std::to_string(ph));
    if (lk == 1 && !psl_conjugate(g, PSL2Element(mod::sigma1()))) fired.push_back("lk=1,not-conjugate-to-half-twist");
    // The identity is the empty product of twists, so the inequality is
    // only an obstruction away from it.
    if (Rational(-ph) >= 10 * r && !is_identity_b3(b)) fired.push_back("-phi>=10rot");
    if (lk == 2 && r == Rational(1, 2)) {
      const TurnWord W = turn_word(g);
      const Verdict cert = lk2_nonqp_certificate(W);
      extra.emplace_back("W", W.letters);
      if (cert.answer == Answer::Yes) fired.push_back("lk=2,word-equations");
      else if (const std::string* fam = cert.find("family")) extra.emplace_back("word_equation_family", *fam);
    }
  }
  for (auto& e : extra) v.facts.push_back(e);

  std::optional<std::string> yes_reason;
  if (witness) {
    const BraidWord product = expand(*witness, b.strands());
    if (words_equal(product, b)) yes_reason = "witness";
    else v.fact("witness_rejected", "product " + to_string(product) + " does not equal the word");
  }
  if (!yes_reason && is_positive(b)) yes_reason = "positive-word";

  if (yes_reason) {
    if (!fired.empty())
      throw InvariantViolation("quasipositive word " + to_string(b) + " triggers obstruction " + fired.front());
    v.answer = Answer::Yes;
    v.rule = *yes_reason;
    if (witness && *yes_reason == "witness") v.fact("witness", to_string(*witness));
    return v;
  }
  if (!fired.empty()) {
    v.answer = Answer::No;
    v.rule = fired.front();
    v.also_fired.assign(fired.begin() + 1, fired.end());
    return v;
  }
  v.answer = Answer::Unknown;
  v.rule = "undecided";
  return v;
}

bool verify_certificate(const BraidWord& b, const Verdict& v, const std::optional<QpWitness>& witness) {
  if (v.answer == Answer::Unknown) return true;
  if (v.answer == Answer::Yes) {
    if (v.rule == "positive-word") return is_positive(b);
    if (v.rule == "witness") return witness && words_equal(expand(*witness, b.strands()), b);
    return false;
  }
  std::vector<std::string> rules{v.rule};
  rules.insert(rules.end(), v.also_fired.begin(), v.also_fired.end());
  const long lk = linking_number(b);
  for (const auto& r : rules) {
    bool ok = false;
    if (r == "lk<0") ok = lk < 0;
    else if (r == "lk=0,nontrivial") ok = lk == 0 && nontrivial_proof(b).has_value();
    else if (b.strands() == 3) {
      // Phi through the Farey road rather than the normal form.
      const PSL2Element g = image(b);
      const long ph = rademacher_turns(g);
      const Rational rr = make_rational(decompose(b).k, 4);
      if (r == "lk=1,not-conjugate-to-half-twist") {
        // The shear amount of a parabolic is a complete conjugacy invariant;
        // sigma1 has shear 1.
        const SL2Matrix mm = project_b3(b);
        ok = lk == 1 && (classify(mm) != Classification::Reducible || parabolic_data(mm).m != 1);
      } else if (r == "-phi>=10rot") {
        ok = Rational(-ph) >= 10 * rr && !is_identity_b3(b);
      } else if (r == "lk=2,word-equations") {
        ok = lk == 2 && rr == Rational(1, 2) && lk2_nonqp_certificate(turn_word(g)).answer == Answer::Yes;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool is_positive_twist(const BraidWord& twist) {
  if (twist.strands() != 3) return false;
  return linking_number(twist) == 1 && psl_conjugate(image(twist), PSL2Element(mod::sigma1()));
}

DeltaTriple dehn_twist_delta(const BraidWord& bprime, const BraidWord& twist) {
  require_b3(bprime, "dehn_twist_delta");
  require_b3(twist, "dehn_twist_delta");
  if (!is_positive_twist(twist)) throw InputError("twist " + to_string(twist) + " is not a conjugate of sigma1");
  const BraidWord b = concat(twist, bprime);
  DeltaTriple t;
  t.dlk = linking_number(b) - linking_number(bprime);
  t.drot = rot(b) - rot(bprime);
  t.dphi = phi(b) - phi(bprime);
  return t;
}

long psi_bound(long m) {
  if (m < 0) throw InputError("m must be non-negative");
  const long k = m / 5, r = m % 5;
  return r <= 2 ? 2 * k + 1 : 2 * k + 2;
}

PsiReport family_psi_check(long m) {
  PsiReport rep;
  rep.m = m;
  rep.psi = psi_bound(m);
  for (long j = 0; j < rep.psi; ++j) {
    const BraidWord b = concat(power(delta3(), j), power(BraidWord(3, {1}), -m));
    PsiRow row;
    row.j = j;
    row.phi = phi(b);
    row.rot = rot(b);
    row.fires = Rational(-row.phi) >= 10 * row.rot && !is_identity_b3(b);
    row.expected = 4 * m >= 10 * j && !(m == 0 && j == 0);
    if (row.fires != row.expected) rep.consistent = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace veerlab
