#include "veerlab/farey.hpp"

#include "veerlab/errors.hpp"

namespace veerlab {

ExtSlope::ExtSlope(Integer q_, Integer p_) : q(std::move(q_)), p(std::move(p_)) {
  if (q == 0 && p == 0) throw InputError("slope (0, 0) is undefined");
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  q /= g;
  p /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    q = -q;
    p = -p;
  }
}

std::string to_string(const ExtSlope& s) { return s.p.get_str() + "/" + s.q.get_str(); }

FareyEdge::FareyEdge(ExtSlope a_, ExtSlope b_) : a(std::move(a_)), b(std::move(b_)) {
  const Integer det = a.q * b.p - a.p * b.q;
  if (abs(det) != 1) throw InputError("slopes " + to_string(a) + " and " + to_string(b) + " are not Farey neighbors");
}

std::string to_string(const FareyEdge& e) { return to_string(e.a) + " -> " + to_string(e.b); }

ExtSlope act(const SL2Matrix& m, const ExtSlope& s) { return ExtSlope(m.a * s.q + m.b * s.p, m.c * s.q + m.d * s.p); }

FareyEdge edge_of(const PSL2Element& g) {
  const SL2Matrix& m = g.representative();
  return FareyEdge(ExtSlope(m.a, m.c), ExtSlope(m.b, m.d));
}

PSL2Element element_of(const FareyEdge& e) {
  SL2Matrix m;
  m.a = e.a.q;
  m.c = e.a.p;
  m.b = e.b.q;
  m.d = e.b.p;
  if (m.a * m.d - m.b * m.c == -1) {
    m.b = -m.b;
    m.d = -m.d;
  }
  return PSL2Element(m);
}

FareyEdge neighbor(const FareyEdge& e, Move move) {
  const SL2Matrix g = element_of(e).representative();
  switch (move) {
    case Move::A: return edge_of(PSL2Element(g * mod::A()));
    case Move::B: return edge_of(PSL2Element(g * mod::B()));
    default: return edge_of(PSL2Element(g * mod::Binv()));
  }
}

TurnWord::TurnWord(std::string s) : letters(std::move(s)) {
  for (char c : letters)
    if (c != 'L' && c != 'R') throw InputError(std::string("turn word letter '") + c + "' is not L or R");
}

long TurnWord::rights_minus_lefts() const {
  long n = 0;
  for (char c : letters) n += c == 'R' ? 1 : -1;
  return n;
}

TurnWord TurnWord::inverse() const {
  std::string s(letters.rbegin(), letters.rend());
  for (char& c : s) c = c == 'L' ? 'R' : 'L';
  return TurnWord(std::move(s));
}

namespace {

const SL2Matrix& turn_matrix(char c) {
  static const SL2Matrix right = mod::B() * mod::A();
  static const SL2Matrix left = mod::Binv() * mod::A();
  return c == 'R' ? right : left;
}

bool is_base_edge(const FareyEdge& e) {
  return e.same_undirected(FareyEdge(ExtSlope(1, 0), ExtSlope::infinity()));
}

int side_sign(const ExtSlope& s) { return sgn(s.q) * sgn(s.p); }

}  // namespace

TurnPath turn_path(const PSL2Element& g) {
  const FareyEdge target = edge_of(g);
  TurnPath path;
  path.edges.push_back(FareyEdge(ExtSlope(1, 0), ExtSlope::infinity()));
  SL2Matrix h;
  FareyEdge cur = target;  // target pulled back by h^-1
  while (!is_base_edge(cur)) {
    const int side = side_sign(cur.a) + side_sign(cur.b);
    if (side < 0) {
      if (!path.word.empty() || path.lower) throw InvariantViolation("Farey walk changed sides after the first step");
      path.lower = true;
      h = h * mod::A();
      cur = FareyEdge(act(mod::A().inverse(), cur.a), act(mod::A().inverse(), cur.b));
      continue;
    }
    if (side == 0) throw InvariantViolation("Farey walk met an edge on both sides of 0-infinity");
    // Slopes in [0, 1] lie past the edge 0-1, slopes in [1, infinity] past 1-infinity.
    const bool low = cur.a.p <= cur.a.q && cur.b.p <= cur.b.q;
    const bool high = cur.a.p >= cur.a.q && cur.b.p >= cur.b.q;
    if (low == high) throw InvariantViolation("Farey walk met an edge crossing the triangle 0, 1, infinity");
    const char turn = low ? 'R' : 'L';
    const SL2Matrix& m = turn_matrix(turn);
    const SL2Matrix mi = m.inverse();
    h = h * m;
    cur = FareyEdge(act(mi, cur.a), act(mi, cur.b));
    path.word.letters.push_back(turn);
    path.edges.push_back(edge_of(PSL2Element(h)));
  }
  const FareyEdge reached = edge_of(PSL2Element(h));
  path.reversed = !(reached == target);
  if (!(walk(path.lower, path.word, path.reversed) == g))
    throw InvariantViolation("Farey walk does not reproduce " + to_string(g.representative()));
  return path;
}

TurnWord turn_word(const PSL2Element& g) { return turn_path(g).word; }

long rademacher_turns(const PSL2Element& g) { return turn_word(g).rights_minus_lefts(); }

PSL2Element walk(bool lower, const TurnWord& w, bool reversed) {
  SL2Matrix h;
  if (lower) h = mod::A();
  for (char c : w.letters) h = h * turn_matrix(c);
  if (reversed) h = h * mod::A();
  return PSL2Element(h);
}

std::vector<TurnWord> solve_xp_eq_pw(const TurnWord& X, const TurnWord& W) {
  std::vector<TurnWord> out;
  if (X.size() != W.size()) return out;
  if (X.empty()) {
    out.emplace_back();
    return out;
  }
  for (std::size_t i = 0; i < X.size(); ++i) {
    const std::string u = X.letters.substr(0, i), v = X.letters.substr(i);
    if (v + u == W.letters) out.emplace_back(u);
  }
  return out;
}

bool xp_eq_pw_solvable(const TurnWord& X, const TurnWord& W) { return !solve_xp_eq_pw(X, W).empty(); }

Verdict lk2_nonqp_certificate(const TurnWord& W) {
  Verdict v;
  v.fact("W", W.letters);
  const TurnWord LL("LL"), L("L");
  const long n = static_cast<long>(W.size());
  if (n < 4 || (n - 4) % 2 != 0) {
    v.answer = Answer::Yes;
    v.rule = "word-equations";
    v.fact("reason", "length of W is not 4 + 2k, so every family is length-infeasible");
    return v;
  }
  const std::size_t k = static_cast<std::size_t>((n - 4) / 2);
  auto sub = [&](std::size_t pos, std::size_t len) { return TurnWord(W.letters.substr(pos, len)); };
  auto no = [&](const std::string& family) -> Verdict& {
    v.answer = Answer::No;
    v.rule = "word-equations";
    v.fact("family", family);
    return v;
  };

  // (1) L P LL P^-1 L = W: P is read off W.
  {
    const TurnWord P = sub(1, k);
    if (L + P + LL + P.inverse() + L == W) return no("1").fact("P", P.letters);
  }
  // (2) P1 LL P1^-1 P2 LL P2^-1 = W with |P1| + |P2| = k.
  for (std::size_t i = 0; i <= k; ++i) {
    const TurnWord P1 = sub(0, i);
    const TurnWord P2 = sub(2 * i + 2, k - i);
    if (P1 + LL + P1.inverse() + P2 + LL + P2.inverse() == W) return no("2").fact("P1", P1.letters).fact("P2", P2.letters);
  }
  // (3) X P1 = P1 W with X = P2 LL P2^-1 LL, and (4) W P1 = P1 X' with
  // X' = LL P2 LL P2^-1. Either needs the X side to be a rotation of W.
  for (std::size_t r = 0; r < W.size(); ++r) {
    const TurnWord rot(W.letters.substr(r) + W.letters.substr(0, r));
    const TurnWord P2a(rot.letters.substr(0, k));
    const TurnWord X = P2a + LL + P2a.inverse() + LL;
    if (X == rot) {
      const auto sols = solve_xp_eq_pw(X, W);
      if (sols.empty()) throw InvariantViolation("rotation of W not solvable as XP = PW");
      const TurnWord& P1 = sols.front();
      if (!(P2a + LL + P2a.inverse() + LL + P1 == P1 + W)) throw InvariantViolation("family 3 witness fails");
      return no("3").fact("P1", P1.letters).fact("P2", P2a.letters);
    }
    const TurnWord P2b(rot.letters.substr(2, k));
    const TurnWord Xp = LL + P2b + LL + P2b.inverse();
    if (Xp == rot) {
      const auto sols = solve_xp_eq_pw(W, Xp);
      if (sols.empty()) throw InvariantViolation("rotation of W not solvable as XP = PW");
      const TurnWord& P1 = sols.front();
      if (!(P1 + LL + P2b + LL + P2b.inverse() == W + P1)) throw InvariantViolation("family 4 witness fails");
      return no("4").fact("P1", P1.letters).fact("P2", P2b.letters);
    }
  }
  v.answer = Answer::Yes;
  v.rule = "word-equations";
  v.fact("reason", "no family (1)-(4) admits a solution");
  return v;
}

}  // namespace veerlab
