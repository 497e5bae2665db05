#include "veerlab/modular.hpp"

#include <algorithm>
#include <sstream>

#include "veerlab/errors.hpp"

namespace veerlab {

SL2Matrix::SL2Matrix(Integer a_, Integer b_, Integer c_, Integer d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a * d - b * c != 1) throw InputError("matrix " + veerlab::to_string(*this) + " does not have determinant 1");
}

SL2Matrix SL2Matrix::inverse() const {
  SL2Matrix m;
  m.a = d;
  m.b = -b;
  m.c = -c;
  m.d = a;
  return m;
}

SL2Matrix SL2Matrix::operator-() const {
  SL2Matrix m;
  m.a = -a;
  m.b = -b;
  m.c = -c;
  m.d = -d;
  return m;
}

IntMatrix SL2Matrix::to_matrix() const {
  IntMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
  SL2Matrix m;
  m.a = x.a * y.a + x.b * y.c;
  m.b = x.a * y.b + x.b * y.d;
  m.c = x.c * y.a + x.d * y.c;
  m.d = x.c * y.b + x.d * y.d;
  return m;
}

SL2Matrix parse_matrix(const std::string& text) {
  std::string flat = text;
  const auto semi = flat.find(';');
  if (semi == std::string::npos || flat.find(';', semi + 1) != std::string::npos)
    throw InputError("matrix must have the form 'a b; c d'");
  flat[semi] = ' ';
  std::istringstream in(flat);
  std::vector<Integer> v;
  std::string tok;
  while (in >> tok) {
    Integer z;
    if (z.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0) throw InputError("invalid matrix entry '" + tok + "'");
    v.push_back(z);
  }
  if (v.size() != 4) throw InputError("matrix must have exactly four entries");
  if (text.substr(0, semi).find_first_not_of(" \t") == std::string::npos) throw InputError("matrix row is empty");
  return SL2Matrix(v[0], v[1], v[2], v[3]);
}

std::string to_string(const SL2Matrix& m) {
  return "(" + m.a.get_str() + " " + m.b.get_str() + "; " + m.c.get_str() + " " + m.d.get_str() + ")";
}

namespace mod {
SL2Matrix A() { return SL2Matrix(0, 1, -1, 0); }
SL2Matrix B() { return SL2Matrix(1, -1, 1, 0); }
SL2Matrix Binv() { return SL2Matrix(0, 1, -1, 1); }
SL2Matrix sigma1() { return SL2Matrix(1, 0, -1, 1); }
SL2Matrix sigma2() { return SL2Matrix(1, 1, 0, 1); }
}  // namespace mod

PSL2Element::PSL2Element(const SL2Matrix& m) : rep_(m) {
  int s = sgn(m.a);
  if (s == 0) s = sgn(m.b);
  if (s < 0) rep_ = -m;
}

SL2Matrix project_b3(const BraidWord& b) {
  if (b.strands() != 3) throw InputError("projection to SL(2,Z) requires a word in B_3");
  const SL2Matrix s1 = mod::sigma1(), s2 = mod::sigma2();
  const SL2Matrix s1i = s1.inverse(), s2i = s2.inverse();
  SL2Matrix m;
  for (int l : b.letters()) {
    switch (l) {
      case 1: m = m * s1; break;
      case 2: m = m * s2; break;
      case -1: m = m * s1i; break;
      default: m = m * s2i; break;
    }
  }
  return m;
}

Classification classify(const SL2Matrix& m) {
  const Integer t = abs(m.trace());
  if (t < 2 || m == SL2Matrix::identity() || m == -SL2Matrix::identity()) return Classification::Periodic;
  if (t == 2) return Classification::Reducible;
  return Classification::Anosov;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Periodic: return "Periodic";
    case Classification::Reducible: return "Reducible";
    default: return "Anosov";
  }
}

namespace {

// Push one syllable onto a reduced syllable stack in Z/2 * Z/3.
void push_syllable(std::vector<int>& stack, int s) {
  if (stack.empty()) {
    stack.push_back(s);
    return;
  }
  int& top = stack.back();
  if (s == 0) {
    if (top == 0) stack.pop_back();
    else stack.push_back(0);
    return;
  }
  if (top == 0) {
    stack.push_back(s);
    return;
  }
  int e = ((top + s) % 3 + 3) % 3;
  if (e == 0) stack.pop_back();
  else top = e == 1 ? 1 : -1;
}

}  // namespace

NormalForm normal_form(const PSL2Element& g) {
  // Euclid: M = T^{n_1} A T^{n_2} A ... T^{n_m} up to sign, T = (1 1; 0 1).
  SL2Matrix m = g.representative();
  std::vector<Integer> powers;
  while (m.c != 0) {
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), m.a.get_mpz_t(), m.c.get_mpz_t());
    powers.push_back(n);
    // T^{-n} M then A^{-1} (.)
    const Integer a2 = m.a - n * m.c, b2 = m.b - n * m.d;
    SL2Matrix next;
    next.a = -m.c;
    next.b = -m.d;
    next.c = a2;
    next.d = b2;
    m = next;
  }
  powers.push_back(m.a * m.b);

  // T = B A and T^{-1} = A B^{-1} in PSL(2,Z).
  std::vector<int> stack;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (i) push_syllable(stack, 0);
    const Integer& n = powers[i];
    const bool pos = n > 0;
    for (Integer k = 0; k < abs(n); ++k) {
      if (pos) {
        push_syllable(stack, 1);
        push_syllable(stack, 0);
      } else {
        push_syllable(stack, 0);
        push_syllable(stack, -1);
      }
    }
  }

  NormalForm nf;
  if (!stack.empty()) {
    int current = 0;
    for (int s : stack) {
      if (s == 0) {
        nf.exponents.push_back(current);
        current = 0;
      } else {
        current = s;
      }
    }
    nf.exponents.push_back(current);
  }
  if (!(evaluate(nf) == g)) throw InvariantViolation("normal form does not reproduce " + to_string(g.representative()));
  return nf;
}

PSL2Element evaluate(const NormalForm& nf) {
  SL2Matrix m;
  for (std::size_t i = 0; i < nf.exponents.size(); ++i) {
    if (i) m = m * mod::A();
    if (nf.exponents[i] == 1) m = m * mod::B();
    else if (nf.exponents[i] == -1) m = m * mod::Binv();
  }
  return PSL2Element(m);
}

std::string to_string(const NormalForm& nf) {
  if (nf.is_identity()) return "1";
  std::string s;
  auto add = [&](const std::string& t) {
    if (!s.empty()) s += ' ';
    s += t;
  };
  for (std::size_t i = 0; i < nf.exponents.size(); ++i) {
    if (i) add("A");
    if (nf.exponents[i] == 1) add("B");
    else if (nf.exponents[i] == -1) add("B^-1");
  }
  return s;
}

long rademacher(const PSL2Element& g) {
  long phi = 0;
  for (int r : normal_form(g).exponents) phi += r;
  return phi;
}

std::vector<int> syllables(const NormalForm& nf) {
  std::vector<int> out;
  for (std::size_t i = 0; i < nf.exponents.size(); ++i) {
    if (i) out.push_back(0);
    if (nf.exponents[i] != 0) out.push_back(nf.exponents[i]);
  }
  return out;
}

std::vector<int> conjugacy_invariant(const PSL2Element& g) {
  std::vector<int> s = syllables(normal_form(g));
  // Alternating word: first and last share a type only when the length is odd.
  while (s.size() >= 2 && (s.front() == 0) == (s.back() == 0)) {
    if (s.front() == 0) {
      s.erase(s.begin());
      s.pop_back();
    } else {
      const int e = ((s.front() + s.back()) % 3 + 3) % 3;
      s.pop_back();
      if (e == 0) s.erase(s.begin());
      else s.front() = e == 1 ? 1 : -1;
    }
  }
  if (s.size() <= 1) return s;
  std::vector<int> best = s;
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::vector<int> rot(s.begin() + static_cast<long>(r), s.end());
    rot.insert(rot.end(), s.begin(), s.begin() + static_cast<long>(r));
    best = std::min(best, rot);
  }
  return best;
}

bool psl_conjugate(const PSL2Element& g, const PSL2Element& h) {
  return conjugacy_invariant(g) == conjugacy_invariant(h);
}

long rademacher_class(const PSL2Element& g) {
  long sum = 0;
  for (int s : conjugacy_invariant(g)) sum += s;
  return sum;
}

}  // namespace veerlab
