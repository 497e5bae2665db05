#pragma once

#include <string>
#include <vector>

#include "veerlab/braid.hpp"
#include "veerlab/matrix.hpp"
#include "veerlab/rational.hpp"

namespace veerlab {

// Element of SL(2,Z): (a b; c d) with ad - bc = 1.
struct SL2Matrix {
  Integer a = 1, b = 0, c = 0, d = 1;

  SL2Matrix() = default;
  SL2Matrix(Integer a_, Integer b_, Integer c_, Integer d_);  // throws InputError unless det = 1

  static SL2Matrix identity() { return {}; }
  Integer trace() const { return a + d; }
  SL2Matrix inverse() const;
  SL2Matrix operator-() const;
  IntMatrix to_matrix() const;

  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y);
  friend bool operator==(const SL2Matrix& x, const SL2Matrix& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

SL2Matrix parse_matrix(const std::string& text);  // "a b; c d"
std::string to_string(const SL2Matrix& m);

// Named elements. A has order 2 and B order 3 in PSL(2,Z).
namespace mod {
SL2Matrix A();
SL2Matrix B();
SL2Matrix Binv();
SL2Matrix sigma1();  // image of sigma_1: (1 0; -1 1)
SL2Matrix sigma2();  // image of sigma_2: (1 1; 0 1)
}  // namespace mod

// PSL(2,Z) class, stored by its representative whose first nonzero entry
// (in the order a, b, c, d) is positive.
class PSL2Element {
 public:
  PSL2Element() = default;
  explicit PSL2Element(const SL2Matrix& m);
  const SL2Matrix& representative() const { return rep_; }
  bool is_identity() const { return rep_ == SL2Matrix::identity(); }
  PSL2Element inverse() const { return PSL2Element(rep_.inverse()); }
  friend PSL2Element operator*(const PSL2Element& x, const PSL2Element& y) {
    return PSL2Element(x.rep_ * y.rep_);
  }
  friend bool operator==(const PSL2Element& x, const PSL2Element& y) { return x.rep_ == y.rep_; }

 private:
  SL2Matrix rep_;
};

SL2Matrix project_b3(const BraidWord& b);

enum class Classification { Periodic, Reducible, Anosov };
Classification classify(const SL2Matrix& m);
std::string to_string(Classification c);

// B^{r_1} A B^{r_2} A ... A B^{r_k}; the identity has no exponents.
struct NormalForm {
  std::vector<int> exponents;
  bool is_identity() const { return exponents.empty(); }
  std::size_t a_count() const { return exponents.empty() ? 0 : exponents.size() - 1; }
  friend bool operator==(const NormalForm& x, const NormalForm& y) { return x.exponents == y.exponents; }
};

NormalForm normal_form(const PSL2Element& g);
PSL2Element evaluate(const NormalForm& nf);
std::string to_string(const NormalForm& nf);  // e.g. "B A B^-1"
long rademacher(const PSL2Element& g);

// Syllables of a reduced word in Z/2 * Z/3: 0 stands for A, +1/-1 for B^{+-1}.
std::vector<int> syllables(const NormalForm& nf);
// Cyclically reduced syllable word, rotated to its lexicographically least
// rotation. Two elements are conjugate iff these agree.
std::vector<int> conjugacy_invariant(const PSL2Element& g);
bool psl_conjugate(const PSL2Element& g, const PSL2Element& h);

// Exponent sum of the cyclically reduced form: the conjugation-invariant
// Rademacher value.
long rademacher_class(const PSL2Element& g);

}  // namespace veerlab
