#pragma once

#include <string>
#include <vector>

#include "veerlab/matrix.hpp"
#include "veerlab/rational.hpp"

namespace veerlab {

// Univariate polynomial in t with rational coefficients, stored low degree
// first and always trimmed (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT: implicit for Matrix<T>(0)
  Polynomial(const Rational& c);                   // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial t() { return Polynomial(std::vector<Rational>{0, 1}); }
  // c0 + c1 t
  static Polynomial linear(const Rational& c0, const Rational& c1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  // p(a + b t)
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  void divmod(const Polynomial& d, Polynomial& q, Polynomial& r) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Sturm-sequence root isolation. Counts are of distinct real roots.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);
  // Number of distinct roots in the half-open interval (lo, hi].
  int roots_in(const Rational& lo, const Rational& hi) const;
  const std::vector<Polynomial>& chain() const { return chain_; }

 private:
  int sign_changes(const Rational& x) const;
  std::vector<Polynomial> chain_;
};

// True when p vanishes somewhere in the closed interval [lo, hi]. The zero
// polynomial vanishes everywhere.
bool has_root_in(const Polynomial& p, const Rational& lo, const Rational& hi);

using PolyMatrix = Matrix<Polynomial>;

QMatrix evaluate(const PolyMatrix& m, const Rational& t);
PolyMatrix constant(const QMatrix& m);
PolyMatrix compose_affine(const PolyMatrix& m, const Rational& a, const Rational& b);
int max_degree(const PolyMatrix& m);
// Exact determinant by evaluation at deg+1 points and Lagrange interpolation.
Polynomial determinant(const PolyMatrix& m);

}  // namespace veerlab
