#include "veerlab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace veerlab {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) {
  return Polynomial(std::vector<Rational>{c0, c1});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring.
  Polynomial x = linear(a, b);
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Polynomial(*it);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

void Polynomial::divmod(const Polynomial& d, Polynomial& q, Polynomial& r) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = d.degree();
  std::vector<Rational> quot(std::max(0, degree() - dd + 1), Rational(0));
  for (int k = degree(); k >= dd; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / d.leading();
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
  }
  q = Polynomial(std::move(quot));
  r = Polynomial(std::move(rem));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational mag = abs(c);
    if (mag != 1 || k == 0) os << veerlab::to_string(Rational(mag));
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) return;
  chain_.push_back(p);
  chain_.push_back(p.derivative());
  while (!chain_.back().is_zero()) {
    Polynomial q, r;
    chain_[chain_.size() - 2].divmod(chain_.back(), q, r);
    chain_.push_back(-r);
  }
  chain_.pop_back();
  // With repeated roots the chain ends in gcd(p, p'), which vanishes at those
  // roots; dividing it out gives the chain of the squarefree part.
  const Polynomial g = chain_.back();
  if (g.degree() > 0)
    for (auto& c : chain_) {
      Polynomial q, r;
      c.divmod(g, q, r);
      c = q;
    }
}

int SturmChain::sign_changes(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::roots_in(const Rational& lo, const Rational& hi) const {
  if (chain_.empty()) throw std::domain_error("Sturm chain of the zero polynomial");
  return sign_changes(lo) - sign_changes(hi);
}

bool has_root_in(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return true;
  if (p.degree() == 0) return false;
  if (p(lo) == 0 || p(hi) == 0) return true;
  return SturmChain(p).roots_in(lo, hi) > 0;
}

QMatrix evaluate(const PolyMatrix& m, const Rational& t) {
  return m.map([&](const Polynomial& p) { return p(t); });
}

PolyMatrix constant(const QMatrix& m) {
  return m.map([](const Rational& x) { return Polynomial(x); });
}

PolyMatrix compose_affine(const PolyMatrix& m, const Rational& a, const Rational& b) {
  return m.map([&](const Polynomial& p) { return p.compose_affine(a, b); });
}

int max_degree(const PolyMatrix& m) {
  int d = -1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d = std::max(d, m(r, c).degree());
  return d;
}

Polynomial determinant(const PolyMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return Polynomial(1);
  const int deg_bound = std::max(0, max_degree(m)) * static_cast<int>(m.rows());
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= deg_bound; ++k) {
    xs.emplace_back(k);
    ys.push_back(determinant(evaluate(m, xs.back())));
  }
  // Lagrange interpolation through (xs, ys).
  Polynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == 0) continue;
    Polynomial basis(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= Polynomial::linear(-xs[j], 1);
      denom *= xs[i] - xs[j];
    }
    result += basis * Polynomial(Rational(ys[i] / denom));
  }
  return result;
}

}  // namespace veerlab
