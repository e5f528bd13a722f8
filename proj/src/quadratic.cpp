#include "belyi/quadratic.hpp"

#include <cmath>
#include <sstream>

namespace belyi {

std::pair<BigInt, BigInt> squarefree_split(BigInt x) {
  if (x == 0) throw invalid_input("squarefree_split: zero");
  BigInt sf = x < 0 ? -1 : 1;
  BigInt f = 1;
  BigInt v = boost::multiprecision::abs(x);
  for (BigInt p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) f *= p;
    if (e % 2) sf *= p;
  }
  sf *= v;
  return {sf, f};
}

QuadElem::QuadElem(BigInt d_, Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {
  auto [sf, f] = squarefree_split(d_);
  if (sf == 0 || sf == 1) throw invalid_input("QuadElem: d must not be a perfect square or zero");
  d = sf;
  q *= f;
}

bool QuadElem::operator==(const QuadElem& o) const {
  if (q == 0 && o.q == 0) return p == o.p;
  return d == o.d && p == o.p && q == o.q;
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
  if (q != 0 && o.q != 0 && d != o.d)
    throw invalid_input("QuadElem: mixed fields in addition");
  return QuadElem(q != 0 ? d : o.d, p + o.p, q + o.q);
}

QuadElem QuadElem::operator-(const QuadElem& o) const { return *this + (-o); }

QuadElem QuadElem::operator*(const QuadElem& o) const {
  if (q != 0 && o.q != 0 && d != o.d)
    throw invalid_input("QuadElem: mixed fields in product");
  BigInt dd = q != 0 ? d : o.d;
  return QuadElem(dd, p * o.p + q * o.q * dd, p * o.q + q * o.p);
}

QuadElem QuadElem::inverse() const {
  Rational n = norm();
  if (n == 0) throw invalid_input("QuadElem: division by zero");
  return QuadElem(d, p / n, -q / n);
}

std::string QuadElem::to_string() const {
  std::ostringstream ss;
  if (q == 0) {
    ss << p;
  } else {
    if (p != 0) ss << p;
    if (sign_of(q) > 0 && p != 0) ss << "+";
    if (q == -1)
      ss << "-";
    else if (q != 1)
      ss << q;
    ss << "sqrt(" << d << ")";
  }
  return ss.str();
}

double QuadElem::approx_real() const {
  double pv = static_cast<double>(num(p)) / static_cast<double>(den(p));
  if (d > 0) {
    double qv = static_cast<double>(num(q)) / static_cast<double>(den(q));
    return pv + qv * std::sqrt(static_cast<double>(d));
  }
  return pv;
}

double QuadElem::approx_imag() const {
  if (d > 0) return 0.0;
  double qv = static_cast<double>(num(q)) / static_cast<double>(den(q));
  return qv * std::sqrt(static_cast<double>(-d));
}

std::ostream& operator<<(std::ostream& os, const QuadElem& t) { return os << t.to_string(); }

bool quad_same_field(const QuadElem& t1, const QuadElem& t2) {
  return t1.q != 0 && t2.q != 0 && t1.d == t2.d;
}

QuadElem omega_as_quad() { return QuadElem(-3, Rational(1, 2), Rational(1, 2)); }

QuadElem qomega_to_quad(const QOmegaPoint& z) {
  return QuadElem(-3, z.a + z.b / 2, z.b / 2);
}

QuadElem reduce_modulus(QuadElem tau) {
  if (!tau.in_upper_half_plane())
    throw invalid_input("reduce_modulus: tau not in the upper half-plane");
  for (;;) {
    BigInt shift = rround(tau.p);
    tau.p -= shift;
    Rational n = tau.norm();
    if (n > 1) break;
    if (n == 1) {
      // On the unit circle take the representative with Re >= 0.
      if (tau.p < 0) tau.p = -tau.p;
      break;
    }
    // tau <- -1/tau
    tau = QuadElem(tau.d, -tau.p / n, tau.q / n);
  }
  // Canonical strip boundary: Re in (-1/2, 1/2].
  if (tau.p == Rational(-1, 2)) tau.p = Rational(1, 2);
  return tau;
}

}  // namespace belyi
