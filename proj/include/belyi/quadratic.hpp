#ifndef BELYI_QUADRATIC_HPP
#define BELYI_QUADRATIC_HPP

#include <iosfwd>
#include <string>

#include "belyi/eisenstein.hpp"
#include "belyi/numbers.hpp"

namespace belyi {

/* An element p + q sqrt(d) of a quadratic field, d squarefree and != 0, 1.
 * For d < 0 and q > 0 the value lies in the upper half-plane; these are the
 * lattice moduli tau.  Comparison and arithmetic are exact.
 */
struct QuadElem {
  BigInt d;
  Rational p;
  Rational q;

  QuadElem() : d(-1), p(0), q(0) {}

  // Normalizes d to its squarefree part, folding squares into q.
  QuadElem(BigInt d_, Rational p_, Rational q_);

  bool operator==(const QuadElem& o) const;

  bool is_rational() const { return q == 0; }
  bool in_upper_half_plane() const { return d < 0 && q > 0; }

  // p^2 - q^2 d; for d < 0 this is |tau|^2.
  Rational norm() const { return p * p - q * q * d; }

  QuadElem operator+(const QuadElem&) const;
  QuadElem operator-(const QuadElem&) const;
  QuadElem operator-() const { return QuadElem(d, -p, -q); }
  QuadElem operator*(const QuadElem&) const;
  QuadElem inverse() const;
  QuadElem operator/(const QuadElem& o) const { return *this * o.inverse(); }

  std::string to_string() const;
  double approx_real() const;
  double approx_imag() const;
};

std::ostream& operator<<(std::ostream&, const QuadElem&);

// Both arguments generate the same quadratic field: equal squarefree d and
// q != 0 on both sides.
bool quad_same_field(const QuadElem& t1, const QuadElem& t2);

// w = exp(2 pi i/6) as 1/2 + (1/2) sqrt(-3).
QuadElem omega_as_quad();

// a + b w  ->  (a + b/2) + (b/2) sqrt(-3).
QuadElem qomega_to_quad(const QOmegaPoint& z);

// PSL(2,Z) reduction of tau in the upper half-plane to the canonical
// fundamental-domain representative: Re in (-1/2, 1/2], |tau| >= 1, and
// Re >= 0 when |tau| = 1.
QuadElem reduce_modulus(QuadElem tau);

// squarefree part s and cofactor f with x = s f^2 (x != 0).
std::pair<BigInt, BigInt> squarefree_split(BigInt x);

}  // namespace belyi

#endif
