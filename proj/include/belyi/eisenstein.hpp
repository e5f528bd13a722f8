#ifndef BELYI_EISENSTEIN_HPP
#define BELYI_EISENSTEIN_HPP

#include <iosfwd>
#include <string>

#include "belyi/numbers.hpp"

namespace belyi {

/* Exact arithmetic in Z[w] and Q(w), where w = exp(2*pi*i/6) is the sixth
 * root of unity with minimal polynomial w^2 = w - 1.  A point m + n*w has
 * squared modulus m^2 + mn + n^2.  The triangular lattice L = <1, w> is the
 * vertex set of the unit equilateral tessellation; the sublattice
 * Hex = <2-w, 1+w> (index 3) carries the ring-decorated vertices.
 */
struct EisensteinInt {
  BigInt m;  // coefficient of 1
  BigInt n;  // coefficient of w

  EisensteinInt() : m(0), n(0) {}
  EisensteinInt(BigInt m_, BigInt n_) : m(std::move(m_)), n(std::move(n_)) {}

  bool operator==(const EisensteinInt&) const = default;
  bool is_zero() const { return m == 0 && n == 0; }

  EisensteinInt operator+(const EisensteinInt& o) const { return {m + o.m, n + o.n}; }
  EisensteinInt operator-(const EisensteinInt& o) const { return {m - o.m, n - o.n}; }
  EisensteinInt operator-() const { return {-m, -n}; }

  // (m + n w)(p + q w) with w^2 = w - 1.
  EisensteinInt operator*(const EisensteinInt& o) const {
    return {m * o.m - n * o.n, m * o.n + n * o.m + n * o.n};
  }

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream&, const EisensteinInt&);

inline BigInt norm_sq(const EisensteinInt& z) {
  return z.m * z.m + z.m * z.n + z.n * z.n;
}

// Decoration class of a lattice vertex: 0 = ring, 1 = dot, 2 = star.
inline int decoration_class(const BigInt& m, const BigInt& n) {
  BigInt r = (m - n) % 3;
  if (r < 0) r += 3;
  return static_cast<int>(r);
}
inline int decoration_class(const EisensteinInt& z) { return decoration_class(z.m, z.n); }

// Membership in Hex = <2-w, 1+w>, solved exactly: m+nw = a(2-w) + b(1+w)
// has the integer solution a = (m-n)/3, b = (m+2n)/3 iff 3 | m-n.
bool hex_member(const EisensteinInt& z);

// True iff the line l(t) = 1/2 + t z misses every point of <1, w>.
// Requires n != 0 after nothing; rejects directions parallel to the real
// axis (n == 0), which fall outside the closed-geodesic setup.
bool avoids_lattice(const EisensteinInt& z);

// z / gcd(m, n), sign-normalized so that m > 0, or m == 0 and n > 0.
// Idempotent; the canonical representative every geodesic routine works on.
EisensteinInt primitive_direction(const EisensteinInt& z);

// Sixth root of unity w^k as an Eisenstein integer (k taken mod 6).
EisensteinInt omega_power(int k);

/* A point of the field Q(w): a + b w with rational a, b.  Closed under the
 * four field operations; used for line-crossing parameters and for the
 * translation parts of flat holonomies.
 */
struct QOmegaPoint {
  Rational a;  // coefficient of 1
  Rational b;  // coefficient of w

  QOmegaPoint() = default;
  QOmegaPoint(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  QOmegaPoint(const EisensteinInt& z) : a(z.m), b(z.n) {}  // NOLINT(google-explicit-constructor)

  bool operator==(const QOmegaPoint&) const = default;
  bool is_zero() const { return a == 0 && b == 0; }

  QOmegaPoint operator+(const QOmegaPoint& o) const { return {a + o.a, b + o.b}; }
  QOmegaPoint operator-(const QOmegaPoint& o) const { return {a - o.a, b - o.b}; }
  QOmegaPoint operator-() const { return {-a, -b}; }

  QOmegaPoint operator*(const QOmegaPoint& o) const {
    return {a * o.a - b * o.b, a * o.b + b * o.a + b * o.b};
  }

  // |a + b w|^2 = a^2 + ab + b^2, a positive rational unless zero.
  Rational norm() const { return a * a + a * b + b * b; }

  // (a + b w)^-1 = (a + b - b w) / (a^2 + ab + b^2).
  QOmegaPoint inverse() const;
  QOmegaPoint operator/(const QOmegaPoint& o) const { return *this * o.inverse(); }

  // Is this an element of Z[w]?
  bool is_integral() const { return is_integer(a) && is_integer(b); }
  EisensteinInt to_eisenstein() const;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream&, const QOmegaPoint&);

}  // namespace belyi

#endif
