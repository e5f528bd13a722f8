#include "belyi/eisenstein.hpp"

#include <cassert>
#include <sstream>

namespace belyi {

std::string to_decimal_string(const Rational& r, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num(r) * scale;
  BigInt q = scaled / den(r);
  BigInt rem = scaled % den(r);
  if (rem * 2 >= den(r)) ++q;      // round half up (r is nonnegative in all callers)
  bool neg = q < 0;
  if (neg) q = -q;
  std::ostringstream ss;
  ss << q;
  std::string s = ss.str();
  while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
  s.insert(s.end() - digits, '.');
  if (neg) s.insert(s.begin(), '-');
  return s;
}

std::string EisensteinInt::to_string() const {
  std::ostringstream ss;
  if (n == 0) {
    ss << m;
  } else {
    if (m != 0) ss << m;
    if (n > 0 && m != 0) ss << "+";
    if (n == -1)
      ss << "-";
    else if (n != 1)
      ss << n;
    ss << "w";
  }
  return ss.str();
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& z) {
  return os << z.to_string();
}

bool hex_member(const EisensteinInt& z) {
  if ((z.m - z.n) % 3 != 0) return false;
  BigInt a = (z.m - z.n) / 3;
  BigInt b = (z.m + 2 * z.n) / 3;
  assert((z.m + 2 * z.n) % 3 == 0);
  assert(2 * a + b == z.m && b - a == z.n);
  return true;
}

bool avoids_lattice(const EisensteinInt& z) {
  if (z.n == 0)
    throw invalid_input("avoids_lattice: direction parallel to the real axis (n = 0)");
  // l(t) = 1/2 + t z meets <1,w> iff n = (2n)x + (-2m)y has an integer
  // solution, i.e. iff 2 gcd(m, n) divides n.
  BigInt g = gcd_big(z.m, z.n);
  return z.n % (2 * g) != 0;
}

EisensteinInt primitive_direction(const EisensteinInt& z) {
  if (z.is_zero()) throw invalid_input("primitive_direction: zero direction");
  BigInt g = gcd_big(z.m, z.n);
  EisensteinInt p{z.m / g, z.n / g};
  if (p.m < 0 || (p.m == 0 && p.n < 0)) p = -p;
  return p;
}

EisensteinInt omega_power(int k) {
  k %= 6;
  if (k < 0) k += 6;
  // w^0..w^5 = 1, w, w-1, -1, -w, 1-w
  switch (k) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 1};
    case 3: return {-1, 0};
    case 4: return {0, -1};
    default: return {1, -1};
  }
}

QOmegaPoint QOmegaPoint::inverse() const {
  Rational nrm = norm();
  if (nrm == 0) throw invalid_input("QOmegaPoint: division by zero");
  return {(a + b) / nrm, -b / nrm};
}

EisensteinInt QOmegaPoint::to_eisenstein() const {
  if (!is_integral()) throw internal_error("QOmegaPoint: not an Eisenstein integer");
  return {num(a), num(b)};
}

std::string QOmegaPoint::to_string() const {
  std::ostringstream ss;
  if (b == 0) {
    ss << a;
  } else {
    if (a != 0) ss << a;
    if (sign_of(b) > 0 && a != 0) ss << "+";
    if (b == -1)
      ss << "-";
    else if (b != 1)
      ss << b;
    ss << "w";
  }
  return ss.str();
}

std::ostream& operator<<(std::ostream& os, const QOmegaPoint& z) {
  return os << z.to_string();
}

}  // namespace belyi
