#ifndef BELYI_NUMBERS_HPP
#define BELYI_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace belyi {

// Arbitrary precision integers and rationals. Line-development parameters
// and lattice indices grow quickly, so no fixed-width arithmetic anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown on bad user input (CLI exit code 2).
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an internal invariant breaks (CLI exit code 3).
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline BigInt num(const Rational& r) { return numerator(r); }
inline BigInt den(const Rational& r) { return denominator(r); }

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const Rational& r) { return numerator(r).sign(); }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline BigInt rfloor(const Rational& r) { return floor_div(num(r), den(r)); }

// Nearest integer, ties toward +infinity.
inline BigInt rround(const Rational& r) { return rfloor(r + Rational(1, 2)); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline BigInt gcd_big(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

std::string to_decimal_string(const Rational& r, int digits);

}  // namespace belyi

#endif
