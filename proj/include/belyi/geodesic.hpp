#ifndef BELYI_GEODESIC_HPP
#define BELYI_GEODESIC_HPP

#include <string>

#include "belyi/dessin.hpp"
#include "belyi/eisenstein.hpp"
#include "belyi/word.hpp"

namespace belyi {

/* Closed geodesics of the two-triangle sphere that pass through 1/2 lift
 * to straight lines l(t) = 1/2 + t w0 in the decorated tessellation of the
 * plane.  For a primitive direction w0 = m + n w with n odd the line
 * avoids the lattice and closes after one period if w0 lies in Hex, after
 * three otherwise.
 *
 * The word of the projected loop is read off the triangle strip the line
 * crosses: each crossing of a spoke (a star-ring or dot-star side) pivots
 * the strip around the spoke's non-star endpoint and contributes one
 * letter, g0 for a ring pivot and g1 for a dot pivot, with exponent +1
 * when the pivot lies to the left of the directed line.  Crossings of
 * ring-dot sides change hexagons and contribute nothing.  All crossing
 * parameters are exact rationals; signs are integer 2x2 determinants.
 */

struct DirectionInfo {
  EisensteinInt primitive;  // sign-normalized primitive representative
  bool in_hex = false;
  int period = 0;           // 1 if in Hex, 3 otherwise
  bool was_normalized = false;
};

// Normalizes and validates a direction; throws invalid_input if the
// (reduced) direction has even n, i.e. the line meets the lattice.
DirectionInfo normalize_direction(const EisensteinInt& w0);

GeodesicWord word_of_direction(const EisensteinInt& w0);

// eval_word of the direction's factorization; the fiber permutation.
Permutation sigma_gamma(const Dessin& D, const EisensteinInt& w0);

// Exact length k * sqrt(radicand) of the closed geodesic developed in D
// from the midpoint of edge a_i with tangent w0.
struct GeodesicLength {
  BigInt multiplier;
  BigInt radicand;
  double approx() const;
  std::string to_string() const;  // "k*sqrt(N) = decimal"
};

GeodesicLength geodesic_length(const Dessin& D, int edge, const EisensteinInt& w0);

// Closed form for the family w0 = (3k+1) + w: (g1^-1 g0)(g1 g0^-1 g1^-1 g0)^k.
GeodesicWord family_word(int k);

}  // namespace belyi

#endif
