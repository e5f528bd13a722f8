#include "belyi/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace belyi {

DirectionInfo normalize_direction(const EisensteinInt& w0) {
  DirectionInfo info;
  info.primitive = primitive_direction(w0);
  info.was_normalized = !(info.primitive == w0);
  if (info.primitive.n % 2 == 0)
    throw invalid_input("direction " + w0.to_string() +
                        ": the line through 1/2 meets the lattice (reduced n is even)");
  info.in_hex = hex_member(info.primitive);
  info.period = info.in_hex ? 1 : 3;
  return info;
}

namespace {

struct Crossing {
  Rational t;
  int family;    // 0: b = const, 1: a = const, 2: a+b = const
  BigInt level;  // the integer coordinate value
};

// Lattice coordinates of l(t) = 1/2 + t(m + n w): a(t) = 1/2 + t m, b(t) = t n.
struct Walk {
  BigInt m, n;
  Rational a_at(const Rational& t) const { return Rational(1, 2) + t * Rational(m); }
  Rational b_at(const Rational& t) const { return t * Rational(n); }
};

// All integer levels of value0 + t*slope crossed for t in (0, T), as exact t.
void collect(std::vector<Crossing>& out, int family, const Rational& value0, const BigInt& slope,
             const BigInt& T) {
  if (slope == 0) return;
  Rational v1 = value0 + Rational(T) * Rational(slope);
  Rational lo = std::min(value0, v1), hi = std::max(value0, v1);
  for (BigInt k = rfloor(lo) + 1; Rational(k) < hi; ++k) {
    if (Rational(k) == value0 || Rational(k) == v1) continue;  // endpoint edges
    Rational t = (Rational(k) - value0) / Rational(slope);
    out.push_back({t, family, k});
  }
}

}  // namespace

GeodesicWord word_of_direction(const EisensteinInt& w0) {
  DirectionInfo info = normalize_direction(w0);
  const BigInt& m = info.primitive.m;
  const BigInt& n = info.primitive.n;
  BigInt T = info.period;
  Walk walk{m, n};

  // The walk must start and end at midpoints of ring-dot sides.
  if (decoration_class(T * m, T * n) != 0)
    throw internal_error("word_of_direction: period endpoint is not a lattice translate");

  std::vector<Crossing> crossings;
  collect(crossings, 0, Rational(0), n, T);
  collect(crossings, 1, Rational(1, 2), m, T);
  collect(crossings, 2, Rational(1, 2), m + n, T);
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& x, const Crossing& y) { return x.t < y.t; });
  for (size_t i = 1; i < crossings.size(); ++i)
    if (crossings[i - 1].t == crossings[i].t)
      throw internal_error("word_of_direction: simultaneous crossings, line meets a vertex");

  GeodesicWord word;
  for (const Crossing& c : crossings) {
    Rational a = walk.a_at(c.t), b = walk.b_at(c.t);
    // Endpoints of the crossed side as lattice points.
    BigInt v1m, v1n, v2m, v2n;
    switch (c.family) {
      case 0:  // horizontal side (p, q) -- (p+1, q)
        v1m = rfloor(a); v1n = c.level; v2m = v1m + 1; v2n = c.level;
        break;
      case 1:  // vertical side (p, q) -- (p, q+1)
        v1m = c.level; v1n = rfloor(b); v2m = c.level; v2n = v1n + 1;
        break;
      default:  // diagonal side (p+1, q) -- (p, q+1) with p+q+1 = level
        v1m = rfloor(a) + 1; v1n = rfloor(b); v2m = rfloor(a); v2n = rfloor(b) + 1;
        break;
    }
    int d1 = decoration_class(v1m, v1n), d2 = decoration_class(v2m, v2n);
    if ((d1 == 0 && d2 == 1) || (d1 == 1 && d2 == 0)) continue;  // hexagon change
    // Spoke: pivot at the endpoint that is not a star.
    BigInt pm, pn;
    int pivot_class;
    if (d1 == 2) {
      pm = v2m; pn = v2n; pivot_class = d2;
    } else {
      pm = v1m; pn = v1n; pivot_class = d1;
    }
    if (pivot_class == 2) throw internal_error("word_of_direction: side with two star ends");
    // Left-of-line test: sign of det(direction, pivot - point), which in
    // lattice coordinates is m (pn - b) - n (pm - a) up to sqrt(3)/2 > 0.
    Rational cross = Rational(m) * (Rational(pn) - b) - Rational(n) * (Rational(pm) - a);
    int s = sign_of(cross);
    if (s == 0) throw internal_error("word_of_direction: pivot on the line");
    word.append(Letter{pivot_class == 0 ? 0 : 1, s});
  }
  return word;
}

Permutation sigma_gamma(const Dessin& D, const EisensteinInt& w0) {
  return eval_word(D, word_of_direction(w0));
}

double GeodesicLength::approx() const {
  return static_cast<double>(multiplier) * std::sqrt(static_cast<double>(radicand));
}

std::string GeodesicLength::to_string() const {
  std::ostringstream ss;
  ss << multiplier << "*sqrt(" << radicand << ")";
  return ss.str();
}

GeodesicLength geodesic_length(const Dessin& D, int edge, const EisensteinInt& w0) {
  if (edge < 1 || edge > D.degree()) throw invalid_input("geodesic_length: edge out of range");
  DirectionInfo info = normalize_direction(w0);
  Permutation sg = sigma_gamma(D, w0);
  BigInt k = sg.cycle_length_at(edge);
  if (!info.in_hex) k *= 3;
  return GeodesicLength{k, norm_sq(info.primitive)};
}

GeodesicWord family_word(int k) {
  if (k < 0) throw invalid_input("family_word: k must be >= 0");
  GeodesicWord w;
  w.append({1, -1}).append({0, 1});
  for (int i = 0; i < k; ++i)
    w.append({1, 1}).append({0, -1}).append({1, -1}).append({0, 1});
  return w;
}

}  // namespace belyi
