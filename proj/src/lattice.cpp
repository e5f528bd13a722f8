#include "belyi/lattice.hpp"

#include <algorithm>
#include <map>

namespace belyi {

namespace {

Rational cross(const QOmegaPoint& u, const QOmegaPoint& v) { return u.a * v.b - v.a * u.b; }

}  // namespace

Lattice2::Lattice2(QOmegaPoint a, QOmegaPoint b) : w1(std::move(a)), w2(std::move(b)) {
  Rational c = cross(w1, w2);
  if (c == 0) throw invalid_input("Lattice2: basis is linearly dependent");
  // orient so that Im(w1/w2) > 0, i.e. the coordinate cross product of
  // (w1, w2) is negative
  if (c > 0) std::swap(w1, w2);
}

SublatticeResult is_sublattice(const Lattice2& G, const Lattice2& L) {
  Rational det = cross(L.w1, L.w2);
  // Solve g = x w1 + y w2 in coordinates (a, b) of 1 and w.
  auto solve = [&](const QOmegaPoint& g) {
    Rational x = cross(g, L.w2) / det;
    Rational y = cross(L.w1, g) / det;
    return std::pair<Rational, Rational>{x, y};
  };
  auto [x1, y1] = solve(G.w1);
  auto [x2, y2] = solve(G.w2);
  if (!is_integer(x1) || !is_integer(y1) || !is_integer(x2) || !is_integer(y2))
    return {false, 0};
  BigInt idx = num(x1) * num(y2) - num(x2) * num(y1);
  if (idx < 0) idx = -idx;
  if (idx == 0) throw internal_error("is_sublattice: degenerate coordinate matrix");
  return {true, idx};
}

BigInt k_inclusion_witness(const Lattice2& G, const Lattice2& L) {
  SublatticeResult r = is_sublattice(G, L);
  if (!r.contained) throw invalid_input("k_inclusion_witness: not a sublattice");
  BigInt k = r.index;
  // verify k L <= G by exact membership
  Lattice2 kL(QOmegaPoint(Rational(k), Rational(0)) * L.w1,
              QOmegaPoint(Rational(k), Rational(0)) * L.w2);
  if (!is_sublattice(kL, G).contained)
    throw internal_error("k_inclusion_witness: k L is not inside G");
  return k;
}

bool covering_related(const QuadElem& t1, const QuadElem& t2) {
  if (!t1.in_upper_half_plane() || !t2.in_upper_half_plane())
    throw invalid_input("covering_related: moduli must lie in the upper half-plane");
  if (!quad_same_field(t1, t2)) return false;
  // Explicit affine witness tau2 = p + q tau1 with rational p, q != 0.
  Rational q = t2.q / t1.q;
  Rational p = t2.p - q * t1.p;
  QuadElem check = QuadElem(t1.d, p, 0) + QuadElem(t1.d, q, 0) * t1;
  if (!(check == t2)) throw internal_error("covering_related: affine witness failed");
  return true;
}

bool hexagonal_admissible(const QuadElem& t) { return covering_related(t, omega_as_quad()); }

Holonomy compose(const Holonomy& g1, const Holonomy& g2) {
  Holonomy h;
  h.rot = (g1.rot + g2.rot) % 6;
  h.trans = QOmegaPoint(omega_power(g1.rot)) * g2.trans + g1.trans;
  return h;
}

namespace {

DevelopedTriangle standard_root(bool black) {
  DevelopedTriangle t;
  t.ring = QOmegaPoint(Rational(0), Rational(0));
  t.dot = QOmegaPoint(Rational(1), Rational(0));
  // Apex at w for a black root, at its mirror 1 - w for a white root.
  t.star = black ? QOmegaPoint(Rational(0), Rational(1)) : QOmegaPoint(Rational(1), Rational(-1));
  return t;
}

// Reflect the apex across the shared side: apex' = u + v - apex.
DevelopedTriangle extend_dev(const DevelopedTriangle& from, EdgeType t) {
  DevelopedTriangle out = from;
  switch (t) {
    case EdgeType::e01: out.star = from.ring + from.dot - from.star; break;
    case EdgeType::e1i: out.ring = from.dot + from.star - from.ring; break;
    default: out.dot = from.star + from.ring - from.dot; break;
  }
  return out;
}

}  // namespace

std::vector<DevelopedTriangle> develop_peel(const TriSurf& T, const Peel& P) {
  std::vector<DevelopedTriangle> dev(static_cast<size_t>(T.slot_count()));
  dev[static_cast<size_t>(P.root)] = standard_root(T.is_black(P.root));
  for (int s : P.order) {
    int par = P.parent[static_cast<size_t>(s)];
    if (par < 0) continue;
    dev[static_cast<size_t>(s)] =
        extend_dev(dev[static_cast<size_t>(par)], P.parent_type[static_cast<size_t>(s)]);
  }
  return dev;
}

Holonomy loop_holonomy(const TriSurf& T, const DualLoop& L) {
  if (L.slots.empty() || L.slots.front() != L.slots.back())
    throw invalid_input("loop_holonomy: walk is not closed");
  DevelopedTriangle start = standard_root(T.is_black(L.slots.front()));
  DevelopedTriangle cur = start;
  for (size_t k = 0; k + 1 < L.slots.size(); ++k) cur = extend_dev(cur, L.steps[k]);
  // The final copy equals g applied to the start: g(z) = w^rot z + trans.
  QOmegaPoint u0 = start.dot - start.ring, u1 = cur.dot - cur.ring;
  Holonomy g;
  g.rot = -1;
  for (int k = 0; k < 6; ++k) {
    if (QOmegaPoint(omega_power(k)) * u0 == u1) {
      g.rot = k;
      break;
    }
  }
  if (g.rot < 0) throw internal_error("loop_holonomy: edge image is not a unit rotation");
  QOmegaPoint w = QOmegaPoint(omega_power(g.rot));
  g.trans = cur.ring - w * start.ring;
  if (!(g.apply(start.star) == cur.star))
    throw internal_error("loop_holonomy: corners disagree with a similarity");
  return g;
}

namespace {

bool all_cycles_length3(const Permutation& p) {
  for (const auto& c : p.cycles())
    if (c.size() != 3) return false;
  return true;
}

// Hermite basis of the span of a set of Eisenstein vectors, rows
// (a, b), (0, d) with a, d > 0.
std::pair<EisensteinInt, EisensteinInt> hermite_basis(std::vector<EisensteinInt> v) {
  std::erase_if(v, [](const EisensteinInt& z) { return z.is_zero(); });
  // Clear the first coordinate of all but one row by gcd reduction.
  for (;;) {
    int i = -1, j = -1;
    for (int k = 0; k < static_cast<int>(v.size()); ++k) {
      if (v[static_cast<size_t>(k)].m == 0) continue;
      if (i < 0)
        i = k;
      else {
        j = k;
        break;
      }
    }
    if (j < 0) break;
    auto &a = v[static_cast<size_t>(i)], &b = v[static_cast<size_t>(j)];
    if (boost::multiprecision::abs(a.m) > boost::multiprecision::abs(b.m)) std::swap(a, b);
    BigInt q = b.m / a.m;  // truncated
    b = b - EisensteinInt(q * a.m, q * a.n);
  }
  EisensteinInt row1(0, 0), row2(0, 0);
  for (const auto& z : v) {
    if (z.m != 0) {
      row1 = z;
    } else if (z.n != 0) {
      row2 = {0, gcd_big(row2.n, z.n)};
    }
  }
  if (row1.m == 0 || row2.n == 0)
    throw internal_error("hermite_basis: generators do not span a rank-2 lattice");
  if (row1.m < 0) row1 = -row1;
  if (row2.n < 0) row2 = -row2;
  row1.n -= floor_div(row1.n, row2.n) * row2.n;
  return {row1, row2};
}

}  // namespace

std::pair<EisensteinInt, EisensteinInt> flat_periods(const Dessin& D) {
  if (D.genus() != 1)
    throw invalid_input("flat_periods: dessin is not of genus 1");
  if (!all_cycles_length3(D.sigma0()) || !all_cycles_length3(D.sigma1()) ||
      !all_cycles_length3(D.sigma_infinity()))
    throw invalid_input("flat_periods: not flat-smooth, a vertex has valence other than 6");
  TriSurf T = TriSurf::from_dessin(D);
  Peel P = maximal_peel(T);
  std::vector<EisensteinInt> translations;
  for (const DualLoop& L : pair_loops(T, P)) {
    Holonomy g = loop_holonomy(T, L);
    if (g.rot != 0)
      throw internal_error("flat_periods: nontrivial rotation on a smooth torus");
    if (!g.trans.is_integral())
      throw internal_error("flat_periods: non-integral deck translation");
    translations.push_back(g.trans.to_eisenstein());
  }
  return hermite_basis(std::move(translations));
}

QuadElem flat_modulus(const Dessin& D) {
  auto [e1, e2] = flat_periods(D);
  return lattice_ratio_modulus(e1, e2);
}

QuadElem lattice_ratio_modulus(const EisensteinInt& g1, const EisensteinInt& g2) {
  QOmegaPoint a(g1), b(g2);
  if (cross(a, b) == 0) throw invalid_input("lattice_ratio_modulus: dependent basis");
  QuadElem tau = qomega_to_quad(a / b);
  if (!tau.in_upper_half_plane()) tau = qomega_to_quad(b / a);
  if (!tau.in_upper_half_plane())
    throw internal_error("lattice_ratio_modulus: no orientation puts the ratio in H");
  return reduce_modulus(tau);
}

Dessin torus_from_sublattice(const EisensteinInt& g1, const EisensteinInt& g2) {
  if (!hex_member(g1) || !hex_member(g2))
    throw invalid_input("torus_from_sublattice: basis must lie in Hex");
  if (g1.m * g2.n - g2.m * g1.n == 0)
    throw invalid_input("torus_from_sublattice: basis is linearly dependent");

  auto [r1, r2] = hermite_basis({g1, g2});
  const BigInt A = r1.m, B = r1.n, Dd = r2.n;  // rows (A, B), (0, D)
  auto canon = [&](EisensteinInt z) {
    BigInt j = floor_div(z.m, A);
    z.m -= j * A;
    z.n -= j * B;
    z.n -= floor_div(z.n, Dd) * Dd;
    return z;
  };

  // Ring vertices are the Hex cosets; each carries three dessin edges in
  // the directions 1, w-1, -w (counterclockwise).  Rotating around the far
  // dot vertex moves the base ring point by dir * (2 - w).
  const EisensteinInt hops[3] = {{2, -1}, {-1, 2}, {-1, -1}};

  std::map<std::pair<BigInt, BigInt>, int> ring_id;
  std::vector<EisensteinInt> rings;
  for (BigInt x = 0; x < A; ++x)
    for (BigInt y = 0; y < Dd; ++y) {
      EisensteinInt p = canon({x, y});
      if (decoration_class(p) != 0) continue;
      if (ring_id.emplace(std::pair{p.m, p.n}, static_cast<int>(rings.size())).second)
        rings.push_back(p);
    }
  int d = 3 * static_cast<int>(rings.size());
  if (d == 0) throw internal_error("torus_from_sublattice: no ring vertices");

  auto label = [&](const EisensteinInt& p, int dir) {
    auto it = ring_id.find({p.m, p.n});
    if (it == ring_id.end()) throw internal_error("torus_from_sublattice: unknown coset");
    return 3 * it->second + dir + 1;
  };

  std::vector<int> img0(static_cast<size_t>(d)), img1(static_cast<size_t>(d));
  for (int r = 0; r < static_cast<int>(rings.size()); ++r) {
    for (int dir = 0; dir < 3; ++dir) {
      int e = 3 * r + dir + 1;
      img0[static_cast<size_t>(e - 1)] = 3 * r + (dir + 1) % 3 + 1;
      EisensteinInt q = canon(rings[static_cast<size_t>(r)] + hops[dir]);
      img1[static_cast<size_t>(e - 1)] = label(q, (dir + 1) % 3);
    }
  }
  return Dessin(Permutation::from_images(img0), Permutation::from_images(img1),
                "torus quotient");
}

}  // namespace belyi
