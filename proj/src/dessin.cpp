#include "belyi/dessin.hpp"

#include <algorithm>

namespace belyi {

Dessin::Dessin(Permutation sigma0, Permutation sigma1, std::string name)
    : pair_{std::move(sigma0), std::move(sigma1)}, name_(std::move(name)) {
  if (pair_.sigma0.degree() != pair_.sigma1.degree())
    throw invalid_input("Dessin: permutation degrees differ");
  if (pair_.sigma0.degree() < 1) throw invalid_input("Dessin: degree must be at least 1");
  if (!is_transitive(pair_))
    throw invalid_input("Dessin: <sigma0, sigma1> is not transitive");
}

Permutation Dessin::sigma_infinity() const {
  return (pair_.sigma0 * pair_.sigma1).inverse();
}

int Dessin::genus() const {
  int c = pair_.sigma0.cycle_count() + pair_.sigma1.cycle_count() +
          sigma_infinity().cycle_count();
  int chi = c - degree();
  if (chi > 2 || (2 - chi) % 2 != 0)
    throw internal_error("Dessin: Euler characteristic out of range");
  return (2 - chi) / 2;
}

std::vector<std::vector<int>> Dessin::passport() const {
  return {pair_.sigma0.cycle_type(), pair_.sigma1.cycle_type(), sigma_infinity().cycle_type()};
}

bool Dessin::is_galois() const { return is_regular(pair_); }

bool Dessin::is_tree() const {
  return genus() == 0 &&
         pair_.sigma0.cycle_count() + pair_.sigma1.cycle_count() == degree() + 1;
}

Dessin swap_colors(const Dessin& D) {
  std::string name = D.name().empty() ? "" : "1-(" + D.name() + ")";
  return Dessin(D.sigma1(), D.sigma0(), name);
}

Dessin build_trivial() { return build_star(1); }

Dessin build_star(int n) {
  if (n < 1) throw invalid_input("build_star: n must be >= 1");
  std::vector<int> cyc(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = i + 1;
  return Dessin(Permutation::from_cycles(n, {cyc}), Permutation(n), "z^" + std::to_string(n));
}

Dessin build_chebyshev(int n) {
  if (n < 1) throw invalid_input("build_chebyshev: n must be >= 1");
  // Path with edges 1..n left to right and vertices v_k at cos(k pi / n),
  // k = n..0; v_k is black for even k, white for odd.  The interior vertex
  // v_k joins edges n-k and n-k+1.
  std::vector<std::vector<int>> c0, c1;
  for (int k = 1; k < n; ++k) {
    std::vector<int> pairk{n - k, n - k + 1};
    if (k % 2 == 1)
      c0.push_back(pairk);
    else
      c1.push_back(pairk);
  }
  return Dessin(Permutation::from_cycles(n, c0), Permutation::from_cycles(n, c1),
                "T_" + std::to_string(n));
}

Dessin build_double_star(int m, int n) {
  if (m < 1 || n < 1) throw invalid_input("build_double_star: m, n must be >= 1");
  // Dessin of mu z^m (1-z)^n, degree m+n: white centers 0 and 1 of degrees
  // m and n, joined through the double point above 1 at lambda = m/(m+n).
  // Edges 1..m sit at 0 (edge m is the segment [0, lambda]), edges
  // m+1..m+n at 1 (edge m+1 is [lambda, 1]).
  int d = m + n;
  std::vector<int> at0, at1;
  for (int i = 1; i <= m; ++i) at0.push_back(i);
  for (int i = m + 1; i <= d; ++i) at1.push_back(i);
  Permutation s0 = Permutation::from_cycles(d, {at0, at1});
  Permutation s1 = Permutation::from_cycles(d, {{m, m + 1}});
  return Dessin(s0, s1, "P_" + std::to_string(m) + "," + std::to_string(n));
}

Dessin build_j_invariant() {
  // Two white vertices of degree 3 joined through three black vertices of
  // degree 2; sigma1 chosen so that sigma_infinity has type {2,2,2}.
  Permutation s0 = Permutation::from_cycles(6, {{1, 2, 3}, {4, 5, 6}});
  Permutation s1 = Permutation::from_cycles(6, {{1, 4}, {2, 6}, {3, 5}});
  return Dessin(s0, s1, "j");
}

Dessin build_diamond() {
  Permutation s0 = Permutation::from_cycles(12, {{1, 2, 3, 4, 5}, {9, 8, 10}, {6, 7}, {11, 12}});
  Permutation s1 = Permutation::from_cycles(12, {{1, 12, 10, 9, 11}, {3, 4, 6}, {2, 5}, {7, 8}});
  return Dessin(s0, s1, "diamond");
}

Dessin build_tetrahedron() {
  // Four triangles, f-vector (4, 6, 4); the smallest closed decorated
  // surface after the two-triangle sphere.
  Permutation s = Permutation::from_cycles(2, {{1, 2}});
  return Dessin(s, s, "tetrahedron");
}

Dessin build_double_pyramid() {
  // tetrahedron # tetrahedron: six triangles, flat white and black
  // vertices of valence 3 and three star cone points.
  Permutation s0 = Permutation::from_cycles(3, {{1, 3, 2}});
  Permutation s1 = Permutation::from_cycles(3, {{1, 2, 3}});
  return Dessin(s0, s1, "2P");
}

Permutation eval_word(const Dessin& D, const GeodesicWord& w) {
  Permutation acc(D.degree());
  const Permutation s0i = D.sigma0().inverse();
  const Permutation s1i = D.sigma1().inverse();
  for (const Letter& l : w.letters) {
    const Permutation& s = l.base == 0 ? (l.exponent > 0 ? D.sigma0() : s0i)
                                       : (l.exponent > 0 ? D.sigma1() : s1i);
    acc = s * acc;  // earlier letters act first
  }
  return acc;
}

}  // namespace belyi
