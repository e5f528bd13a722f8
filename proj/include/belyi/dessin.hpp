#ifndef BELYI_DESSIN_HPP
#define BELYI_DESSIN_HPP

#include <string>
#include <vector>

#include "belyi/permutation.hpp"
#include "belyi/word.hpp"

namespace belyi {

/* A dessin d'enfant as a transitive permutation pair (sigma0, sigma1) on
 * edge labels 1..d.  sigma0 rotates the edges counterclockwise around each
 * white vertex, sigma1 around each black vertex.  The third permutation is
 * fixed by sigma0 * sigma1 * sigma_infinity = id.
 */
class Dessin {
 public:
  Dessin(Permutation sigma0, Permutation sigma1, std::string name = "");

  int degree() const { return pair_.sigma0.degree(); }
  const Permutation& sigma0() const { return pair_.sigma0; }
  const Permutation& sigma1() const { return pair_.sigma1; }
  const PermPair& pair() const { return pair_; }
  const std::string& name() const { return name_; }

  Permutation sigma_infinity() const;

  // Genus from 2 - 2g = c(sigma0) + c(sigma1) + c(sigma_inf) - d.
  int genus() const;

  // Cycle types of sigma0, sigma1, sigma_infinity (sorted descending).
  std::vector<std::vector<int>> passport() const;

  bool is_galois() const;

  // Tree dessin: genus 0 and c(sigma0) + c(sigma1) = d + 1.
  bool is_tree() const;

 private:
  PermPair pair_;
  std::string name_;
};

// Conjugacy of dessins = isomorphism of branched coverings.
inline std::optional<Permutation> dessins_conjugate(const Dessin& a, const Dessin& b) {
  return pairs_conjugate(a.pair(), b.pair());
}

// Postcomposition with z -> 1-z swaps the vertex colors.
Dessin swap_colors(const Dessin& D);

// Named builders.
Dessin build_trivial();                       // the identity map z
Dessin build_star(int n);                     // z^n
Dessin build_chebyshev(int n);                // T_n = (Tbar_n + 1)/2, path with n edges
Dessin build_double_star(int m, int n);       // mu z^m (1-z)^n
Dessin build_j_invariant();                   // degree 6, passport {3,3}/{2,2,2}/{2,2,2}
Dessin build_diamond();                       // degree 12 genus 1 double of the annulus
Dessin build_tetrahedron();                   // smallest closed decorated surface after 2D
Dessin build_double_pyramid();                // tetrahedron # tetrahedron, six triangles

// Substitute sigma0^(+-1), sigma1^(+-1) for the letters and compose in
// reverse display order: for w = n1 n2 ... nk the result applies n1 first.
Permutation eval_word(const Dessin& D, const GeodesicWord& w);

}  // namespace belyi

#endif
