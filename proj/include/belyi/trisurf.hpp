#ifndef BELYI_TRISURF_HPP
#define BELYI_TRISURF_HPP

#include <array>
#include <string>
#include <vector>

#include "belyi/dessin.hpp"

namespace belyi {

/* The decorated triangulation induced by a dessin, in the flag model: one
 * black and one white triangle per dessin edge, glued by three adjacency
 * involutions, one per edge type.  Every triangle has exactly one corner of
 * each decoration and one side of each type:
 *
 *   e01  ring-dot side   (the dessin edge itself)
 *   e1i  dot-star side
 *   ei0  star-ring side
 *
 * In the canonical layout from a dessin, black slot of edge i pairs with
 * white slot of edge i across e01, with white slot of edge sigma0(i)
 * across ei0, and the white slot of edge i pairs with the black slot of
 * sigma1(i) across e1i.  Walking the fan around a ring vertex then
 * enumerates its sigma0 cycle.  All surgery operators rewrite the
 * involutions; nothing here is geometric.
 */
enum class EdgeType : int { e01 = 0, e1i = 1, ei0 = 2 };

constexpr std::array<EdgeType, 3> kEdgeTypes{EdgeType::e01, EdgeType::e1i, EdgeType::ei0};

class TriSurf {
 public:
  TriSurf() = default;
  // Raw flag data: color per slot plus the three partner arrays.
  // Validates that each array is a color-alternating involution.
  TriSurf(std::vector<uint8_t> black, std::array<std::vector<int>, 3> adj);

  static TriSurf from_dessin(const Dessin& D);

  // Canonical relabeling: black slots in storage order become edges 1..d.
  Dessin to_dessin() const;

  int slot_count() const { return static_cast<int>(black_.size()); }
  int triangle_count() const { return slot_count(); }
  bool is_black(int s) const { return black_[static_cast<size_t>(s)] != 0; }
  int partner(EdgeType t, int s) const {
    return adj_[static_cast<size_t>(t)][static_cast<size_t>(s)];
  }

  // In the canonical layout, the black/white slots of dessin edge i.
  static int black_slot(int edge) { return 2 * (edge - 1); }
  static int white_slot(int edge) { return 2 * (edge - 1) + 1; }

  int edge_count() const { return 3 * slot_count() / 2; }
  // Vertices of each decoration class, counted as fan orbits.
  std::array<int, 3> vertex_counts() const;
  int vertex_count() const;
  // Genus from V - E + F alone; the independent oracle for the
  // permutation-side genus formula.
  int genus_euler() const;

  bool connected() const;
  bool operator==(const TriSurf&) const = default;

  // Replace the triangle in slot s by the starred configuration (the
  // connected sum with the tetrahedron at the matching site).  Degree
  // grows by one, triangle count by two, vertex count by one.
  TriSurf star_triangle(int s) const;

  // Star the midpoint of the side of type t at black slot b (the rhombus
  // sum with the six-triangle double pyramid).  Rejects degenerate rhombi.
  TriSurf star_edge(int b, EdgeType t) const;

  // Rhombus resummation with the matching four-triangle sphere.  The only
  // decoration-compatible regluing of a rhombus is the original one, so
  // this is the identity up to relabeling; it exists to realize the
  // tetrahedron-sum description of flips and is validated as such.
  TriSurf flip(int b, EdgeType t) const;

  // Triangle-adjacency graph in DOT, for debugging.
  std::string to_dot() const;

 private:
  std::vector<uint8_t> black_;
  std::array<std::vector<int>, 3> adj_;

  static TriSurf make(std::vector<uint8_t> black, std::array<std::vector<int>, 3> adj);
  // Drop the listed slots from raw arrays, renumber the rest preserving
  // order, and only then validate.
  static TriSurf compact_make(const std::vector<uint8_t>& black,
                              const std::array<std::vector<int>, 3>& adj,
                              const std::vector<int>& dead);
  void set_adj(EdgeType t, int x, int y);
  void check_valid() const;
  friend TriSurf rhombus_sum(const TriSurf&, int, EdgeType, const TriSurf&, int);
};

/* Remove the rhombus across the type-t side at black slot b1 of X and the
 * matching rhombus at b2 of Y, and glue the boundaries respecting
 * decorations (black boundary edges meet white ones).  The decorated
 * analogue of the connected sum along rhombi.
 */
TriSurf rhombus_sum(const TriSurf& X, int b1, EdgeType t, const TriSurf& Y, int b2);

// Greatest valence over all vertices: the longest cycle among sigma0,
// sigma1, sigma_infinity.
int max_valence(const Dessin& D);
int max_valence(const TriSurf& T);

// Degree-6d dessin of the barycentric subdivision: original vertices turn
// black, edge midpoints white, barycenters become poles.  Equivalent to
// postcomposing the Belyi map with 1 - 1/j.
Dessin barycentric_subdivision(const Dessin& D);

}  // namespace belyi

#endif
