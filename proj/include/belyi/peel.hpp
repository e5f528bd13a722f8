#ifndef BELYI_PEEL_HPP
#define BELYI_PEEL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "belyi/trisurf.hpp"

namespace belyi {

/* A maximal peel: a dual-spanning-tree development of the whole surface
 * into a disk of triangles, with the leftover boundary sides paired by
 * their common image edge.  Growth is greedy and deterministic: among all
 * open boundary sides whose outside triangle is unused, the one whose new
 * triangle has the lowest slot index is attached first.
 */
struct PeelSide {
  int slot;
  EdgeType type;
  bool operator==(const PeelSide&) const = default;
};

struct Peel {
  int root = 0;
  std::vector<int> order;              // slots in attachment order
  std::vector<int> parent;             // per slot, -1 at the root
  std::vector<EdgeType> parent_type;   // per slot, side glued to the parent
  std::vector<PeelSide> boundary;      // unpaired sides after tree growth
  std::vector<int> pairing;            // fixed-point-free involution on boundary indices
};

Peel maximal_peel(const TriSurf& T, int root = 0);

// Rebuild the surface from the polygon and its boundary pairing alone.
TriSurf quotient_of_peel(const TriSurf& T, const Peel& P);

// The image of the peel boundary in the surface: its vertices are all the
// surface vertices, its edges the non-tree surface edges.
struct BoundaryGraphInfo {
  int vertices = 0;
  int edges = 0;
  int betti1 = 0;  // 1 - V + E, equals twice the genus
};

BoundaryGraphInfo boundary_graph(const TriSurf& T, const Peel& P);

// Closed dual walks: consecutive slots share the side named in steps.
struct DualLoop {
  std::vector<int> slots;        // front == back == root
  std::vector<EdgeType> steps;   // steps[k] joins slots[k] and slots[k+1]
};

// One loop per boundary pair: root -> tree path -> cross the glued edge ->
// tree path -> root.  Together they generate the fundamental group.
std::vector<DualLoop> pair_loops(const TriSurf& T, const Peel& P);

// 2g of the pair loops whose homology classes are independent.
std::vector<DualLoop> homology_loops(const TriSurf& T, const Peel& P);

// Rank of the loops' classes in first homology (independence check).
int loop_rank_in_h1(const TriSurf& T, const std::vector<DualLoop>& loops);

/* Ideal development: the root triangle maps to the ideal triangle
 * (0, 1, infinity) with ring, dot, star at 0, 1, infinity; every
 * attachment reflects across the shared side, which replaces the opposite
 * cusp p1/q1 -> (p1 +- p2)/(q1 +- q2) by the Farey mediant rule.
 */
struct FareyVertex {
  BigInt p, q;  // q >= 0, gcd = 1, infinity = 1/0
  FareyVertex() : p(0), q(1) {}
  FareyVertex(BigInt p_, BigInt q_);
  bool operator==(const FareyVertex&) const = default;
  bool is_infinity() const { return q == 0; }
  std::string to_string() const;
};

struct IdealTriangle {
  FareyVertex ring, dot, star;
};

// Per-slot cusp triples; triangles outside the peel order keep defaults.
std::vector<IdealTriangle> ideal_peel_coordinates(const TriSurf& T, const Peel& P);

// Integer matrices acting as Mobius maps z -> (az+b)/(cz+d).
struct Mat2 {
  BigInt a, b, c, d;
  BigInt det() const { return a * d - b * c; }
  bool operator==(const Mat2&) const = default;
};

Mat2 mul(const Mat2& x, const Mat2& y);

// Side-pairing deck transformations of the ideal development, one per
// boundary pair.  Each lies in the principal congruence subgroup of
// level 2 and has determinant one.
std::vector<Mat2> ideal_pairing_maps(const TriSurf& T, const Peel& P);

bool in_gamma2(const Mat2& M);

// Rewrite M in the free generators A = [[1,2],[0,1]], B = [[1,0],[2,1]]
// of the level-2 congruence group; returns (generator, power) runs.
std::vector<std::pair<int, BigInt>> gamma2_word(Mat2 M);

// Index of the subgroup generated by the given words in the rank-2 free
// group, by Stallings folding; -1 when the index is infinite.
long stallings_index(const std::vector<std::vector<std::pair<int, BigInt>>>& words);

// Upper half-plane picture of the developed peel (floating point allowed
// here only).
std::string peel_svg(const TriSurf& T, const Peel& P);

}  // namespace belyi

#endif
