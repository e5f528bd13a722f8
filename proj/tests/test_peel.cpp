#include <doctest.h>

#include <set>

#include "belyi/connected_sum.hpp"
#include "belyi/peel.hpp"
#include "oracles.hpp"

using namespace belyi;

namespace {

std::vector<Dessin> peel_samples() {
  return {build_trivial(),     build_star(4),        build_chebyshev(5),
          build_tetrahedron(), build_double_pyramid(), build_j_invariant(),
          build_diamond(),     connected_sum(build_diamond(), 1, build_diamond(), 1)};
}

}  // namespace

TEST_CASE("maximal peel covers every triangle once and pairs the boundary") {
  for (const Dessin& D : peel_samples()) {
    TriSurf T = TriSurf::from_dessin(D);
    Peel P = maximal_peel(T);
    CHECK(static_cast<int>(P.order.size()) == T.triangle_count());
    std::set<int> seen(P.order.begin(), P.order.end());
    CHECK(static_cast<int>(seen.size()) == T.triangle_count());
    // boundary side count: 3n - 2(n-1) tree sides
    CHECK(static_cast<int>(P.boundary.size()) == T.triangle_count() + 2);
    for (size_t i = 0; i < P.boundary.size(); ++i) {
      CHECK(P.pairing[i] != static_cast<int>(i));
      CHECK(P.pairing[static_cast<size_t>(P.pairing[i])] == static_cast<int>(i));
    }
  }
}

TEST_CASE("the quotient of the peel rebuilds the surface") {
  for (const Dessin& D : peel_samples()) {
    TriSurf T = TriSurf::from_dessin(D);
    Peel P = maximal_peel(T);
    CHECK(quotient_of_peel(T, P) == T);
  }
}

TEST_CASE("2D peel: two triangles, three self-mirror pairs") {
  TriSurf T = TriSurf::from_dessin(build_trivial());
  Peel P = maximal_peel(T);
  CHECK(P.order.size() == 2);
  CHECK(P.boundary.size() == 4);
  SUBCASE("tetrahedron peel: four triangles in a disk, three identifications") {
    TriSurf T2 = TriSurf::from_dessin(build_tetrahedron());
    Peel P2 = maximal_peel(T2);
    CHECK(P2.order.size() == 4);
    CHECK(P2.boundary.size() == 6);
  }
}

TEST_CASE("boundary graph betti number is twice the genus") {
  for (const Dessin& D : peel_samples()) {
    TriSurf T = TriSurf::from_dessin(D);
    Peel P = maximal_peel(T);
    BoundaryGraphInfo bg = boundary_graph(T, P);
    CHECK(bg.edges == D.degree() + 1);
    CHECK(bg.betti1 == 2 * D.genus());
  }
}

TEST_CASE("every vertex lies on the peel boundary") {
  // The dual spanning tree never closes a disk around a vertex: each
  // vertex keeps at least one incident non-tree edge.
  for (const Dessin& D : peel_samples()) {
    TriSurf T = TriSurf::from_dessin(D);
    Peel P = maximal_peel(T);
    // Collect surface edges used by the tree (slot pairs).
    std::set<std::pair<int, int>> tree_edges;
    for (int s : P.order) {
      int par = P.parent[static_cast<size_t>(s)];
      if (par < 0) continue;
      tree_edges.insert({std::min(s, par), static_cast<int>(P.parent_type[static_cast<size_t>(s)])});
    }
    // For each corner orbit, at least one of the fan's crossing edges must
    // be a boundary (non-tree) edge.
    int n = T.slot_count();
    for (int corner = 0; corner < 3; ++corner) {
      std::vector<bool> seen(static_cast<size_t>(n), false);
      for (int s = 0; s < n; ++s) {
        if (!T.is_black(s) || seen[static_cast<size_t>(s)]) continue;
        bool has_boundary = false;
        int b = s;
        const EdgeType first_cross[3] = {EdgeType::ei0, EdgeType::e01, EdgeType::e1i};
        const EdgeType second_cross[3] = {EdgeType::e01, EdgeType::e1i, EdgeType::ei0};
        do {
          seen[static_cast<size_t>(b)] = true;
          int w = T.partner(first_cross[corner], b);
          if (!tree_edges.count({std::min(b, w), static_cast<int>(first_cross[corner])}))
            has_boundary = true;
          int b2 = T.partner(second_cross[corner], w);
          if (!tree_edges.count({std::min(w, b2), static_cast<int>(second_cross[corner])}))
            has_boundary = true;
          b = b2;
        } while (b != s);
        CHECK(has_boundary);
      }
    }
  }
}

TEST_CASE("homology loops: 2g independent classes") {
  for (const Dessin& D : peel_samples()) {
    TriSurf T = TriSurf::from_dessin(D);
    Peel P = maximal_peel(T);
    auto loops = homology_loops(T, P);
    CHECK(static_cast<int>(loops.size()) == 2 * D.genus());
    CHECK(loop_rank_in_h1(T, loops) == 2 * D.genus());
    for (const DualLoop& L : loops) {
      CHECK(L.slots.front() == P.root);
      CHECK(L.slots.back() == P.root);
      CHECK(L.steps.size() + 1 == L.slots.size());
    }
  }
}

TEST_CASE("all pair loops together have full rank in homology") {
  for (const Dessin& D : {build_diamond(), build_j_invariant()}) {
    TriSurf T = TriSurf::from_dessin(D);
    Peel P = maximal_peel(T);
    CHECK(loop_rank_in_h1(T, pair_loops(T, P)) == 2 * D.genus());
  }
}

TEST_CASE("ideal development of the sphere") {
  TriSurf T = TriSurf::from_dessin(build_trivial());
  Peel P = maximal_peel(T);
  auto dev = ideal_peel_coordinates(T, P);
  CHECK(dev[0].ring == FareyVertex(0, 1));
  CHECK(dev[0].dot == FareyVertex(1, 1));
  CHECK(dev[0].star == FareyVertex(1, 0));
  // the mirror triangle shares one side and reflects the opposite cusp
  const IdealTriangle& m = dev[1];
  std::set<std::string> cusps{m.ring.to_string(), m.dot.to_string(), m.star.to_string()};
  CHECK(cusps.size() == 3);
}

TEST_CASE("neighbor across (0,1) has its new cusp at 1/2") {
  // reflection of infinity across the geodesic joining 0 and 1
  TriSurf T = TriSurf::from_dessin(build_star(2));
  Peel P = maximal_peel(T);
  auto dev = ideal_peel_coordinates(T, P);
  bool found_half = false;
  for (const auto& t : dev)
    for (const FareyVertex* v : {&t.ring, &t.dot, &t.star})
      if (*v == FareyVertex(1, 2)) found_half = true;
  CHECK(found_half);
}

TEST_CASE("Farey adjacency within every developed triangle") {
  for (const Dessin& D : peel_samples()) {
    TriSurf T = TriSurf::from_dessin(D);
    Peel P = maximal_peel(T);
    auto dev = ideal_peel_coordinates(T, P);
    auto unimodular = [](const FareyVertex& u, const FareyVertex& v) {
      BigInt det = u.p * v.q - v.p * u.q;
      return det == 1 || det == -1;
    };
    for (int s : P.order) {
      const IdealTriangle& t = dev[static_cast<size_t>(s)];
      CHECK(unimodular(t.ring, t.dot));
      CHECK(unimodular(t.dot, t.star));
      CHECK(unimodular(t.star, t.ring));
    }
  }
}

TEST_CASE("pairing maps are level-2 congruence matrices") {
  for (const Dessin& D : peel_samples()) {
    TriSurf T = TriSurf::from_dessin(D);
    Peel P = maximal_peel(T);
    for (const Mat2& M : ideal_pairing_maps(T, P)) {
      CHECK(M.det() == 1);
      CHECK(in_gamma2(M));
      // and the rewriting into the free generators reproduces the matrix
      Mat2 R{1, 0, 0, 1};
      for (const auto& [gen, pow] : gamma2_word(M)) {
        Mat2 G = gen == 0 ? Mat2{1, 2 * pow, 0, 1} : Mat2{1, 0, 2 * pow, 1};
        R = mul(R, G);
      }
      bool same = (R == M) || (R == Mat2{-M.a, -M.b, -M.c, -M.d});
      CHECK(same);
    }
  }
}

TEST_CASE("subgroup index equals the covering degree") {
  for (const Dessin& D :
       {build_trivial(), build_star(3), build_tetrahedron(), build_j_invariant(),
        build_diamond()}) {
    TriSurf T = TriSurf::from_dessin(D);
    Peel P = maximal_peel(T);
    std::vector<std::vector<std::pair<int, BigInt>>> words;
    for (const Mat2& M : ideal_pairing_maps(T, P)) words.push_back(gamma2_word(M));
    CHECK(stallings_index(words) == D.degree());
  }
}

TEST_CASE("peel svg renders") {
  TriSurf T = TriSurf::from_dessin(build_trivial());
  Peel P = maximal_peel(T);
  std::string svg = peel_svg(T, P);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("path") != std::string::npos);
}
