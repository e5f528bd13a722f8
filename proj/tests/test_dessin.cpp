#include <doctest.h>

#include <random>

#include "belyi/dessin.hpp"
#include "belyi/geodesic.hpp"
#include "oracles.hpp"

using namespace belyi;

TEST_CASE("dessin validation") {
  CHECK_THROWS_AS(Dessin(Permutation(2), Permutation(2)), invalid_input);
  CHECK_THROWS_AS(Dessin(Permutation(2), Permutation(3)), invalid_input);
  CHECK_NOTHROW(Dessin(Permutation::from_cycles(2, {{1, 2}}), Permutation(2)));
}

TEST_CASE("sigma_infinity closes the triple") {
  for (int n : {1, 2, 3, 7}) {
    Dessin D = build_star(n);
    CHECK(D.sigma_infinity() == D.sigma0().inverse());
    CHECK((D.sigma0() * D.sigma1() * D.sigma_infinity()).is_identity());
  }
  Dessin dia = build_diamond();
  CHECK((dia.sigma0() * dia.sigma1() * dia.sigma_infinity()).is_identity());
}

TEST_CASE("genus of the named dessins") {
  for (int n = 1; n <= 50; ++n) CHECK(build_star(n).genus() == 0);
  CHECK(build_j_invariant().genus() == 0);
  CHECK(build_diamond().genus() == 1);
  CHECK(build_diamond().sigma0().cycle_count() == 4);
  CHECK(build_diamond().sigma1().cycle_count() == 4);
  CHECK(build_tetrahedron().genus() == 0);
  CHECK(build_double_pyramid().genus() == 0);
}

TEST_CASE("chebyshev paths") {
  Dessin t1 = build_chebyshev(1);
  CHECK(t1.degree() == 1);
  CHECK(t1.sigma0().is_identity());
  CHECK(t1.sigma1().is_identity());
  Dessin t2 = build_chebyshev(2);
  CHECK(t2.sigma0() == Permutation::from_cycles(2, {{1, 2}}));
  CHECK(t2.sigma1().is_identity());
  Dessin t3 = build_chebyshev(3);
  CHECK(t3.sigma0() == Permutation::from_cycles(3, {{2, 3}}));
  CHECK(t3.sigma1() == Permutation::from_cycles(3, {{1, 2}}));
  for (int n = 1; n <= 12; ++n) {
    Dessin t = build_chebyshev(n);
    CHECK(t.is_tree());
    CHECK(t.genus() == 0);
  }
}

TEST_CASE("double star dessins") {
  Dessin p11 = build_double_star(1, 1);
  CHECK(p11.degree() == 2);
  CHECK(p11.sigma1() == Permutation::from_cycles(2, {{1, 2}}));
  Dessin p22 = build_double_star(2, 2);
  CHECK(p22.passport()[0] == std::vector<int>{2, 2});
  CHECK(p22.passport()[1] == std::vector<int>{2, 1, 1});
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      Dessin p = build_double_star(m, n);
      CHECK(p.degree() == m + n);
      CHECK(p.is_tree());
    }
}

TEST_CASE("j invariant dessin") {
  Dessin j = build_j_invariant();
  CHECK(j.degree() == 6);
  CHECK(j.genus() == 0);
  auto pp = j.passport();
  CHECK(pp[0] == std::vector<int>{3, 3});
  CHECK(pp[1] == std::vector<int>{2, 2, 2});
  CHECK(pp[2] == std::vector<int>{2, 2, 2});
}

TEST_CASE("the degree-6 dessin with this passport is unique up to conjugacy") {
  // Exhaustive search over sigma1 of type {2,2,2} with sigma0 fixed.
  Dessin j = build_j_invariant();
  Permutation s0 = j.sigma0();
  int found = 0;
  std::vector<int> pts{1, 2, 3, 4, 5, 6};
  // enumerate perfect matchings of 6 points
  std::function<void(std::vector<int>, std::vector<std::vector<int>>)> rec =
      [&](std::vector<int> rest, std::vector<std::vector<int>> pairs) {
        if (rest.empty()) {
          Permutation s1 = Permutation::from_cycles(6, pairs);
          PermPair pair{s0, s1};
          if (!is_transitive(pair)) return;
          Dessin cand(s0, s1);
          if (cand.sigma_infinity().cycle_type() != std::vector<int>{2, 2, 2}) return;
          ++found;
          CHECK(dessins_conjugate(cand, j).has_value());
          return;
        }
        int a = rest[0];
        for (size_t k = 1; k < rest.size(); ++k) {
          std::vector<int> next;
          for (size_t i = 1; i < rest.size(); ++i)
            if (i != k) next.push_back(rest[i]);
          auto ps = pairs;
          ps.push_back({a, rest[k]});
          rec(next, ps);
        }
      };
  rec(pts, {});
  CHECK(found > 0);
}

TEST_CASE("eval_word basics") {
  Dessin dia = build_diamond();
  CHECK(eval_word(dia, GeodesicWord{}).is_identity());
  Dessin z5 = build_star(5);
  GeodesicWord g0only;
  g0only.append({0, 1});
  CHECK(eval_word(z5, g0only) == z5.sigma0());
}

TEST_CASE("eval_word of the table direction 5-w on the diamond") {
  Dessin dia = build_diamond();
  GeodesicWord w = GeodesicWord::parse("b A B a b A");
  Permutation expect =
      Permutation::from_cycles(12, {{1, 6, 11, 3, 9, 4, 10, 5, 8}, {2, 7, 12}});
  CHECK(eval_word(dia, w) == expect);
}

TEST_CASE("reversal law and cancellation") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> len(0, 10), base(0, 1), sgn(0, 1);
  auto random_word = [&](int n) {
    GeodesicWord w;
    for (int i = 0; i < n; ++i) w.append({base(rng), sgn(rng) ? 1 : -1});
    return w;
  };
  for (int it = 0; it < 60; ++it) {
    PermPair p = oracle::random_transitive_pair(2 + it % 7, rng);
    Dessin D(p.sigma0, p.sigma1);
    GeodesicWord u = random_word(len(rng)), v = random_word(len(rng));
    // sigma_{uv} = sigma_v sigma_u
    CHECK(eval_word(D, u.concat(v)) == eval_word(D, v) * eval_word(D, u));
    CHECK(eval_word(D, u.concat(u.inverse())).is_identity());
  }
}

TEST_CASE("star family: sigma_gamma is sigma0 when sigma1 is trivial") {
  for (int n = 1; n <= 10; ++n) {
    Dessin star = build_star(n);
    for (int k = 0; k <= 5; ++k) {
      CHECK(eval_word(star, family_word(k)) == star.sigma0());
      // and through the walk itself
      CHECK(sigma_gamma(star, EisensteinInt{3 * k + 1, 1}) == star.sigma0());
    }
  }
}
