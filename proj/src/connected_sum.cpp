#include "belyi/connected_sum.hpp"

#include <algorithm>


namespace belyi {

namespace {

// Cycle of p through x as a list starting at x.
std::vector<int> cycle_through(const Permutation& p, int x) {
  std::vector<int> c{x};
  for (int y = p(x); y != x; y = p(y)) c.push_back(y);
  return c;
}

}  // namespace

Dessin connected_sum(const Dessin& D1, int a1, const Dessin& D2, int a2) {
  int d1 = D1.degree(), d2 = D2.degree();
  if (a1 < 1 || a1 > d1) throw invalid_input("connected_sum: edge label out of range in D1");
  if (a2 < 1 || a2 > d2) throw invalid_input("connected_sum: edge label out of range in D2");
  int d = d1 + d2 - 1;

  // Relabel D2: a2 -> a1, the others -> d1+1.. in increasing order.
  std::vector<int> rl(static_cast<size_t>(d2) + 1, 0);
  rl[static_cast<size_t>(a2)] = a1;
  int next = d1 + 1;
  for (int j = 1; j <= d2; ++j)
    if (j != a2) rl[static_cast<size_t>(j)] = next++;

  auto build = [&](const Permutation& s, const Permutation& s2, bool d2_first) {
    // Merged cycle through the fused edge; all other cycles survive intact.
    std::vector<std::vector<int>> cycles;
    std::vector<int> merged{a1};
    std::vector<int> part2 = cycle_through(s2, a2);
    std::vector<int> part1 = cycle_through(s, a1);
    auto push2 = [&] {
      for (size_t k = 1; k < part2.size(); ++k)
        merged.push_back(rl[static_cast<size_t>(part2[k])]);
    };
    auto push1 = [&] {
      for (size_t k = 1; k < part1.size(); ++k) merged.push_back(part1[k]);
    };
    if (d2_first) {
      push2();
      push1();
    } else {
      push1();
      push2();
    }
    cycles.push_back(std::move(merged));
    for (const auto& c : s.cycles())
      if (std::find(c.begin(), c.end(), a1) == c.end()) cycles.push_back(c);
    for (const auto& c : s2.cycles()) {
      if (std::find(c.begin(), c.end(), a2) != c.end()) continue;
      std::vector<int> cc;
      for (int x : c) cc.push_back(rl[static_cast<size_t>(x)]);
      cycles.push_back(std::move(cc));
    }
    return Permutation::from_cycles(d, cycles);
  };

  Permutation s0 = build(D1.sigma0(), D2.sigma0(), /*d2_first=*/true);
  Permutation s1 = build(D1.sigma1(), D2.sigma1(), /*d2_first=*/false);
  return Dessin(s0, s1);
}

bool chebyshev_identities_check(int l, int m) {
  if (l < 2 || m < 2) throw invalid_input("chebyshev_identities_check: l, m must be >= 2");
  Dessin Tl = build_chebyshev(l), Tm = build_chebyshev(m);
  Dessin target = build_chebyshev(l + m - 1);
  // Right extremal edge of the first factor is l, left of the second is 1.
  if (m % 2 == 1) {
    Dessin sum = connected_sum(Tl, l, Tm, 1);
    return dessins_conjugate(sum, target).has_value();
  }
  Dessin sum2 = connected_sum(swap_colors(Tl), l, Tm, 1);
  Dessin sum3 = connected_sum(Tl, l, swap_colors(Tm), 1);
  return dessins_conjugate(sum2, target).has_value() &&
         dessins_conjugate(sum3, swap_colors(target)).has_value();
}

bool double_star_identity_check(int m, int n) {
  if (m < 1 || n < 1) throw invalid_input("double_star_identity_check: m, n must be >= 1");
  // The dessin of 1 - z^2: white leaves at -1 and 1, black center of
  // degree 2 at 0.  Edge 1 is [-1, 0], edge 2 is [0, 1].
  Dessin one_minus_z2(Permutation(2), Permutation::from_cycles(2, {{1, 2}}), "1-z^2");
  Dessin left = connected_sum(build_star(m), m, one_minus_z2, 1);
  // After relabeling, the surviving free edge [0,1] carries label m+1.
  Dessin chain = connected_sum(left, m + 1, build_star(n), 1);
  return dessins_conjugate(chain, build_double_star(m, n)).has_value();
}

SiteIndependence galois_site_independence_check(const Dessin& D1, const std::vector<int>& sites1,
                                                const Dessin& D2,
                                                const std::vector<int>& sites2) {
  if (!D1.is_galois() || !D2.is_galois()) return SiteIndependence::not_applicable;
  std::optional<Dessin> first;
  for (int a1 : sites1) {
    for (int a2 : sites2) {
      Dessin sum = connected_sum(D1, a1, D2, a2);
      if (!first) {
        first = sum;
      } else if (!dessins_conjugate(*first, sum)) {
        return SiteIndependence::fails;
      }
    }
  }
  return SiteIndependence::holds;
}

}  // namespace belyi
