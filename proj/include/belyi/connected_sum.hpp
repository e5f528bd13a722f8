#ifndef BELYI_CONNECTED_SUM_HPP
#define BELYI_CONNECTED_SUM_HPP

#include <optional>
#include <vector>

#include "belyi/dessin.hpp"

namespace belyi {

/* Connected sum of two dessins at the monodromy level.  The black triangle
 * containing edge a1 of D1 is removed along with the white triangle
 * containing edge a2 of D2, and the boundaries are glued respecting the
 * decoration.  The result has degree d1 + d2 - 1.
 *
 * Labels: D1 keeps 1..d1, the fused edge keeps label a1, and the remaining
 * edges of D2 get d1+1 .. d1+d2-1 in increasing original order.  The white
 * cycle through the fused edge visits a1, then D2's white cycle remainder,
 * then D1's; the black cycle visits a1, then D1's black remainder, then
 * D2's.  Multiplicities at the fused vertices add and drop one.
 */
Dessin connected_sum(const Dessin& D1, int a1, const Dessin& D2, int a2);

// All three extremal-edge Tchebychev relations applicable at (l, m):
//   T_l # T_m = T_{l+m-1}              (m odd)
//   (1-T_l) # T_m = T_{l+m-1}          (m even)
//   T_l # (1-T_m) = 1 - T_{l+m-1}      (m even)
// The sum always joins the right extremal edge of the first dessin to the
// left extremal edge of the second.
bool chebyshev_identities_check(int l, int m);

// z^m # (1-z^2) # z^n against the double-star dessin, by conjugacy.  The
// middle factor is glued into z^m at its left edge [-1,0]; the second sum
// attaches z^n at the surviving right edge [0,1].
bool double_star_identity_check(int m, int n);

enum class SiteIndependence { holds, fails, not_applicable };

// For Galois D1 and D2, connected sums do not depend on the chosen sites:
// all sums over sites1 x sites2 must be pairwise conjugate.  Non-Galois
// inputs make the proposition inapplicable rather than false.
SiteIndependence galois_site_independence_check(const Dessin& D1, const std::vector<int>& sites1,
                                                const Dessin& D2, const std::vector<int>& sites2);

}  // namespace belyi

#endif
