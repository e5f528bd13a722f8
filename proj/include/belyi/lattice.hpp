#ifndef BELYI_LATTICE_HPP
#define BELYI_LATTICE_HPP

#include <utility>
#include <vector>

#include "belyi/dessin.hpp"
#include "belyi/eisenstein.hpp"
#include "belyi/peel.hpp"
#include "belyi/quadratic.hpp"

namespace belyi {

/* Lattices in the plane with exact Q(w) bases, sublattice tests, the
 * PSL(2,Q) covering relation on moduli, and the flat modulus of a smooth
 * equilateral torus computed from peel holonomies.
 */
struct Lattice2 {
  QOmegaPoint w1, w2;
  // Requires R-linear independence; reorders the basis so Im(w1/w2) > 0.
  Lattice2(QOmegaPoint a, QOmegaPoint b);
};

struct SublatticeResult {
  bool contained = false;
  BigInt index = 0;  // |det| of the coordinate matrix when contained
};

// G <= L: both basis vectors of G solved exactly in L's basis.
SublatticeResult is_sublattice(const Lattice2& G, const Lattice2& L);

// k = |ad - bc| with k L <= G, verified by exact membership.
BigInt k_inclusion_witness(const Lattice2& G, const Lattice2& L);

// tau' = gamma(tau) for some gamma in PSL(2,Q); equivalent to generating
// the same quadratic field.  The explicit affine witness tau' = p + q tau
// is built and re-checked.  Both inputs must lie in the upper half-plane.
bool covering_related(const QuadElem& t1, const QuadElem& t2);

// X_tau carries a flat structure by regular hexagons iff tau is
// PSL(2,Q)-related to w.
bool hexagonal_admissible(const QuadElem& t);

// Orientation-preserving similarity z -> w^rot z + trans of the plane.
struct Holonomy {
  int rot = 0;  // exponent of the sixth root of unity, 0..5
  QOmegaPoint trans;

  QOmegaPoint apply(const QOmegaPoint& z) const {
    return QOmegaPoint(omega_power(rot)) * z + trans;
  }
  bool is_identity() const { return rot == 0 && trans.is_zero(); }
};

// g1 applied after g2.
Holonomy compose(const Holonomy& g1, const Holonomy& g2);

// Developed corner coordinates of every peel triangle; the root black
// triangle occupies (0, 1, w).
struct DevelopedTriangle {
  QOmegaPoint ring, dot, star;
};

std::vector<DevelopedTriangle> develop_peel(const TriSurf& T, const Peel& P);

// Holonomy of a closed dual walk based at the peel root.
Holonomy loop_holonomy(const TriSurf& T, const DualLoop& L);

// Deck-lattice basis of a smooth genus-1 dessin (every vertex valence 6),
// from the translations of all boundary-pair loops, reduced to a Hermite
// basis.  Throws invalid_input when a cone point is present.
std::pair<EisensteinInt, EisensteinInt> flat_periods(const Dessin& D);

// The modulus tau = w1/w2 of the flat torus, PSL(2,Z)-reduced, Im > 0.
QuadElem flat_modulus(const Dessin& D);

// Quotient dessin of the plane tessellation by a finite-index sublattice
// G = <g1, g2> of Hex (the decoration only descends for G inside Hex).
Dessin torus_from_sublattice(const EisensteinInt& g1, const EisensteinInt& g2);

// Canonical modulus of the lattice spanned by two Eisenstein vectors; the
// reduction-side oracle for flat_modulus round trips.
QuadElem lattice_ratio_modulus(const EisensteinInt& g1, const EisensteinInt& g2);

}  // namespace belyi

#endif
