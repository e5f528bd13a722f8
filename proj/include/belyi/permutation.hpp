#ifndef BELYI_PERMUTATION_HPP
#define BELYI_PERMUTATION_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "belyi/numbers.hpp"

namespace belyi {

/* Permutations of {1..d}, 1-based throughout to match cycle notation and
 * the JSON file format.  Composition is right-to-left: (f * g)(x) = f(g(x)),
 * g applied first.  This is the library-wide convention; the monodromy
 * reversal law sigma_{uv} = sigma_v * sigma_u depends on it.
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity

  // images[i-1] is the image of i; must be a bijection on {1..d}.
  static Permutation from_images(std::vector<int> images);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return deg_; }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
  int at(int i) const;  // range-checked

  bool operator==(const Permutation&) const = default;
  bool is_identity() const;

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& f, const Permutation& g);

  // Disjoint cycles, each rotated to start at its minimum, sorted by
  // minimum, fixed points included as 1-cycles.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  int cycle_length_at(int i) const;  // length of the cycle through i
  int max_cycle_length() const;

  // Multiset of cycle lengths, sorted descending.
  std::vector<int> cycle_type() const;

  std::string cycle_string(bool include_fixed = false) const;

 private:
  int deg_ = 0;
  std::vector<int> img_;  // img_[0] unused
};

std::ostream& operator<<(std::ostream&, const Permutation&);

struct PermPair {
  Permutation sigma0;
  Permutation sigma1;
};

// Orbit of 1 under <sigma0, sigma1> covers {1..d}.
bool is_transitive(const PermPair& p);

// <sigma0, sigma1> acts regularly, i.e. the group order equals the degree.
// Assumes transitivity has been established by the caller.
bool is_regular(const PermPair& p);

/* Simultaneous conjugacy: find t with q.sigma0 = t p.sigma0 t^-1 and
 * q.sigma1 = t p.sigma1 t^-1, or nullopt.  Candidates for t(1) are tried in
 * order 1..d and constraints propagated along the <sigma0,sigma1> orbit, so
 * for transitive pairs each candidate is checked in O(d) and the first
 * witness is deterministic.  Non-transitive leftovers are handled by
 * backtracking.  A found witness is always re-verified by multiplication.
 * Degree mismatch yields nullopt rather than an error.
 */
std::optional<Permutation> pairs_conjugate(const PermPair& p, const PermPair& q);

}  // namespace belyi

#endif
