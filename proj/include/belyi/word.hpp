#ifndef BELYI_WORD_HPP
#define BELYI_WORD_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "belyi/numbers.hpp"

namespace belyi {

/* Words in the free group on the two loops g0, g1 around the branch points
 * 0 and 1, based at 1/2.  Letters are stored in display order, left to
 * right.  Notation: a = g0, A = g0^-1, b = g1, B = g1^-1.
 */
struct Letter {
  int base;      // 0 or 1
  int exponent;  // +1 or -1

  bool operator==(const Letter&) const = default;
  Letter inverse() const { return {base, -exponent}; }
  char display() const {
    if (base == 0) return exponent > 0 ? 'a' : 'A';
    return exponent > 0 ? 'b' : 'B';
  }
};

struct GeodesicWord {
  std::vector<Letter> letters;

  bool operator==(const GeodesicWord&) const = default;
  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  GeodesicWord& append(Letter l) {
    letters.push_back(l);
    return *this;
  }
  GeodesicWord concat(const GeodesicWord& o) const;
  GeodesicWord inverse() const;

  // Cancel adjacent x x^-1 pairs until none remain.
  GeodesicWord reduced() const;

  // Space-separated a/A/b/B display string.
  std::string to_string() const;
  static GeodesicWord parse(const std::string& s);
};

std::ostream& operator<<(std::ostream&, const GeodesicWord&);

}  // namespace belyi

#endif
