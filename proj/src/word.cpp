#include "belyi/word.hpp"

#include <ostream>
#include <sstream>

namespace belyi {

GeodesicWord GeodesicWord::concat(const GeodesicWord& o) const {
  GeodesicWord w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

GeodesicWord GeodesicWord::inverse() const {
  GeodesicWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(it->inverse());
  return w;
}

GeodesicWord GeodesicWord::reduced() const {
  GeodesicWord w;
  for (const Letter& l : letters) {
    if (!w.letters.empty() && w.letters.back() == l.inverse())
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

std::string GeodesicWord::to_string() const {
  std::ostringstream ss;
  for (size_t i = 0; i < letters.size(); ++i) ss << (i ? " " : "") << letters[i].display();
  return ss.str();
}

GeodesicWord GeodesicWord::parse(const std::string& s) {
  GeodesicWord w;
  for (char c : s) {
    switch (c) {
      case 'a': w.append({0, 1}); break;
      case 'A': w.append({0, -1}); break;
      case 'b': w.append({1, 1}); break;
      case 'B': w.append({1, -1}); break;
      case ' ': break;
      default: throw invalid_input("GeodesicWord: unknown letter");
    }
  }
  return w;
}

std::ostream& operator<<(std::ostream& os, const GeodesicWord& w) {
  return os << w.to_string();
}

}  // namespace belyi
