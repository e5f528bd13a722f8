#include "belyi/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace belyi {

Permutation::Permutation(int degree) : deg_(degree), img_(static_cast<size_t>(degree) + 1) {
  if (degree < 0) throw invalid_input("Permutation: negative degree");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  Permutation p;
  p.deg_ = static_cast<int>(images.size());
  p.img_.assign(static_cast<size_t>(p.deg_) + 1, 0);
  std::vector<bool> seen(static_cast<size_t>(p.deg_) + 1, false);
  for (int i = 1; i <= p.deg_; ++i) {
    int v = images[static_cast<size_t>(i) - 1];
    if (v < 1 || v > p.deg_ || seen[static_cast<size_t>(v)])
      throw invalid_input("Permutation: images are not a bijection on {1..d}");
    seen[static_cast<size_t>(v)] = true;
    p.img_[static_cast<size_t>(i)] = v;
  }
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<bool> seen(static_cast<size_t>(degree) + 1, false);
  for (const auto& c : cycles) {
    for (size_t k = 0; k < c.size(); ++k) {
      int x = c[k], y = c[(k + 1) % c.size()];
      if (x < 1 || x > degree) throw invalid_input("Permutation: cycle label out of range");
      if (seen[static_cast<size_t>(x)]) throw invalid_input("Permutation: cycles not disjoint");
      seen[static_cast<size_t>(x)] = true;
      p.img_[static_cast<size_t>(x)] = y;
    }
  }
  return p;
}

int Permutation::at(int i) const {
  if (i < 1 || i > deg_) throw invalid_input("Permutation: point out of range");
  return img_[static_cast<size_t>(i)];
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= deg_; ++i)
    if (img_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(deg_);
  for (int i = 1; i <= deg_; ++i) r.img_[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
  return r;
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) throw invalid_input("Permutation: degree mismatch in composition");
  Permutation r(f.degree());
  for (int i = 1; i <= f.degree(); ++i) r.img_[static_cast<size_t>(i)] = f(g(i));
  return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<size_t>(deg_) + 1, false);
  for (int i = 1; i <= deg_; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    std::vector<int> c;
    int x = i;
    do {
      seen[static_cast<size_t>(x)] = true;
      c.push_back(x);
      x = img_[static_cast<size_t>(x)];
    } while (x != i);
    out.push_back(std::move(c));  // starts at its minimum since i is the first unseen
  }
  return out;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

int Permutation::cycle_length_at(int i) const {
  if (i < 1 || i > deg_) throw invalid_input("Permutation: point out of range");
  int len = 0, x = i;
  do {
    ++len;
    x = img_[static_cast<size_t>(x)];
  } while (x != i);
  return len;
}

int Permutation::max_cycle_length() const {
  int best = 0;
  for (const auto& c : cycles()) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Permutation::cycle_string(bool include_fixed) const {
  std::ostringstream ss;
  bool printed = false;
  for (const auto& c : cycles()) {
    if (c.size() == 1 && !include_fixed) continue;
    ss << "(";
    for (size_t k = 0; k < c.size(); ++k) ss << (k ? " " : "") << c[k];
    ss << ")";
    printed = true;
  }
  if (!printed) ss << "()";
  return ss.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.cycle_string();
}

bool is_transitive(const PermPair& p) {
  int d = p.sigma0.degree();
  if (d != p.sigma1.degree()) throw invalid_input("PermPair: degree mismatch");
  if (d == 0) return false;
  std::vector<bool> seen(static_cast<size_t>(d) + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (int y : {p.sigma0(x), p.sigma1(x)}) {
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }
  return count == d;
}

bool is_regular(const PermPair& p) {
  int d = p.sigma0.degree();
  // Breadth-first closure of <sigma0, sigma1>; regular iff order == d, so
  // bail out as soon as the group grows past d.
  std::set<std::vector<int>> elems;
  auto key = [d](const Permutation& g) {
    std::vector<int> v(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i) v[static_cast<size_t>(i) - 1] = g(i);
    return v;
  };
  std::vector<Permutation> frontier{Permutation(d)};
  elems.insert(key(frontier[0]));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const Permutation* s : {&p.sigma0, &p.sigma1}) {
        Permutation h = *s * g;
        if (elems.insert(key(h)).second) {
          if (static_cast<int>(elems.size()) > d) return false;
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return static_cast<int>(elems.size()) == d;
}

namespace {

// Pick the lowest unassigned point, try each unused image in ascending
// order, propagate t(x) = y through both generators in both directions,
// recurse.  For transitive pairs the propagation from t(1) is forced and
// no backtracking happens.
bool extend(const PermPair& p, const PermPair& q, const Permutation& p0i,
            const Permutation& p1i, const Permutation& q0i, const Permutation& q1i,
            std::vector<int>& t, std::vector<int>& used) {
  int d = p.sigma0.degree();
  int x = 0;
  for (int i = 1; i <= d; ++i)
    if (t[static_cast<size_t>(i)] == 0) {
      x = i;
      break;
    }
  if (x == 0) return true;
  for (int y = 1; y <= d; ++y) {
    if (used[static_cast<size_t>(y)] != 0) continue;
    std::vector<int> trail;
    // Inline propagation using precomputed inverses.
    bool ok = true;
    std::vector<std::pair<int, int>> stack{{x, y}};
    while (ok && !stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (t[static_cast<size_t>(a)] == b) continue;
      if (t[static_cast<size_t>(a)] != 0 || used[static_cast<size_t>(b)] != 0) {
        ok = false;
        break;
      }
      t[static_cast<size_t>(a)] = b;
      used[static_cast<size_t>(b)] = a;
      trail.push_back(a);
      stack.emplace_back(p.sigma0(a), q.sigma0(b));
      stack.emplace_back(p.sigma1(a), q.sigma1(b));
      stack.emplace_back(p0i(a), q0i(b));
      stack.emplace_back(p1i(a), q1i(b));
    }
    if (ok && extend(p, q, p0i, p1i, q0i, q1i, t, used)) return true;
    for (int a : trail) {
      used[static_cast<size_t>(t[static_cast<size_t>(a)])] = 0;
      t[static_cast<size_t>(a)] = 0;
    }
  }
  return false;
}

}  // namespace

std::optional<Permutation> pairs_conjugate(const PermPair& p, const PermPair& q) {
  int d = p.sigma0.degree();
  if (d != q.sigma0.degree()) return std::nullopt;
  if (p.sigma0.cycle_type() != q.sigma0.cycle_type() ||
      p.sigma1.cycle_type() != q.sigma1.cycle_type())
    return std::nullopt;

  Permutation p0i = p.sigma0.inverse(), p1i = p.sigma1.inverse();
  Permutation q0i = q.sigma0.inverse(), q1i = q.sigma1.inverse();
  std::vector<int> t(static_cast<size_t>(d) + 1, 0), used(static_cast<size_t>(d) + 1, 0);
  if (!extend(p, q, p0i, p1i, q0i, q1i, t, used)) return std::nullopt;

  std::vector<int> images(static_cast<size_t>(d));
  for (int i = 1; i <= d; ++i) images[static_cast<size_t>(i) - 1] = t[static_cast<size_t>(i)];
  Permutation witness = Permutation::from_images(images);
  // Re-check the witness by direct multiplication.
  Permutation wi = witness.inverse();
  if (!(witness * p.sigma0 * wi == q.sigma0 && witness * p.sigma1 * wi == q.sigma1))
    throw internal_error("pairs_conjugate: witness failed verification");
  return witness;
}

}  // namespace belyi
