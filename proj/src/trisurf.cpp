#include "belyi/trisurf.hpp"

#include <algorithm>

#include <sstream>

namespace belyi {

namespace {

int as_i(EdgeType t) { return static_cast<int>(t); }

// Fan step around each corner class, acting on black slots.
int corner_step(const TriSurf& T, int corner, int b) {
  switch (corner) {
    case 0:  // ring: cross ei0 then e01
      return T.partner(EdgeType::e01, T.partner(EdgeType::ei0, b));
    case 1:  // dot: cross e01 then e1i
      return T.partner(EdgeType::e1i, T.partner(EdgeType::e01, b));
    default:  // star: cross e1i then ei0
      return T.partner(EdgeType::ei0, T.partner(EdgeType::e1i, b));
  }
}

}  // namespace

void TriSurf::set_adj(EdgeType t, int x, int y) {
  adj_[static_cast<size_t>(as_i(t))][static_cast<size_t>(x)] = y;
  adj_[static_cast<size_t>(as_i(t))][static_cast<size_t>(y)] = x;
}

void TriSurf::check_valid() const {
  int n = slot_count();
  for (EdgeType t : kEdgeTypes) {
    const auto& a = adj_[static_cast<size_t>(as_i(t))];
    if (static_cast<int>(a.size()) != n) throw internal_error("TriSurf: adjacency size");
    for (int s = 0; s < n; ++s) {
      int p = a[static_cast<size_t>(s)];
      if (p < 0 || p >= n || a[static_cast<size_t>(p)] != s || is_black(p) == is_black(s))
        throw internal_error("TriSurf: adjacency is not a color-alternating involution");
    }
  }
}

TriSurf::TriSurf(std::vector<uint8_t> black, std::array<std::vector<int>, 3> adj)
    : black_(std::move(black)), adj_(std::move(adj)) {
  check_valid();
}

TriSurf TriSurf::make(std::vector<uint8_t> black, std::array<std::vector<int>, 3> adj) {
  return TriSurf(std::move(black), std::move(adj));
}

TriSurf TriSurf::compact_make(const std::vector<uint8_t>& black,
                              const std::array<std::vector<int>, 3>& adj,
                              const std::vector<int>& dead) {
  int n = static_cast<int>(black.size());
  std::vector<bool> is_dead(static_cast<size_t>(n), false);
  for (int s : dead) is_dead[static_cast<size_t>(s)] = true;
  std::vector<int> remap(static_cast<size_t>(n), -1);
  std::vector<uint8_t> nb;
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (is_dead[static_cast<size_t>(s)]) continue;
    remap[static_cast<size_t>(s)] = next++;
    nb.push_back(black[static_cast<size_t>(s)]);
  }
  std::array<std::vector<int>, 3> na;
  for (int t = 0; t < 3; ++t) {
    na[static_cast<size_t>(t)].assign(static_cast<size_t>(next), -1);
    for (int s = 0; s < n; ++s) {
      if (is_dead[static_cast<size_t>(s)]) continue;
      int p = adj[static_cast<size_t>(t)][static_cast<size_t>(s)];
      if (p < 0 || is_dead[static_cast<size_t>(p)])
        throw internal_error("TriSurf: dangling adjacency after surgery");
      na[static_cast<size_t>(t)][static_cast<size_t>(remap[static_cast<size_t>(s)])] =
          remap[static_cast<size_t>(p)];
    }
  }
  return make(std::move(nb), std::move(na));
}

TriSurf TriSurf::from_dessin(const Dessin& D) {
  int d = D.degree();
  std::vector<uint8_t> black(static_cast<size_t>(2 * d), 0);
  std::array<std::vector<int>, 3> adj;
  for (auto& a : adj) a.assign(static_cast<size_t>(2 * d), -1);
  auto link = [&adj](EdgeType t, int x, int y) {
    adj[static_cast<size_t>(as_i(t))][static_cast<size_t>(x)] = y;
    adj[static_cast<size_t>(as_i(t))][static_cast<size_t>(y)] = x;
  };
  for (int i = 1; i <= d; ++i) {
    black[static_cast<size_t>(black_slot(i))] = 1;
    link(EdgeType::e01, black_slot(i), white_slot(i));
    link(EdgeType::ei0, black_slot(i), white_slot(D.sigma0()(i)));
    link(EdgeType::e1i, white_slot(i), black_slot(D.sigma1()(i)));
  }
  return make(std::move(black), std::move(adj));
}

Dessin TriSurf::to_dessin() const {
  check_valid();
  int n = slot_count();
  std::vector<int> label(static_cast<size_t>(n), 0);
  int d = 0;
  for (int s = 0; s < n; ++s)
    if (is_black(s)) label[static_cast<size_t>(s)] = ++d;
  std::vector<int> img0(static_cast<size_t>(d)), img1(static_cast<size_t>(d));
  for (int s = 0; s < n; ++s) {
    if (!is_black(s)) continue;
    int i = label[static_cast<size_t>(s)];
    img0[static_cast<size_t>(i) - 1] = label[static_cast<size_t>(corner_step(*this, 0, s))];
    img1[static_cast<size_t>(i) - 1] = label[static_cast<size_t>(corner_step(*this, 1, s))];
  }
  return Dessin(Permutation::from_images(img0), Permutation::from_images(img1));
}

std::array<int, 3> TriSurf::vertex_counts() const {
  std::array<int, 3> out{0, 0, 0};
  int n = slot_count();
  for (int corner = 0; corner < 3; ++corner) {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int s = 0; s < n; ++s) {
      if (!is_black(s) || seen[static_cast<size_t>(s)]) continue;
      ++out[static_cast<size_t>(corner)];
      int x = s;
      do {
        seen[static_cast<size_t>(x)] = true;
        x = corner_step(*this, corner, x);
      } while (x != s);
    }
  }
  return out;
}

int TriSurf::vertex_count() const {
  auto v = vertex_counts();
  return v[0] + v[1] + v[2];
}

int TriSurf::genus_euler() const {
  int chi = vertex_count() - edge_count() + triangle_count();
  if (chi > 2 || (2 - chi) % 2 != 0) throw internal_error("TriSurf: bad Euler characteristic");
  return (2 - chi) / 2;
}

bool TriSurf::connected() const {
  int n = slot_count();
  if (n == 0) return false;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    ++count;
    for (EdgeType t : kEdgeTypes) {
      int p = partner(t, s);
      if (!seen[static_cast<size_t>(p)]) {
        seen[static_cast<size_t>(p)] = true;
        stack.push_back(p);
      }
    }
  }
  return count == n;
}

TriSurf TriSurf::star_triangle(int s) const {
  if (s < 0 || s >= slot_count()) throw invalid_input("star_triangle: slot out of range");
  std::vector<uint8_t> black = black_;
  std::array<std::vector<int>, 3> adj = adj_;
  int n = slot_count();
  // Three fresh slots: n, n+1 of the starred triangle's color, n+2 opposite.
  bool b = is_black(s);
  black.push_back(b ? 1 : 0);
  black.push_back(b ? 1 : 0);
  black.push_back(b ? 0 : 1);
  for (auto& a : adj) a.resize(static_cast<size_t>(n) + 3, -1);
  auto link = [&adj](EdgeType t, int x, int y) {
    adj[static_cast<size_t>(as_i(t))][static_cast<size_t>(x)] = y;
    adj[static_cast<size_t>(as_i(t))][static_cast<size_t>(y)] = x;
  };
  int p01 = partner(EdgeType::e01, s);
  int p1i = partner(EdgeType::e1i, s);
  int pi0 = partner(EdgeType::ei0, s);
  int n1 = n, n2 = n + 1, nw = n + 2;
  link(EdgeType::e01, p01, n1);
  link(EdgeType::e1i, p1i, n2);
  link(EdgeType::ei0, pi0, n2);
  link(EdgeType::e01, n2, nw);
  link(EdgeType::e1i, nw, n1);
  link(EdgeType::ei0, nw, n1);
  TriSurf out = compact_make(black, adj, {s});
  if (!out.connected()) throw internal_error("star_triangle: result disconnected");
  return out;
}

TriSurf rhombus_sum(const TriSurf& X, int b1, EdgeType t, const TriSurf& Y, int b2) {
  if (b1 < 0 || b1 >= X.slot_count() || !X.is_black(b1))
    throw invalid_input("rhombus_sum: anchor must be a black slot");
  if (b2 < 0 || b2 >= Y.slot_count() || !Y.is_black(b2))
    throw invalid_input("rhombus_sum: anchor must be a black slot");
  int w1 = X.partner(t, b1), w2 = Y.partner(t, b2);
  for (EdgeType u : kEdgeTypes) {
    if (u == t) continue;
    if (X.partner(u, b1) == w1)
      throw invalid_input("rhombus_sum: degenerate rhombus (triangles glued along two edges)");
    if (Y.partner(u, b2) == w2)
      throw invalid_input("rhombus_sum: degenerate rhombus in the second surface");
  }
  int nx = X.slot_count(), ny = Y.slot_count();
  std::vector<uint8_t> black = X.black_;
  black.insert(black.end(), Y.black_.begin(), Y.black_.end());
  std::array<std::vector<int>, 3> adj;
  for (int u = 0; u < 3; ++u) {
    adj[static_cast<size_t>(u)] = X.adj_[static_cast<size_t>(u)];
    for (int s = 0; s < ny; ++s)
      adj[static_cast<size_t>(u)].push_back(Y.adj_[static_cast<size_t>(u)][static_cast<size_t>(s)] + nx);
  }
  auto link = [&adj](EdgeType u, int x, int y) {
    adj[static_cast<size_t>(as_i(u))][static_cast<size_t>(x)] = y;
    adj[static_cast<size_t>(as_i(u))][static_cast<size_t>(y)] = x;
  };
  // Boundary gluing: black sides of one rhombus meet white sides of the
  // other, edge types matching.
  for (EdgeType u : kEdgeTypes) {
    if (u == t) continue;
    link(u, X.partner(u, b1), Y.partner(u, w2) + nx);
    link(u, X.partner(u, w1), Y.partner(u, b2) + nx);
  }
  TriSurf out = TriSurf::compact_make(black, adj, {b1, w1, b2 + nx, w2 + nx});
  if (!out.connected()) throw internal_error("rhombus_sum: result disconnected");
  return out;
}

namespace {

// The three orientations of the four-triangle sphere, keyed by the type of
// its doubled edge, and likewise for the six-triangle double pyramid.
Dessin four_sphere(EdgeType t) {
  Permutation flip2 = Permutation::from_cycles(2, {{1, 2}});
  Permutation id2(2);
  switch (t) {
    case EdgeType::e01: return Dessin(flip2, flip2);
    case EdgeType::e1i: return Dessin(id2, flip2);
    default: return Dessin(flip2, id2);
  }
}

Dessin pyramid_sphere(EdgeType t) {
  Permutation c132 = Permutation::from_cycles(3, {{1, 3, 2}});
  Permutation c123 = Permutation::from_cycles(3, {{1, 2, 3}});
  Permutation id3(3);
  switch (t) {
    case EdgeType::e01: return Dessin(c132, c123);
    case EdgeType::e1i: return Dessin(id3, c132);
    default: return Dessin(c123, id3);
  }
}

}  // namespace

TriSurf TriSurf::star_edge(int b, EdgeType t) const {
  if (b < 0 || b >= slot_count()) throw invalid_input("star_edge: slot out of range");
  if (!is_black(b)) b = partner(t, b);  // normalize to the black side
  TriSurf P = TriSurf::from_dessin(pyramid_sphere(t));
  TriSurf out = rhombus_sum(*this, b, t, P, 0);
  return out;
}

TriSurf TriSurf::flip(int b, EdgeType t) const {
  if (b < 0 || b >= slot_count()) throw invalid_input("flip: slot out of range");
  if (!is_black(b)) b = partner(t, b);
  TriSurf S = TriSurf::from_dessin(four_sphere(t));
  return rhombus_sum(*this, b, t, S, 0);
}

std::string TriSurf::to_dot() const {
  std::ostringstream ss;
  ss << "graph trisurf {\n  node [style=filled];\n";
  for (int s = 0; s < slot_count(); ++s)
    ss << "  t" << s << " [fillcolor=" << (is_black(s) ? "gray20, fontcolor=white" : "white")
       << "];\n";
  const char* tag[3] = {"01", "1*", "*0"};
  for (int s = 0; s < slot_count(); ++s)
    for (EdgeType t : kEdgeTypes)
      if (partner(t, s) > s)
        ss << "  t" << s << " -- t" << partner(t, s) << " [label=\"" << tag[as_i(t)] << "\"];\n";
  ss << "}\n";
  return ss.str();
}

int max_valence(const Dessin& D) {
  return std::max({D.sigma0().max_cycle_length(), D.sigma1().max_cycle_length(),
                   D.sigma_infinity().max_cycle_length()});
}

int max_valence(const TriSurf& T) { return max_valence(T.to_dessin()); }

Dessin barycentric_subdivision(const Dessin& D) {
  int d = D.degree();
  const Permutation& s0 = D.sigma0();
  const Permutation& s1 = D.sigma1();
  Permutation s0i = s0.inverse(), s1i = s1.inverse();

  /* Half-edge labels for the subdivided dessin, one per (triangulation
   * edge, endpoint) incidence:
   *   e01 edge i:   ring end  i,       dot end  d+i
   *   e1i edge i:   dot end   2d+i,    star end 3d+i   (between W_i and B_{s1 i})
   *   ei0 edge i:   star end  4d+i,    ring end 5d+i   (between B_i and W_{s0 i})
   * New white vertices are the edge midpoints (transpositions), new black
   * vertices are the original vertices with their counterclockwise fans.
   */
  std::vector<std::vector<int>> c0;
  for (int i = 1; i <= d; ++i) {
    c0.push_back({i, d + i});
    c0.push_back({2 * d + i, 3 * d + i});
    c0.push_back({4 * d + i, 5 * d + i});
  }

  std::vector<std::vector<int>> c1;
  for (const auto& cyc : s0.cycles()) {  // ring vertices
    std::vector<int> fan;
    for (int i : cyc) {
      fan.push_back(i);
      fan.push_back(5 * d + i);
    }
    c1.push_back(std::move(fan));
  }
  for (const auto& cyc : s1.cycles()) {  // dot vertices
    std::vector<int> fan;
    for (int i : cyc) {
      fan.push_back(d + i);
      fan.push_back(2 * d + i);
    }
    c1.push_back(std::move(fan));
  }
  {  // star vertices: orbits of i -> s0^-1 s1^-1 i on black slots
    std::vector<bool> seen(static_cast<size_t>(d) + 1, false);
    for (int i = 1; i <= d; ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      std::vector<int> fan;
      int x = i;
      do {
        seen[static_cast<size_t>(x)] = true;
        fan.push_back(3 * d + s1i(x));
        fan.push_back(4 * d + s0i(s1i(x)));
        x = s0i(s1i(x));
      } while (x != i);
      c1.push_back(std::move(fan));
    }
  }

  return Dessin(Permutation::from_cycles(6 * d, c0), Permutation::from_cycles(6 * d, c1),
                D.name().empty() ? "" : D.name() + " subdivided");
}

}  // namespace belyi
