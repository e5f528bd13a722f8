#include "belyi/peel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace belyi {

Peel maximal_peel(const TriSurf& T, int root) {
  int n = T.slot_count();
  if (root < 0 || root >= n) throw invalid_input("maximal_peel: root out of range");
  if (!T.connected()) throw invalid_input("maximal_peel: surface not connected");

  Peel P;
  P.root = root;
  P.parent.assign(static_cast<size_t>(n), -1);
  P.parent_type.assign(static_cast<size_t>(n), EdgeType::e01);
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::vector<PeelSide> open;

  used[static_cast<size_t>(root)] = true;
  P.order.push_back(root);
  for (EdgeType t : kEdgeTypes) open.push_back({root, t});

  while (static_cast<int>(P.order.size()) < n) {
    // Lowest new slot first, then lowest carrying side.
    int best = -1;
    for (size_t i = 0; i < open.size(); ++i) {
      int v = T.partner(open[i].type, open[i].slot);
      if (used[static_cast<size_t>(v)]) continue;
      if (best < 0) {
        best = static_cast<int>(i);
        continue;
      }
      int bv = T.partner(open[static_cast<size_t>(best)].type, open[static_cast<size_t>(best)].slot);
      if (v < bv || (v == bv && open[i].slot < open[static_cast<size_t>(best)].slot))
        best = static_cast<int>(i);
    }
    if (best < 0) throw internal_error("maximal_peel: no extension on a connected surface");
    PeelSide side = open[static_cast<size_t>(best)];
    open.erase(open.begin() + best);
    int v = T.partner(side.type, side.slot);
    used[static_cast<size_t>(v)] = true;
    P.order.push_back(v);
    P.parent[static_cast<size_t>(v)] = side.slot;
    P.parent_type[static_cast<size_t>(v)] = side.type;
    for (EdgeType t : kEdgeTypes)
      if (t != side.type) open.push_back({v, t});
  }

  P.boundary = std::move(open);
  P.pairing.assign(P.boundary.size(), -1);
  for (size_t i = 0; i < P.boundary.size(); ++i) {
    if (P.pairing[i] >= 0) continue;
    PeelSide mate{T.partner(P.boundary[i].type, P.boundary[i].slot), P.boundary[i].type};
    auto it = std::find(P.boundary.begin() + static_cast<long>(i) + 1, P.boundary.end(), mate);
    if (it == P.boundary.end())
      throw internal_error("maximal_peel: unmatched boundary side");
    size_t j = static_cast<size_t>(it - P.boundary.begin());
    P.pairing[i] = static_cast<int>(j);
    P.pairing[j] = static_cast<int>(i);
  }
  return P;
}

TriSurf quotient_of_peel(const TriSurf& T, const Peel& P) {
  int n = T.slot_count();
  std::vector<uint8_t> black(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) black[static_cast<size_t>(s)] = T.is_black(s) ? 1 : 0;
  std::array<std::vector<int>, 3> adj;
  for (auto& a : adj) a.assign(static_cast<size_t>(n), -1);
  auto link = [&adj](EdgeType t, int x, int y) {
    adj[static_cast<size_t>(static_cast<int>(t))][static_cast<size_t>(x)] = y;
    adj[static_cast<size_t>(static_cast<int>(t))][static_cast<size_t>(y)] = x;
  };
  for (int s : P.order)
    if (P.parent[static_cast<size_t>(s)] >= 0)
      link(P.parent_type[static_cast<size_t>(s)], s, P.parent[static_cast<size_t>(s)]);
  for (size_t i = 0; i < P.boundary.size(); ++i) {
    size_t j = static_cast<size_t>(P.pairing[i]);
    if (j <= i) continue;
    if (P.boundary[i].type != P.boundary[j].type)
      throw internal_error("quotient_of_peel: paired sides of different types");
    link(P.boundary[i].type, P.boundary[i].slot, P.boundary[j].slot);
  }
  return TriSurf(std::move(black), std::move(adj));
}

namespace {

// Surface edge ids: one per adjacency pair and type.
struct EdgeIndex {
  std::map<std::pair<int, int>, int> id;  // key: (min slot, 3*type-ish)
  int count = 0;

  explicit EdgeIndex(const TriSurf& T) {
    for (int s = 0; s < T.slot_count(); ++s)
      for (EdgeType t : kEdgeTypes) {
        int p = T.partner(t, s);
        if (p > s) id[{s, static_cast<int>(t)}] = count++;
      }
  }
  int of(const TriSurf& T, int slot, EdgeType t) const {
    int p = T.partner(t, slot);
    auto it = id.find({std::min(slot, p), static_cast<int>(t)});
    if (it == id.end()) throw internal_error("EdgeIndex: unknown edge");
    return it->second;
  }
};

// Class of a dual walk as a vector over surface edges, oriented black->white.
std::vector<long long> loop_vector(const TriSurf& T, const EdgeIndex& E, const DualLoop& L) {
  std::vector<long long> v(static_cast<size_t>(E.count), 0);
  for (size_t k = 0; k + 1 < L.slots.size(); ++k) {
    int x = L.slots[k];
    int e = E.of(T, x, L.steps[k]);
    v[static_cast<size_t>(e)] += T.is_black(x) ? 1 : -1;
  }
  return v;
}

// Boundaries of the dual 2-cells (one per surface vertex): the fan cycles.
std::vector<std::vector<long long>> face_vectors(const TriSurf& T, const EdgeIndex& E) {
  std::vector<std::vector<long long>> out;
  int n = T.slot_count();
  // corner 0: ring (cross ei0 then e01), 1: dot (e01 then e1i), 2: star (e1i then ei0)
  const EdgeType first_cross[3] = {EdgeType::ei0, EdgeType::e01, EdgeType::e1i};
  const EdgeType second_cross[3] = {EdgeType::e01, EdgeType::e1i, EdgeType::ei0};
  for (int corner = 0; corner < 3; ++corner) {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int s = 0; s < n; ++s) {
      if (!T.is_black(s) || seen[static_cast<size_t>(s)]) continue;
      std::vector<long long> v(static_cast<size_t>(E.count), 0);
      int b = s;
      do {
        seen[static_cast<size_t>(b)] = true;
        int w = T.partner(first_cross[corner], b);
        v[static_cast<size_t>(E.of(T, b, first_cross[corner]))] += 1;   // black -> white
        int b2 = T.partner(second_cross[corner], w);
        v[static_cast<size_t>(E.of(T, w, second_cross[corner]))] -= 1;  // white -> black
        b = b2;
      } while (b != s);
      out.push_back(std::move(v));
    }
  }
  return out;
}

// Rank over Q by fraction-free elimination on long double-free rationals.
int rank_of(std::vector<std::vector<Rational>> rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  int rank = 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c] == 0) continue;
      Rational f = rows[k][c] / rows[r][c];
      for (size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

std::vector<Rational> to_rat(const std::vector<long long>& v) {
  std::vector<Rational> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

std::vector<int> tree_path_to_root(const Peel& P, int slot) {
  std::vector<int> path{slot};
  while (P.parent[static_cast<size_t>(path.back())] >= 0)
    path.push_back(P.parent[static_cast<size_t>(path.back())]);
  return path;  // slot, ..., root
}

}  // namespace

std::vector<DualLoop> pair_loops(const TriSurf&, const Peel& P) {
  std::vector<DualLoop> loops;
  for (size_t i = 0; i < P.boundary.size(); ++i) {
    size_t j = static_cast<size_t>(P.pairing[i]);
    if (j <= i) continue;
    const PeelSide& su = P.boundary[i];
    const PeelSide& sv = P.boundary[j];
    DualLoop L;
    std::vector<int> down = tree_path_to_root(P, su.slot);  // u .. root
    std::reverse(down.begin(), down.end());                 // root .. u
    L.slots = down;
    for (size_t k = 0; k + 1 < down.size(); ++k)
      L.steps.push_back(P.parent_type[static_cast<size_t>(down[k + 1])]);
    L.slots.push_back(sv.slot);
    L.steps.push_back(su.type);
    std::vector<int> up = tree_path_to_root(P, sv.slot);  // v .. root
    for (size_t k = 1; k < up.size(); ++k) {
      L.slots.push_back(up[k]);
      L.steps.push_back(P.parent_type[static_cast<size_t>(up[k - 1])]);
    }
    loops.push_back(std::move(L));
  }
  return loops;
}

int loop_rank_in_h1(const TriSurf& T, const std::vector<DualLoop>& loops) {
  EdgeIndex E(T);
  std::vector<std::vector<Rational>> base;
  for (const auto& f : face_vectors(T, E)) base.push_back(to_rat(f));
  int rank_faces = rank_of(base);
  for (const auto& L : loops) base.push_back(to_rat(loop_vector(T, E, L)));
  return rank_of(base) - rank_faces;
}

std::vector<DualLoop> homology_loops(const TriSurf& T, const Peel& P) {
  int g = T.genus_euler();
  std::vector<DualLoop> picked;
  if (g == 0) return picked;
  EdgeIndex E(T);
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : face_vectors(T, E)) rows.push_back(to_rat(f));
  int rank = rank_of(rows);
  for (const auto& L : pair_loops(T, P)) {
    auto trial = rows;
    trial.push_back(to_rat(loop_vector(T, E, L)));
    int r = rank_of(trial);
    if (r > rank) {
      rows = std::move(trial);
      rank = r;
      picked.push_back(L);
      if (static_cast<int>(picked.size()) == 2 * g) break;
    }
  }
  if (static_cast<int>(picked.size()) != 2 * g)
    throw internal_error("homology_loops: could not find 2g independent loops");
  return picked;
}

BoundaryGraphInfo boundary_graph(const TriSurf& T, const Peel& P) {
  BoundaryGraphInfo info;
  info.vertices = T.vertex_count();  // every vertex lies on the peel boundary
  info.edges = static_cast<int>(P.boundary.size()) / 2;
  info.betti1 = 1 - info.vertices + info.edges;
  return info;
}

FareyVertex::FareyVertex(BigInt p_, BigInt q_) : p(std::move(p_)), q(std::move(q_)) {
  if (p == 0 && q == 0) throw internal_error("FareyVertex: 0/0");
  BigInt g = gcd_big(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
}

std::string FareyVertex::to_string() const {
  if (is_infinity()) return "inf";
  std::ostringstream ss;
  ss << p;
  if (q != 1) ss << "/" << q;
  return ss.str();
}

namespace {

// Third vertex of the neighboring ideal triangle across (u, v): the Farey
// mediant or co-mediant, whichever is not the current apex.
FareyVertex mediant_reflect(const FareyVertex& u, const FareyVertex& v, const FareyVertex& apex) {
  FareyVertex c1(u.p + v.p, u.q + v.q);
  FareyVertex c2(u.p - v.p, u.q - v.q);
  if (c1 == apex) return c2;
  if (c2 == apex) return c1;
  throw internal_error("mediant_reflect: apex is not a Farey neighbor of the side");
}

// Shared corner roles per side type; the remaining role is the apex.
void side_roles(EdgeType t, int& keep1, int& keep2, int& apex) {
  switch (t) {
    case EdgeType::e01: keep1 = 0; keep2 = 1; apex = 2; break;  // ring, dot | star
    case EdgeType::e1i: keep1 = 1; keep2 = 2; apex = 0; break;  // dot, star | ring
    default: keep1 = 2; keep2 = 0; apex = 1; break;             // star, ring | dot
  }
}

FareyVertex& role_of(IdealTriangle& tri, int role) {
  return role == 0 ? tri.ring : role == 1 ? tri.dot : tri.star;
}
const FareyVertex& role_of(const IdealTriangle& tri, int role) {
  return role == 0 ? tri.ring : role == 1 ? tri.dot : tri.star;
}

IdealTriangle extend_across(const IdealTriangle& from, EdgeType t) {
  int k1, k2, ap;
  side_roles(t, k1, k2, ap);
  IdealTriangle out = from;
  role_of(out, ap) = mediant_reflect(role_of(from, k1), role_of(from, k2), role_of(from, ap));
  return out;
}

}  // namespace

std::vector<IdealTriangle> ideal_peel_coordinates(const TriSurf& T, const Peel& P) {
  std::vector<IdealTriangle> dev(static_cast<size_t>(T.slot_count()));
  IdealTriangle root;
  root.ring = FareyVertex(0, 1);
  root.dot = FareyVertex(1, 1);
  root.star = FareyVertex(1, 0);
  dev[static_cast<size_t>(P.root)] = root;
  for (int s : P.order) {
    int par = P.parent[static_cast<size_t>(s)];
    if (par < 0) continue;
    dev[static_cast<size_t>(s)] = extend_across(dev[static_cast<size_t>(par)],
                                                P.parent_type[static_cast<size_t>(s)]);
  }
  return dev;
}

Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

namespace {

// Integer matrix sending (z1, z2, z3) to (0, infinity, 1).
Mat2 to_standard(const FareyVertex& z1, const FareyVertex& z2, const FareyVertex& z3) {
  // rows (q1 z - p1) and (q2 z - p2), scaled to hit 1 at z3.
  BigInt alpha = z2.q * z3.p - z2.p * z3.q;
  BigInt beta = z1.q * z3.p - z1.p * z3.q;
  Mat2 M{alpha * z1.q, -alpha * z1.p, beta * z2.q, -beta * z2.p};
  if (M.det() == 0) throw internal_error("to_standard: degenerate cusp triple");
  return M;
}

Mat2 primitive(Mat2 M) {
  BigInt g = gcd_big(gcd_big(M.a, M.b), gcd_big(M.c, M.d));
  if (g == 0) throw internal_error("primitive: zero matrix");
  M.a /= g;
  M.b /= g;
  M.c /= g;
  M.d /= g;
  // canonical sign in PSL
  if (M.a < 0 || (M.a == 0 && M.b < 0)) {
    M.a = -M.a;
    M.b = -M.b;
    M.c = -M.c;
    M.d = -M.d;
  }
  return M;
}

Mat2 mobius_from_triples(const IdealTriangle& src, const IdealTriangle& tgt) {
  Mat2 S = to_standard(src.ring, src.dot, src.star);
  Mat2 Tm = to_standard(tgt.ring, tgt.dot, tgt.star);
  Mat2 Tinv{Tm.d, -Tm.b, -Tm.c, Tm.a};
  Mat2 M = primitive(mul(Tinv, S));
  if (M.det() != 1)
    throw internal_error("mobius_from_triples: pairing map is not orientation-preserving");
  return M;
}

}  // namespace

std::vector<Mat2> ideal_pairing_maps(const TriSurf& T, const Peel& P) {
  std::vector<IdealTriangle> dev = ideal_peel_coordinates(T, P);
  std::vector<Mat2> maps;
  for (size_t i = 0; i < P.boundary.size(); ++i) {
    size_t j = static_cast<size_t>(P.pairing[i]);
    if (j <= i) continue;
    const PeelSide& su = P.boundary[i];
    const PeelSide& sv = P.boundary[j];
    // Crossing the glued edge out of sv lands in su's triangle: the deck
    // map carries the developed copy of su.slot onto the extension of
    // sv.slot's development across the side.
    IdealTriangle beyond = extend_across(dev[static_cast<size_t>(sv.slot)], sv.type);
    maps.push_back(mobius_from_triples(dev[static_cast<size_t>(su.slot)], beyond));
  }
  return maps;
}

bool in_gamma2(const Mat2& M) {
  if (M.det() != 1) return false;
  auto odd = [](const BigInt& x) { return x % 2 != 0; };
  auto even = [](const BigInt& x) { return x % 2 == 0; };
  return odd(M.a) && odd(M.d) && even(M.b) && even(M.c);
}

std::vector<std::pair<int, BigInt>> gamma2_word(Mat2 M) {
  if (!in_gamma2(M)) throw invalid_input("gamma2_word: matrix not in the level-2 group");
  std::vector<std::pair<int, BigInt>> word;
  // Peel off A^k = [[1,2k],[0,1]] and B^k = [[1,0],[2k,1]] on the left:
  // A^-k M reduces a mod 2c, B^-k M reduces c mod 2a.  Parity keeps the
  // reductions strict, so the entries descend to c = 0.
  while (M.c != 0) {
    if (boost::multiprecision::abs(M.a) > boost::multiprecision::abs(M.c)) {
      BigInt k = rround(Rational(M.a) / Rational(2 * M.c));
      if (k == 0) throw internal_error("gamma2_word: stalled reduction");
      M.a -= 2 * k * M.c;
      M.b -= 2 * k * M.d;
      word.emplace_back(0, k);
    } else {
      BigInt k = rround(Rational(M.c) / Rational(2 * M.a));
      if (k == 0) throw internal_error("gamma2_word: stalled reduction");
      M.c -= 2 * k * M.a;
      M.d -= 2 * k * M.b;
      word.emplace_back(1, k);
    }
  }
  if (M.a == -1) {
    M.a = 1;
    M.b = -M.b;
    M.d = -M.d;
  }
  if (M.a != 1 || M.d != 1 || M.b % 2 != 0)
    throw internal_error("gamma2_word: reduction did not reach the identity coset");
  if (M.b != 0) word.emplace_back(0, M.b / 2);
  return word;
}

long stallings_index(const std::vector<std::vector<std::pair<int, BigInt>>>& words) {
  // Wedge of word loops at a base state, folded to a deterministic and
  // co-deterministic graph; if the fold is a full cover of the rose the
  // subgroup index is the number of states.
  std::vector<int> uf{0};
  std::function<int(int)> find = [&](int x) {
    while (uf[static_cast<size_t>(x)] != x) {
      uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
      x = uf[static_cast<size_t>(x)];
    }
    return x;
  };
  auto fresh = [&] {
    uf.push_back(static_cast<int>(uf.size()));
    return static_cast<int>(uf.size()) - 1;
  };
  struct Edge {
    int from, gen, to;
  };
  std::vector<Edge> edges;
  for (const auto& w : words) {
    // expand runs into unit letters
    std::vector<std::pair<int, int>> letters;
    for (const auto& [gen, pow] : w) {
      long cnt = static_cast<long>(boost::multiprecision::abs(pow));
      for (long i = 0; i < cnt; ++i) letters.emplace_back(gen, pow > 0 ? 1 : -1);
    }
    int cur = 0;
    for (size_t i = 0; i < letters.size(); ++i) {
      int nxt = (i + 1 == letters.size()) ? 0 : fresh();
      auto [gen, e] = letters[i];
      if (e > 0)
        edges.push_back({cur, gen, nxt});
      else
        edges.push_back({nxt, gen, cur});
      cur = nxt;
    }
  }
  // fold
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out, in;
    for (const Edge& e : edges) {
      int f = find(e.from), t = find(e.to);
      auto [ito, inserted_o] = out.try_emplace({f, e.gen}, t);
      if (!inserted_o && find(ito->second) != t) {
        int a = find(ito->second);
        uf[static_cast<size_t>(std::max(a, t))] = std::min(a, t);
        changed = true;
        break;
      }
      auto [iti, inserted_i] = in.try_emplace({t, e.gen}, f);
      if (!inserted_i && find(iti->second) != f) {
        int a = find(iti->second);
        uf[static_cast<size_t>(std::max(a, f))] = std::min(a, f);
        changed = true;
        break;
      }
    }
  }
  // completeness
  std::set<int> states;
  for (size_t i = 0; i < uf.size(); ++i) states.insert(find(static_cast<int>(i)));
  std::map<std::pair<int, int>, int> out, in;
  for (const Edge& e : edges) {
    out[{find(e.from), e.gen}] = find(e.to);
    in[{find(e.to), e.gen}] = find(e.from);
  }
  for (int s : states)
    for (int g = 0; g < 2; ++g)
      if (!out.count({s, g}) || !in.count({s, g})) return -1;
  return static_cast<long>(states.size());
}

std::string peel_svg(const TriSurf& T, const Peel& P) {
  std::vector<IdealTriangle> dev = ideal_peel_coordinates(T, P);
  double xmin = 1e30, xmax = -1e30;
  auto val = [](const FareyVertex& v) {
    return v.is_infinity() ? 0.0
                           : static_cast<double>(v.p) / static_cast<double>(v.q);
  };
  for (int s : P.order) {
    for (const FareyVertex* v : {&dev[static_cast<size_t>(s)].ring, &dev[static_cast<size_t>(s)].dot,
                                 &dev[static_cast<size_t>(s)].star}) {
      if (v->is_infinity()) continue;
      xmin = std::min(xmin, val(*v));
      xmax = std::max(xmax, val(*v));
    }
  }
  if (xmin > xmax) {
    xmin = 0;
    xmax = 1;
  }
  double span = std::max(xmax - xmin, 1.0);
  double scale = 600.0 / span;
  double height = 320.0, pad = 20.0;
  auto X = [&](double x) { return pad + (x - xmin) * scale; };
  auto Y = [&](double y) { return height - y * scale; };  // y >= 0 in the model

  std::ostringstream ss;
  ss << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (640 + 2 * pad) << "\" height=\""
     << (height + pad) << "\">\n";
  ss << "<line x1=\"0\" y1=\"" << height << "\" x2=\"" << (640 + 2 * pad) << "\" y2=\"" << height
     << "\" stroke=\"black\"/>\n";
  auto geodesic = [&](const FareyVertex& u, const FareyVertex& v, const char* color) {
    if (u.is_infinity() || v.is_infinity()) {
      double x = val(u.is_infinity() ? v : u);
      ss << "<line x1=\"" << X(x) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(x)
         << "\" y2=\"0\" stroke=\"" << color << "\" fill=\"none\"/>\n";
      return;
    }
    double a = val(u), b = val(v);
    if (a > b) std::swap(a, b);
    double r = (b - a) / 2;
    ss << "<path d=\"M " << X(a) << " " << Y(0) << " A " << r * scale << " " << r * scale
       << " 0 0 1 " << X(b) << " " << Y(0) << "\" stroke=\"" << color << "\" fill=\"none\"/>\n";
  };
  for (int s : P.order) {
    const IdealTriangle& t = dev[static_cast<size_t>(s)];
    geodesic(t.ring, t.dot, "gray");
    geodesic(t.dot, t.star, "gray");
    geodesic(t.star, t.ring, "gray");
  }
  const char* colors[] = {"crimson", "royalblue", "seagreen", "darkorange", "purple", "teal"};
  int ci = 0;
  for (size_t i = 0; i < P.boundary.size(); ++i) {
    size_t j = static_cast<size_t>(P.pairing[i]);
    if (j <= i) continue;
    const char* color = colors[ci++ % 6];
    for (size_t k : {i, j}) {
      const PeelSide& sd = P.boundary[k];
      int r1, r2, ap;
      side_roles(sd.type, r1, r2, ap);
      geodesic(role_of(dev[static_cast<size_t>(sd.slot)], r1),
               role_of(dev[static_cast<size_t>(sd.slot)], r2), color);
    }
  }
  ss << "</svg>\n";
  return ss.str();
}

}  // namespace belyi
