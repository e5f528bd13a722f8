// Command-line front end: validation, reports, geodesic words and lengths,
// surgery, peels and moduli for dessin files.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "belyi/connected_sum.hpp"
#include "belyi/geodesic.hpp"
#include "belyi/json_io.hpp"
#include "belyi/lattice.hpp"
#include "belyi/peel.hpp"
#include "belyi/trisurf.hpp"

namespace {

using namespace belyi;

std::string passport_string(const Dessin& D) {
  std::ostringstream ss;
  const char* tag[3] = {"sigma0", "sigma1", "sigmaInf"};
  auto pp = D.passport();
  for (int k = 0; k < 3; ++k) {
    ss << tag[k] << ": {";
    for (size_t i = 0; i < pp[static_cast<size_t>(k)].size(); ++i)
      ss << (i ? "," : "") << pp[static_cast<size_t>(k)][i];
    ss << "}" << (k < 2 ? "  " : "");
  }
  return ss.str();
}

void write_or_print(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write " + path);
  out << content;
}

std::string dessin_dot(const Dessin& D) {
  // Bipartite dessin graph: one node per white / black vertex, one edge
  // per dessin edge label.
  std::ostringstream ss;
  ss << "graph dessin {\n";
  auto c0 = D.sigma0().cycles();
  auto c1 = D.sigma1().cycles();
  std::vector<int> white_of(static_cast<size_t>(D.degree()) + 1, 0);
  std::vector<int> black_of(static_cast<size_t>(D.degree()) + 1, 0);
  for (size_t k = 0; k < c0.size(); ++k) {
    ss << "  w" << k << " [shape=circle, style=filled, fillcolor=white];\n";
    for (int e : c0[k]) white_of[static_cast<size_t>(e)] = static_cast<int>(k);
  }
  for (size_t k = 0; k < c1.size(); ++k) {
    ss << "  b" << k << " [shape=circle, style=filled, fillcolor=black];\n";
    for (int e : c1[k]) black_of[static_cast<size_t>(e)] = static_cast<int>(k);
  }
  for (int e = 1; e <= D.degree(); ++e)
    ss << "  w" << white_of[static_cast<size_t>(e)] << " -- b" << black_of[static_cast<size_t>(e)]
       << " [label=\"" << e << "\"];\n";
  ss << "}\n";
  return ss.str();
}

EdgeType parse_type(const std::string& s) {
  if (s == "01") return EdgeType::e01;
  if (s == "1i" || s == "1inf") return EdgeType::e1i;
  if (s == "i0" || s == "inf0") return EdgeType::ei0;
  throw invalid_input("unknown edge type '" + s + "' (expected 01, 1i or i0)");
}

int run(int argc, char** argv) {
  CLI::App app{"exact computations with dessins d'enfants and decorated equilateral "
               "triangulations"};
  app.require_subcommand(1);

  // info
  std::string info_file;
  auto* info = app.add_subcommand("info", "degree, passport, genus, transitivity, valence");
  info->add_option("file", info_file)->required();

  // sum
  std::string sum_f1, sum_f2;
  int sum_e1 = 0, sum_e2 = 0;
  auto* sum = app.add_subcommand("sum", "connected sum of two dessins at chosen edges");
  sum->add_option("file1", sum_f1)->required();
  sum->add_option("edge1", sum_e1)->required();
  sum->add_option("file2", sum_f2)->required();
  sum->add_option("edge2", sum_e2)->required();

  // geodesic word|sigma|length
  auto* geo = app.add_subcommand("geodesic", "closed-geodesic words, permutations, lengths");
  geo->require_subcommand(1);
  long long wm = 0, wn = 0;
  bool word_json = false;
  auto* gword = geo->add_subcommand("word", "factorization of the direction m + n w");
  gword->add_option("m", wm)->required();
  gword->add_option("n", wn)->required();
  gword->add_flag("--json", word_json, "emit the word as JSON");
  std::string gs_file;
  long long gsm = 0, gsn = 0;
  auto* gsigma = geo->add_subcommand("sigma", "fiber permutation of the direction");
  gsigma->add_option("file", gs_file)->required();
  gsigma->add_option("m", gsm)->required();
  gsigma->add_option("n", gsn)->required();
  std::string gl_file;
  int gl_edge = 0;
  long long glm = 0, gln = 0;
  auto* glen = geo->add_subcommand("length", "length of the developed closed geodesic");
  glen->add_option("file", gl_file)->required();
  glen->add_option("edge", gl_edge)->required();
  glen->add_option("m", glm)->required();
  glen->add_option("n", gln)->required();

  // subdivide
  std::string sub_file;
  auto* sub = app.add_subcommand("subdivide", "barycentric subdivision as a dessin");
  sub->add_option("file", sub_file)->required();

  // flip
  std::string flip_file, flip_type = "01";
  int flip_edge = 0;
  auto* flip = app.add_subcommand("flip", "reglue the rhombus at an edge (tetrahedron sum)");
  flip->add_option("file", flip_file)->required();
  flip->add_option("edge", flip_edge)->required();
  flip->add_option("--type", flip_type, "rhombus diagonal type: 01, 1i, i0");

  // star
  std::string star_file, star_mode, star_type = "01", star_color = "black";
  int star_edge = 0;
  auto* star = app.add_subcommand("star", "elementary starring of a face or an edge");
  star->add_option("mode", star_mode, "face or edge")->required();
  star->add_option("file", star_file)->required();
  star->add_option("edge", star_edge, "dessin edge selecting the triangle/side")->required();
  star->add_option("--type", star_type, "side type for edge starring: 01, 1i, i0");
  star->add_option("--color", star_color, "triangle color for face starring");

  // peel
  std::string peel_file, peel_svg_path;
  bool peel_json = false;
  int peel_root = 0;
  auto* peel = app.add_subcommand("peel", "maximal peel, boundary pairing, ideal development");
  peel->add_option("file", peel_file)->required();
  peel->add_flag("--json", peel_json, "dump the boundary pairing as JSON");
  peel->add_option("--svg", peel_svg_path, "write the ideal development as SVG");
  peel->add_option("--root", peel_root, "starting triangle slot for the greedy growth");

  // modulus
  std::string mod_file;
  auto* mod = app.add_subcommand("modulus", "flat modulus of a smooth genus-1 dessin");
  mod->add_option("file", mod_file)->required();

  // torus
  std::vector<long long> basis;
  auto* torus = app.add_subcommand(
      "torus", "quotient dessin of a sublattice of Hex, basis in coordinates of (2-w, 1+w)");
  torus->add_option("--basis", basis, "a b c d: rows a(2-w)+b(1+w), c(2-w)+d(1+w)")
      ->expected(4)
      ->required();

  // emit
  std::string emit_file, emit_dot, emit_svg, emit_json;
  auto* emit = app.add_subcommand("emit", "export a dessin as DOT, peel SVG, or JSON");
  emit->add_option("file", emit_file)->required();
  emit->add_option("--dot", emit_dot, "write the bipartite graph as DOT ('-' for stdout)");
  emit->add_option("--svg-peel", emit_svg, "write the ideal peel as SVG");
  emit->add_option("--json", emit_json, "write normalized JSON");

  CLI11_PARSE(app, argc, argv);

  if (*info) {
    Dessin D = load_dessin(info_file);
    std::cout << "degree: " << D.degree() << "\n";
    if (!D.name().empty()) std::cout << "name: " << D.name() << "\n";
    std::cout << "passport: " << passport_string(D) << "\n";
    std::cout << "genus: " << D.genus() << "\n";
    std::cout << "transitive: yes\n";  // enforced on load
    std::cout << "max valence: " << max_valence(D) << "\n";
    std::cout << "galois: " << (D.is_galois() ? "yes" : "no") << "\n";
  } else if (*sum) {
    Dessin D = connected_sum(load_dessin(sum_f1), sum_e1, load_dessin(sum_f2), sum_e2);
    std::cout << dessin_to_json(D);
  } else if (*gword) {
    EisensteinInt w0{wm, wn};
    DirectionInfo ni = normalize_direction(w0);
    if (ni.was_normalized)
      std::cerr << "note: direction normalized to " << ni.primitive.to_string() << "\n";
    GeodesicWord w = word_of_direction(w0);
    if (word_json) {
      std::ostringstream ss;
      ss << "{\"direction\": \"" << ni.primitive.to_string() << "\", \"in_hex\": "
         << (ni.in_hex ? "true" : "false") << ", \"word\": \"" << w.to_string()
         << "\", \"letters\": [";
      for (size_t i = 0; i < w.letters.size(); ++i)
        ss << (i ? ", " : "") << "[\"g" << w.letters[i].base << "\", "
           << w.letters[i].exponent << "]";
      ss << "]}\n";
      std::cout << ss.str();
    } else {
      std::cout << w.to_string() << "\n";
    }
  } else if (*gsigma) {
    Dessin D = load_dessin(gs_file);
    EisensteinInt w0{gsm, gsn};
    DirectionInfo ni = normalize_direction(w0);
    if (ni.was_normalized)
      std::cerr << "note: direction normalized to " << ni.primitive.to_string() << "\n";
    std::cout << sigma_gamma(D, w0).cycle_string(true) << "\n";
  } else if (*glen) {
    Dessin D = load_dessin(gl_file);
    GeodesicLength len = geodesic_length(D, gl_edge, EisensteinInt{glm, gln});
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", len.approx());
    std::cout << len.to_string() << " ≈ " << buf << "\n";
  } else if (*sub) {
    std::cout << dessin_to_json(barycentric_subdivision(load_dessin(sub_file)));
  } else if (*flip) {
    Dessin D = load_dessin(flip_file);
    if (flip_edge < 1 || flip_edge > D.degree()) throw invalid_input("flip: edge out of range");
    TriSurf T = TriSurf::from_dessin(D);
    TriSurf F = T.flip(TriSurf::black_slot(flip_edge), parse_type(flip_type));
    std::cout << dessin_to_json(F.to_dessin());
  } else if (*star) {
    Dessin D = load_dessin(star_file);
    if (star_edge < 1 || star_edge > D.degree()) throw invalid_input("star: edge out of range");
    TriSurf T = TriSurf::from_dessin(D);
    TriSurf R = T;
    if (star_mode == "face") {
      int slot = star_color == "white" ? TriSurf::white_slot(star_edge)
                                       : TriSurf::black_slot(star_edge);
      R = T.star_triangle(slot);
    } else if (star_mode == "edge") {
      R = T.star_edge(TriSurf::black_slot(star_edge), parse_type(star_type));
    } else {
      throw invalid_input("star: mode must be 'face' or 'edge'");
    }
    std::cout << dessin_to_json(R.to_dessin());
  } else if (*peel) {
    Dessin D = load_dessin(peel_file);
    TriSurf T = TriSurf::from_dessin(D);
    Peel P = maximal_peel(T, peel_root);
    BoundaryGraphInfo bg = boundary_graph(T, P);
    std::cout << "triangles: " << T.triangle_count() << "\n";
    std::cout << "boundary sides: " << P.boundary.size() << "\n";
    std::cout << "boundary graph: V=" << bg.vertices << " E=" << bg.edges
              << " betti1=" << bg.betti1 << "\n";
    std::cout << "genus: " << D.genus() << "\n";
    auto maps = ideal_pairing_maps(T, P);
    bool all_g2 = true;
    for (const auto& M : maps) all_g2 = all_g2 && in_gamma2(M);
    std::cout << "pairing maps: " << maps.size() << (all_g2 ? ", all in Gamma(2)" : "") << "\n";
    if (peel_json) {
      std::ostringstream ss;
      ss << "{\"pairs\": [";
      bool first = true;
      for (size_t i = 0; i < P.boundary.size(); ++i) {
        size_t j = static_cast<size_t>(P.pairing[i]);
        if (j <= i) continue;
        if (!first) ss << ", ";
        first = false;
        ss << "[[" << P.boundary[i].slot << "," << static_cast<int>(P.boundary[i].type) << "],["
           << P.boundary[j].slot << "," << static_cast<int>(P.boundary[j].type) << "]]";
      }
      ss << "]}\n";
      std::cout << ss.str();
    }
    if (!peel_svg_path.empty()) write_or_print(peel_svg(T, P), peel_svg_path);
  } else if (*mod) {
    Dessin D = load_dessin(mod_file);
    QuadElem tau = flat_modulus(D);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.6f + %.6f i", tau.approx_real(), tau.approx_imag());
    std::cout << "tau = " << tau.to_string() << " = " << buf << "\n";
  } else if (*torus) {
    // basis vectors a*(2-w) + b*(1+w) and c*(2-w) + d*(1+w)
    long long ta = basis[0], tb = basis[1], tc = basis[2], td = basis[3];
    EisensteinInt g1{2 * ta + tb, tb - ta};
    EisensteinInt g2{2 * tc + td, td - tc};
    std::cout << dessin_to_json(torus_from_sublattice(g1, g2));
  } else if (*emit) {
    Dessin D = load_dessin(emit_file);
    if (!emit_dot.empty()) write_or_print(dessin_dot(D), emit_dot);
    if (!emit_svg.empty()) {
      TriSurf T = TriSurf::from_dessin(D);
      Peel P = maximal_peel(T);
      write_or_print(peel_svg(T, P), emit_svg);
    }
    if (!emit_json.empty()) write_or_print(dessin_to_json(D), emit_json);
    if (emit_dot.empty() && emit_svg.empty() && emit_json.empty())
      throw invalid_input("emit: choose --dot, --svg-peel or --json");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
