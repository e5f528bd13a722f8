#include "belyi/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace belyi {

namespace {

Permutation perm_from_json(int degree, const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw invalid_input(std::string(field) + " must be an array of cycles");
  std::vector<std::vector<int>> cycles;
  for (const auto& c : j) {
    if (!c.is_array()) throw invalid_input(std::string(field) + ": cycle is not an array");
    std::vector<int> cyc;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw invalid_input(std::string(field) + ": non-integer label");
      cyc.push_back(x.get<int>());
    }
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace

Dessin dessin_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer())
    throw invalid_input("dessin file needs an integer \"degree\"");
  int d = j["degree"].get<int>();
  if (d < 1) throw invalid_input("degree must be positive");
  if (!j.contains("sigma0") || !j.contains("sigma1"))
    throw invalid_input("dessin file needs \"sigma0\" and \"sigma1\"");
  Permutation s0 = perm_from_json(d, j["sigma0"], "sigma0");
  Permutation s1 = perm_from_json(d, j["sigma1"], "sigma1");
  std::string name = j.value("name", std::string());
  return Dessin(s0, s1, name);
}

Dessin load_dessin(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return dessin_from_json(ss.str());
}

std::string dessin_to_json(const Dessin& D) {
  nlohmann::json j;
  j["degree"] = D.degree();
  if (!D.name().empty()) j["name"] = D.name();
  auto cycles_of = [](const Permutation& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.cycles()) {
      if (c.size() == 1) continue;  // fixed points are implicit
      arr.push_back(c);
    }
    return arr;
  };
  j["sigma0"] = cycles_of(D.sigma0());
  j["sigma1"] = cycles_of(D.sigma1());
  return j.dump(2) + "\n";
}

}  // namespace belyi
