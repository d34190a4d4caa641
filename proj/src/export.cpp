#include "colp/export.hpp"

#include <map>

namespace colp {

using nlohmann::json;

json resolution_json(const ResolutionComplex& rz) {
  json levels = json::array(), diffs = json::array();
  for (std::size_t t = 0; t < rz.levels(); ++t) {
    json basis = json::array();
    for (std::size_t j = 0; j < rz.rank(t); ++j) {
      json b;
      if (t < rz.symbols.size()) b["sets"] = rz.symbols[t][j].sets;
      b["degree"] = to_string(rz.degrees[t][j]);
      basis.push_back(std::move(b));
    }
    levels.push_back({{"t", t}, {"basis", std::move(basis)}});
    if (t == 0) continue;
    json entries = json::array();
    for (const auto& e : rz.differentials[t]) entries.push_back({e.row, e.col, e.sign, to_string(e.var)});
    diffs.push_back({{"t", t}, {"entries", std::move(entries)}});
  }
  return {{"levels", std::move(levels)}, {"differentials", std::move(diffs)}, {"pd", rz.pd()}};
}

std::string matrix_text(const ResolutionComplex& rz, std::size_t t) {
  if (t < 1 || t >= rz.levels()) throw InputError("matrix_text: no differential d_" + std::to_string(t));
  std::map<std::pair<std::size_t, std::size_t>, std::string> cell;
  for (const auto& e : rz.differentials[t]) cell[{e.row, e.col}] = (e.sign < 0 ? "-" : "") + to_string(e.var);
  std::string s = "d" + std::to_string(t) + " = matrix {";
  for (std::size_t r = 0; r < rz.rank(t - 1); ++r) {
    s += r ? ",\n  {" : "{";
    for (std::size_t c = 0; c < rz.rank(t); ++c) {
      if (c) s += ", ";
      auto it = cell.find({r, c});
      s += it == cell.end() ? "0" : it->second;
    }
    s += "}";
  }
  return s + "}\n";
}

std::string matrix_text(const ResolutionComplex& rz) {
  std::string s;
  for (std::size_t t = 1; t < rz.levels(); ++t) s += matrix_text(rz, t);
  return s;
}

json betti_json(const BettiTable& b) {
  json multi = json::array(), graded = json::array();
  for (const auto& [key, v] : b.entries())
    multi.push_back({{"i", key.first}, {"degree", to_string(key.second)}, {"value", v}});
  for (const auto& [key, v] : b.coarse()) graded.push_back({{"i", key.first}, {"j", key.second}, {"value", v}});
  return {{"multigraded", std::move(multi)}, {"graded", std::move(graded)}};
}

json complex_json(const SimplicialComplex& d) {
  json facets = json::array();
  for (Face f : d.facets()) {
    json face = json::array();
    for (std::size_t i = 0; i < d.vertices().size(); ++i)
      if (f >> i & 1) face.push_back(d.vertices()[i]);
    facets.push_back(std::move(face));
  }
  return {{"vertices", d.vertices()}, {"facets", std::move(facets)}, {"dim", d.dim()}};
}

}  // namespace colp
