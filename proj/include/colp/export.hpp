#pragma once

#include <string>

#include "json.hpp"

#include "colp/classify.hpp"
#include "colp/resolution.hpp"

namespace colp {

// {"levels": [{"t": 0, "basis": [{"sets": [[1],[3]], "degree": "X[p1,1]X[p2,3]"}]}],
//  "differentials": [{"t": 1, "entries": [[row, col, sign, "X[p1,2]"], ...]}]}
// "sets" is omitted when the complex carries no symbols.
nlohmann::json resolution_json(const ResolutionComplex& rz);

// One matrix per differential, rows indexed by F_{t-1}, columns by F_t:
//   d1 = matrix {{X[p1,2], 0}, {-X[p1,1], 0}}
std::string matrix_text(const ResolutionComplex& rz);
std::string matrix_text(const ResolutionComplex& rz, std::size_t t);

// {"multigraded": [{"i": 1, "degree": "...", "value": 1}], "graded": [{"i": 1, "j": 2, "value": 1}]}
nlohmann::json betti_json(const BettiTable& b);

nlohmann::json complex_json(const SimplicialComplex& d);

}  // namespace colp
