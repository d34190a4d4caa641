#pragma once

#include <optional>
#include <vector>

#include "colp/resolution.hpp"

namespace colp {

// HS_t(L): generated by the multidegrees of the basis symbols in C_t. Also
// checked against the degrees of F_t from the direct construction.
MonomialIdeal hs_generators(const PosetIdeal& ideal, int t, const Guards& guards = default_guards());

struct ShiftRecord {
  int t = 0;
  MonomialIdeal hs;
  std::size_t generators = 0;
  std::optional<bool> linear;  // nullopt: the Betti oracle hit a guard ("undecided")
  bool quasi_linear = false;
  std::vector<QuasiLinearFailure> witnesses;  // every generator whose colon is not variable-generated
};

// One record per t = 0..pd. Asserts linear => quasi-linear wherever decided.
std::vector<ShiftRecord> hs_linearity_report(const PosetIdeal& ideal, FieldChoice field = FieldChoice::rational(),
                                             const Guards& guards = default_guards());

}  // namespace colp
