#include "colp/shift.hpp"

#include <algorithm>

#include "colp/betti_oracle.hpp"

namespace colp {

MonomialIdeal hs_generators(const PosetIdeal& ideal, int t, const Guards& guards) {
  std::vector<Monomial> gens;
  for (const auto& s : enumerate_Ct(ideal, t, guards.basis)) gens.push_back(s.degree());
  MonomialIdeal hs(gens);
  verify(hs.size() == gens.size(), "HS_" + std::to_string(t) + ": basis multidegrees are not a minimal generating set");

  const auto rz = build_resolution(ideal, guards);
  std::vector<Monomial> level = static_cast<std::size_t>(t) < rz.levels() ? rz.degrees[static_cast<std::size_t>(t)]
                                                                          : std::vector<Monomial>{};
  std::sort(level.begin(), level.end());
  std::sort(gens.begin(), gens.end());
  verify(level == gens, "HS_" + std::to_string(t) + " differs from the multidegrees of F_" + std::to_string(t));
  return hs;
}

std::vector<ShiftRecord> hs_linearity_report(const PosetIdeal& ideal, FieldChoice field, const Guards& guards) {
  const auto rz = build_resolution(ideal, guards);
  const int m = static_cast<int>(ideal.space().m());
  std::vector<ShiftRecord> out;
  for (std::size_t t = 0; t < rz.levels(); ++t) {
    ShiftRecord rec;
    rec.t = static_cast<int>(t);
    rec.hs = MonomialIdeal(rz.degrees[t]);
    rec.generators = rec.hs.size();
    verify(rec.generators == rz.rank(t), "|G(HS_t)| differs from beta_t");
    for (const auto& g : rec.hs.generators())
      verify(g.degree() == m + rec.t, "HS_" + std::to_string(t) + " is not equigenerated in degree m + t");
    try {
      rec.linear = has_linear_resolution(taylor_betti(rec.hs, field, TaylorMode::Auto, guards), m + rec.t);
    } catch (const GuardError&) {
      rec.linear.reset();
    }
    auto ql = is_quasi_linear(rec.hs);
    rec.quasi_linear = ql.holds;
    rec.witnesses = std::move(ql.failures);
    if (rec.linear && *rec.linear)
      verify(rec.quasi_linear, "HS_" + std::to_string(t) + " has a linear resolution but is not quasi-linear");
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace colp
