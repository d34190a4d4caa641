#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "colp/linear_algebra.hpp"
#include "colp/monomial.hpp"

namespace colp {

// [K_1, ..., K_m]; each K_i sorted ascending. Ordered lexicographically by the set tuple.
struct BasisSymbol {
  std::vector<std::vector<int>> sets;

  int t() const;  // sum |K_i| - m
  Monomial degree() const { return monomial_of_sets(sets); }
  IsotoneMap top() const;  // (max K_1, ..., max K_m)

  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;
  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};
std::string to_string(const BasisSymbol& s);  // [{1,2},{3}]

// One term sign * var * e_row of d_t(e_col).
struct DiffEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  int sign = 1;
  Variable var;

  friend auto operator<=>(const DiffEntry& a, const DiffEntry& b) {
    return std::tie(a.col, a.row, a.sign, a.var) <=> std::tie(b.col, b.row, b.sign, b.var);
  }
  friend bool operator==(const DiffEntry&, const DiffEntry&) = default;
};

// A multigraded complex of free modules F_0 <- F_1 <- ... whose differential
// entries are +-variables. `symbols` is empty when the complex does not come
// from basis symbols (e.g. after specialization).
struct ResolutionComplex {
  std::vector<std::vector<BasisSymbol>> symbols;
  std::vector<std::vector<Monomial>> degrees;         // degrees[t][j]
  std::vector<std::vector<DiffEntry>> differentials;  // differentials[t]: F_t -> F_{t-1}; [0] unused

  std::size_t levels() const noexcept { return degrees.size(); }
  std::size_t rank(std::size_t t) const { return t < degrees.size() ? degrees[t].size() : 0; }
  std::vector<std::size_t> ranks() const;
  int pd() const { return static_cast<int>(degrees.size()) - 1; }

  friend bool operator==(const ResolutionComplex&, const ResolutionComplex&) = default;
};

// C_t: tuples satisfying the four basis conditions, sorted lexicographically.
std::vector<BasisSymbol> enumerate_Ct(const PosetIdeal& ideal, int t, std::size_t cap = default_guards().basis);

// The signed terms of d_t([K_1..K_m]) in construction order; `row` is unset (0).
struct SymbolTerm {
  BasisSymbol target;
  int sign;
  Variable var;
};
std::vector<SymbolTerm> differential(const BasisSymbol& s);

// Direct construction; runs verify_complex and verify_minimal.
ResolutionComplex build_resolution(const PosetIdeal& ideal, const Guards& guards = default_guards());

// d_{t-1} d_t = 0 and deg(target) * var = deg(source) for every entry.
void verify_complex(const ResolutionComplex& rz);
// Every entry is a single variable and no column has a repeated target.
void verify_minimal(const ResolutionComplex& rz);

struct StrandRecord {
  Monomial b;
  std::vector<std::size_t> dims;   // dims[t] = #basis of F_t with degree | b
  std::vector<std::size_t> ranks;  // ranks[t] = rank of d_t on the strand; ranks[0] = augmentation
  bool in_ideal = false;
};
struct ExactnessReport {
  std::vector<StrandRecord> strands;
  std::size_t checked() const noexcept { return strands.size(); }
};
// Strand-by-strand exactness of 0 <- I <- F_0 <- F_1 <- ... over every
// multidegree in the lcm-closure of the basis degrees. Throws VerificationError
// with the failing multidegree and position.
ExactnessReport verify_exact(const ResolutionComplex& rz, const MonomialIdeal& I,
                             FieldChoice field = FieldChoice::rational(), const Guards& guards = default_guards());

BettiTable betti_table_from_resolution(const ResolutionComplex& rz);
int projective_dimension(const ResolutionComplex& rz);

// L = J + K with J generated by maps with f(p_1) = min A_1.
struct BettiSplit {
  int a1 = 0;
  std::optional<PosetIdeal> j_part;  // over A_1 = {a1}
  std::optional<PosetIdeal> k_part;  // over A_1 \ {a1}; absent when no map avoids a1 ("no split")
  bool splits() const { return k_part.has_value(); }
};
BettiSplit betti_split(const PosetIdeal& ideal);

struct SplitReport {
  bool applicable = true;              // false when |A_1| < 2 or betti_split finds no split
  bool intersection_identity = false;  // J cap K == X_{p1,a1} K
  bool additive = false;
  std::map<std::pair<int, int>, long long> betti_l, betti_j, betti_k, betti_jk;
};
SplitReport verify_split_additivity(const PosetIdeal& ideal, FieldChoice field = FieldChoice::rational(),
                                    const Guards& guards = default_guards());

// Rebuilds the complex by the iterated mapping cone over Betti splittings and
// throws VerificationError unless it matches build_resolution exactly.
ResolutionComplex build_by_mapping_cone(const PosetIdeal& ideal, const Guards& guards = default_guards());

// Renames the variables of every degree and entry.
template <class Fn>
ResolutionComplex map_variables(const ResolutionComplex& rz, Fn&& fn) {
  ResolutionComplex out;
  out.symbols = rz.symbols;
  out.degrees.resize(rz.degrees.size());
  for (std::size_t t = 0; t < rz.degrees.size(); ++t)
    for (const auto& d : rz.degrees[t]) {
      std::vector<Monomial::Term> terms;
      for (const auto& [v, e] : d.terms()) terms.emplace_back(fn(v), e);
      out.degrees[t].emplace_back(std::move(terms));
    }
  out.differentials = rz.differentials;
  for (auto& level : out.differentials)
    for (auto& e : level) e.var = fn(e.var);
  return out;
}

}  // namespace colp
