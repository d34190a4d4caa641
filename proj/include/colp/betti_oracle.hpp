#pragma once

#include <vector>

#include "colp/linear_algebra.hpp"
#include "colp/monomial.hpp"

namespace colp {

// Literal: Taylor complex strands, one per lcm value (needs 2^|G(I)| subsets).
// Contracted: for each b in the lcm lattice, beta_{i,b} = dim H~_{i-1}(K^b),
// where K^b = {F subset of supp(b) : b / x^F in I} is the upper Koszul complex.
// Both compute Tor independently of any particular resolution.
enum class TaylorMode { Auto, Literal, Contracted };

BettiTable taylor_betti(const MonomialIdeal& I, FieldChoice field = FieldChoice::rational(),
                        TaylorMode mode = TaylorMode::Auto, const Guards& guards = default_guards());

// All lcms of non-empty subsets of `gens`.
std::vector<Monomial> lcm_closure(const std::vector<Monomial>& gens, std::size_t cap = default_guards().strands);

// beta_{i,j} vanishes unless j = d + i.
bool has_linear_resolution(const BettiTable& betti, int d);

}  // namespace colp
