#pragma once

#include <string>
#include <vector>

#include "colp/instance.hpp"
#include "colp/monomial.hpp"

namespace colp::test {

inline PosetIdeal full(const Poset& p, int n, std::vector<std::vector<int>> sets) {
  return PosetIdeal::full(make_space(p, AlphabetMap{n, std::move(sets)}));
}

inline PosetIdeal generated(const Poset& p, int n, std::vector<std::vector<int>> sets,
                            const std::vector<std::vector<int>>& gens) {
  std::vector<IsotoneMap> g;
  for (const auto& v : gens) g.push_back(IsotoneMap{v});
  return PosetIdeal::from_generators(make_space(p, AlphabetMap{n, std::move(sets)}), g);
}

inline Variable X(int element, int letter, int copy = 0) { return Variable(element - 1, letter, copy); }

// Product of variables given as {element, letter} (1-based element).
inline Monomial M(std::initializer_list<std::pair<int, int>> vars) {
  std::vector<Monomial::Term> t;
  for (const auto& [i, a] : vars) t.emplace_back(X(i, a), 1);
  return Monomial(std::move(t));
}

inline MonomialIdeal ideal(std::vector<Monomial> gens) { return MonomialIdeal(std::move(gens)); }

inline Instance random_loaded(std::uint64_t seed, std::size_t m, int n, std::size_t cap) {
  return load_instance(random_instance(seed, RandomBounds{m, n, cap}));
}

}  // namespace colp::test
