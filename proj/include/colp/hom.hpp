#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colp/poset.hpp"

namespace colp {

// A_1..A_m: non-empty subsets of [n], indexed parallel to the poset labels.
// Each set is kept sorted ascending.
struct AlphabetMap {
  int n = 0;
  std::vector<std::vector<int>> sets;

  bool contains(std::size_t i, int a) const;
  std::size_t size() const;  // sum of |A_i|
  friend bool operator==(const AlphabetMap&, const AlphabetMap&) = default;
};

// f : P -> [n] as the vector (f(p_1), ..., f(p_m)). The defaulted ordering is
// the lexicographic order <=_l: f comes first when the first nonzero entry of
// f - g is negative.
struct IsotoneMap {
  std::vector<int> values;

  int operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const noexcept { return values.size(); }
  friend auto operator<=>(const IsotoneMap&, const IsotoneMap&) = default;
  friend bool operator==(const IsotoneMap&, const IsotoneMap&) = default;
};

std::string to_string(const IsotoneMap& f);

// Hom(P, A): the ambient lattice of admissible isotone maps.
struct HomSpace {
  Poset poset;
  AlphabetMap alphabet;

  HomSpace(Poset p, AlphabetMap a);

  std::size_t m() const noexcept { return poset.size(); }
  bool contains(const IsotoneMap& f) const;  // isotone with f(p_i) in A_i
  void validate(const IsotoneMap& f) const;  // throws InputError
};

using HomSpacePtr = std::shared_ptr<const HomSpace>;

// All of Hom(P, A) in <=_l order (possibly empty).
std::vector<IsotoneMap> enumerate_hom(const HomSpace& space,
                                      std::size_t cap = default_guards().hom_maps);
// Hom(P, B_1, ..., B_m) for arbitrary sets B_i.
std::vector<IsotoneMap> enumerate_hom(const Poset& poset, const std::vector<std::vector<int>>& sets,
                                      std::size_t cap = default_guards().hom_maps);

bool hom_leq(const IsotoneMap& f, const IsotoneMap& g);
bool hom_lex_leq(const IsotoneMap& f, const IsotoneMap& g);
IsotoneMap hom_join(const IsotoneMap& f, const IsotoneMap& g);
IsotoneMap hom_meet(const IsotoneMap& f, const IsotoneMap& g);

// A non-empty downward-closed subset of Hom(P, A), stored explicitly in <=_l order.
class PosetIdeal {
 public:
  // Validates non-emptiness, membership in Hom(P, A) and downward closure.
  static PosetIdeal explicit_members(HomSpacePtr space, std::vector<IsotoneMap> members);
  static PosetIdeal from_generators(HomSpacePtr space, const std::vector<IsotoneMap>& gens,
                                    std::size_t cap = default_guards().hom_maps);
  static PosetIdeal full(HomSpacePtr space, std::size_t cap = default_guards().hom_maps);

  const HomSpace& space() const noexcept { return *space_; }
  const HomSpacePtr& space_ptr() const noexcept { return space_; }
  const std::vector<IsotoneMap>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const IsotoneMap& f) const;

  std::vector<IsotoneMap> maximal_elements() const;

  friend bool operator==(const PosetIdeal& a, const PosetIdeal& b) {
    return a.space().poset == b.space().poset && a.space().alphabet == b.space().alphabet &&
           a.members_ == b.members_;
  }

 private:
  PosetIdeal(HomSpacePtr space, std::vector<IsotoneMap> members)
      : space_(std::move(space)), members_(std::move(members)) {}

  HomSpacePtr space_;
  std::vector<IsotoneMap> members_;
};

HomSpacePtr make_space(Poset p, AlphabetMap a);

// Downward closure of `gens` inside Hom(P, A).
PosetIdeal ideal_from_generators(HomSpacePtr space, const std::vector<IsotoneMap>& gens,
                                 std::size_t cap = default_guards().hom_maps);

struct IdealProperties {
  bool is_sublattice = false;
  std::optional<IsotoneMap> unique_maximal;
  // (B_1, ..., B_m) with B_i = {a in A_i : a <= f(p_i)} for the unique maximum f.
  std::optional<std::vector<std::vector<int>>> b_sets;
};

// Throws VerificationError if meet closure fails, if "unique maximum" and
// "sublattice" disagree, or if the ideal differs from Hom(P, B_1..B_m).
IdealProperties ideal_properties(const PosetIdeal& ideal);

// B_i = {f(p_i) : f in ideal}, the letters actually used at each element.
std::vector<std::vector<int>> achieved_letters(const PosetIdeal& ideal);

}  // namespace colp
