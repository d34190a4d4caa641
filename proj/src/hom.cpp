#include "colp/hom.hpp"

#include <algorithm>
#include <set>

namespace colp {

bool AlphabetMap::contains(std::size_t i, int a) const {
  return std::binary_search(sets[i].begin(), sets[i].end(), a);
}

std::size_t AlphabetMap::size() const {
  std::size_t s = 0;
  for (const auto& a : sets) s += a.size();
  return s;
}

std::string to_string(const IsotoneMap& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + ")";
}

HomSpace::HomSpace(Poset p, AlphabetMap a) : poset(std::move(p)), alphabet(std::move(a)) {
  if (alphabet.n <= 0) throw InputError("alphabet size n must be positive");
  if (alphabet.sets.size() != poset.size())
    throw InputError("alphabet has " + std::to_string(alphabet.sets.size()) + " sets but the poset has " +
                     std::to_string(poset.size()) + " elements");
  for (std::size_t i = 0; i < alphabet.sets.size(); ++i) {
    auto& s = alphabet.sets[i];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw InputError("A_" + poset.name(i) + " is empty");
    if (s.front() < 1 || s.back() > alphabet.n)
      throw InputError("A_" + poset.name(i) + " is not a subset of [n]");
  }
}

bool HomSpace::contains(const IsotoneMap& f) const {
  if (f.size() != m()) return false;
  for (std::size_t i = 0; i < m(); ++i) {
    if (!alphabet.contains(i, f[i])) return false;
    for (std::size_t j = i + 1; j < m(); ++j)
      if (poset.leq(i, j) && f[i] > f[j]) return false;
  }
  return true;
}

void HomSpace::validate(const IsotoneMap& f) const {
  if (f.size() != m())
    throw InputError("map " + to_string(f) + " has the wrong length (expected " + std::to_string(m()) + ")");
  if (!contains(f)) throw InputError("map " + to_string(f) + " is not an isotone map into A");
}

HomSpacePtr make_space(Poset p, AlphabetMap a) {
  return std::make_shared<const HomSpace>(std::move(p), std::move(a));
}

std::vector<IsotoneMap> enumerate_hom(const Poset& poset, const std::vector<std::vector<int>>& sets,
                                      std::size_t cap) {
  const std::size_t m = poset.size();
  std::vector<std::vector<std::size_t>> below(m);
  for (std::size_t i = 0; i < m; ++i) below[i] = poset.strictly_below(i);

  std::vector<IsotoneMap> out;
  std::vector<int> cur(m, 0);
  // Labels form a linear extension, so only predecessors constrain position i.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      check_guard(out.size() < cap, "hom_maps", cap);
      out.push_back(IsotoneMap{cur});
      return;
    }
    int lo = 0;
    for (std::size_t j : below[i]) lo = std::max(lo, cur[j]);
    for (int a : sets[i]) {
      if (a < lo) continue;
      cur[i] = a;
      self(self, i + 1);
    }
  };
  if (m == 0) {
    out.push_back(IsotoneMap{});
    return out;
  }
  rec(rec, 0);
  return out;
}

std::vector<IsotoneMap> enumerate_hom(const HomSpace& space, std::size_t cap) {
  return enumerate_hom(space.poset, space.alphabet.sets, cap);
}

bool hom_leq(const IsotoneMap& f, const IsotoneMap& g) {
  if (f.size() != g.size()) throw InputError("maps from different posets");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] > g[i]) return false;
  return true;
}

bool hom_lex_leq(const IsotoneMap& f, const IsotoneMap& g) {
  if (f.size() != g.size()) throw InputError("maps from different posets");
  return f <= g;
}

IsotoneMap hom_join(const IsotoneMap& f, const IsotoneMap& g) {
  if (f.size() != g.size()) throw InputError("maps from different posets");
  IsotoneMap h{f.values};
  for (std::size_t i = 0; i < f.size(); ++i) h.values[i] = std::max(f[i], g[i]);
  return h;
}

IsotoneMap hom_meet(const IsotoneMap& f, const IsotoneMap& g) {
  if (f.size() != g.size()) throw InputError("maps from different posets");
  IsotoneMap h{f.values};
  for (std::size_t i = 0; i < f.size(); ++i) h.values[i] = std::min(f[i], g[i]);
  return h;
}

namespace {

// Neighbours of f in Hom(P, A) obtained by moving one coordinate to the
// adjacent letter of A_i. Any strict relation f < g in Hom(P, A) is a chain of
// such steps, so these suffice for closure and maximality tests.
template <class Fn>
void for_each_step(const HomSpace& space, const IsotoneMap& f, bool up, Fn&& fn) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& a = space.alphabet.sets[i];
    auto it = std::lower_bound(a.begin(), a.end(), f[i]);
    int next;
    if (up) {
      if (it == a.end() || std::next(it) == a.end()) continue;
      next = *std::next(it);
    } else {
      if (it == a.begin()) continue;
      next = *std::prev(it);
    }
    IsotoneMap g = f;
    g.values[i] = next;
    if (space.contains(g)) fn(g);
  }
}

}  // namespace

PosetIdeal PosetIdeal::explicit_members(HomSpacePtr space, std::vector<IsotoneMap> members) {
  if (members.empty()) throw InputError("a poset ideal must be non-empty");
  for (const auto& f : members) space->validate(f);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  PosetIdeal out(std::move(space), std::move(members));
  for (const auto& f : out.members_)
    for_each_step(out.space(), f, false, [&](const IsotoneMap& g) {
      if (!out.contains(g))
        throw InputError("not downward closed: " + to_string(g) + " <= " + to_string(f) + " is missing");
    });
  return out;
}

PosetIdeal PosetIdeal::from_generators(HomSpacePtr space, const std::vector<IsotoneMap>& gens,
                                       std::size_t cap) {
  if (gens.empty()) throw InputError("empty generator list");
  for (const auto& g : gens) space->validate(g);
  std::vector<IsotoneMap> members;
  for (auto& f : enumerate_hom(*space, cap))
    if (std::any_of(gens.begin(), gens.end(), [&](const IsotoneMap& g) { return hom_leq(f, g); }))
      members.push_back(std::move(f));
  return PosetIdeal(std::move(space), std::move(members));
}

PosetIdeal PosetIdeal::full(HomSpacePtr space, std::size_t cap) {
  auto all = enumerate_hom(*space, cap);
  if (all.empty()) throw InputError("Hom(P, A) is empty; no poset ideal exists");
  return PosetIdeal(std::move(space), std::move(all));
}

PosetIdeal ideal_from_generators(HomSpacePtr space, const std::vector<IsotoneMap>& gens,
                                 std::size_t cap) {
  return PosetIdeal::from_generators(std::move(space), gens, cap);
}

bool PosetIdeal::contains(const IsotoneMap& f) const {
  return std::binary_search(members_.begin(), members_.end(), f);
}

std::vector<IsotoneMap> PosetIdeal::maximal_elements() const {
  std::vector<IsotoneMap> out;
  for (const auto& f : members_) {
    bool maximal = true;
    for_each_step(space(), f, true, [&](const IsotoneMap& g) {
      if (contains(g)) maximal = false;
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<std::vector<int>> achieved_letters(const PosetIdeal& ideal) {
  const std::size_t m = ideal.space().m();
  std::vector<std::set<int>> b(m);
  for (const auto& f : ideal.members())
    for (std::size_t i = 0; i < m; ++i) b[i].insert(f[i]);
  std::vector<std::vector<int>> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i].assign(b[i].begin(), b[i].end());
  return out;
}

IdealProperties ideal_properties(const PosetIdeal& ideal) {
  IdealProperties props;
  const auto& mem = ideal.members();
  props.is_sublattice = true;
  for (std::size_t x = 0; x < mem.size(); ++x)
    for (std::size_t y = x + 1; y < mem.size(); ++y) {
      verify(ideal.contains(hom_meet(mem[x], mem[y])),
             "meet " + to_string(hom_meet(mem[x], mem[y])) + " left the poset ideal");
      if (props.is_sublattice && !ideal.contains(hom_join(mem[x], mem[y]))) props.is_sublattice = false;
    }

  auto maxima = ideal.maximal_elements();
  if (maxima.size() == 1) props.unique_maximal = maxima.front();
  verify(props.is_sublattice == props.unique_maximal.has_value(),
         "sublattice and unique-maximum tests disagree");

  if (props.unique_maximal) {
    const auto& f = *props.unique_maximal;
    const auto& space = ideal.space();
    std::vector<std::vector<int>> b(space.m());
    for (std::size_t i = 0; i < space.m(); ++i)
      for (int a : space.alphabet.sets[i])
        if (a <= f[i]) b[i].push_back(a);
    verify(enumerate_hom(space.poset, b) == mem, "poset ideal with a unique maximum is not Hom(P, B)");
    props.b_sets = std::move(b);
  }
  return props;
}

}  // namespace colp
