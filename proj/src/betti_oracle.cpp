#include "colp/betti_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "colp/simplicial.hpp"

namespace colp {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& [v, e] : m.terms())
      for (int x : {v.element, v.copy, v.letter, e}) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace

std::vector<Monomial> lcm_closure(const std::vector<Monomial>& gens, std::size_t cap) {
  std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
  check_guard(seen.size() <= cap, "strands", cap);
  std::vector<Monomial> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        if (divides(g, x)) continue;
        Monomial y = lcm(x, g);
        if (seen.insert(y).second) {
          check_guard(seen.size() <= cap, "strands", cap);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

BettiTable literal_taylor(const MonomialIdeal& I, FieldChoice field, const Guards& guards) {
  const auto& g = I.generators();
  check_guard(g.size() <= guards.taylor_generators, "taylor_generators", guards.taylor_generators);
  using Mask = std::uint32_t;
  const Mask full = g.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << g.size()) - 1);

  std::vector<Monomial> lcms(static_cast<std::size_t>(full) + 1);
  std::map<Monomial, std::vector<Mask>> strands;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    Mask low = s & -s;
    lcms[s] = lcm(lcms[s & ~low], g[static_cast<std::size_t>(__builtin_ctz(low))]);
    strands[lcms[s]].push_back(s);
    if (s == full) break;
  }

  BettiTable out;
  for (auto& [b, subsets] : strands) {
    // position i holds subsets of size i + 1
    std::size_t top = 0;
    for (Mask s : subsets) top = std::max<std::size_t>(top, static_cast<std::size_t>(__builtin_popcount(s)));
    std::vector<std::vector<Mask>> pos(top);
    for (Mask s : subsets) pos[static_cast<std::size_t>(__builtin_popcount(s)) - 1].push_back(s);

    std::vector<SparseMatrix> maps;  // maps[i - 1]: pos i -> pos i-1
    std::vector<std::size_t> dims;
    for (const auto& v : pos) dims.push_back(v.size());
    for (std::size_t i = 1; i < top; ++i) {
      std::unordered_map<Mask, std::size_t> idx;
      for (std::size_t r = 0; r < pos[i - 1].size(); ++r) idx.emplace(pos[i - 1][r], r);
      SparseMatrix m(pos[i].size(), pos[i - 1].size());
      for (std::size_t c = 0; c < pos[i].size(); ++c) {
        int p = 0;
        for (Mask rem = pos[i][c]; rem; rem &= rem - 1, ++p) {
          auto it = idx.find(pos[i][c] & ~(rem & -rem));
          if (it != idx.end()) m.add(c, it->second, p % 2 == 0 ? 1 : -1);
        }
      }
      maps.push_back(std::move(m));
    }
    const auto rank = chain_ranks(maps, dims, 0, field);
    long long euler_chain = 0, euler_homology = 0;
    for (std::size_t i = 0; i < top; ++i) {
      const long long h = static_cast<long long>(pos[i].size() - rank[i] - rank[i + 1]);
      const long long sign = i % 2 == 0 ? 1 : -1;
      euler_chain += sign * static_cast<long long>(pos[i].size());
      euler_homology += sign * h;
      if (h) out.add(static_cast<int>(i), b, h);
    }
    verify(euler_chain == euler_homology, "Euler characteristic mismatch in Taylor strand " + to_string(b));
  }
  return out;
}

BettiTable contracted_taylor(const MonomialIdeal& I, FieldChoice field, const Guards& guards) {
  BettiTable out;
  if (I.is_zero()) return out;
  for (const auto& b : lcm_closure(I.generators(), guards.strands)) {
    const auto supp = b.support();
    check_guard(supp.size() <= guards.koszul_vertices, "koszul_vertices", guards.koszul_vertices);
    auto in_ideal = [&](Face f) {
      std::vector<Monomial::Term> t;
      for (std::size_t v = 0; v < supp.size(); ++v)
        if (f >> v & 1) t.emplace_back(supp[v], 1);
      return I.contains(exact_divide(b, Monomial(std::move(t))));
    };
    // K^b is closed under subsets; grow faces by adding larger vertices.
    std::vector<Face> faces;
    if (in_ideal(0)) {
      std::vector<Face> stack{0};
      while (!stack.empty()) {
        Face f = stack.back();
        stack.pop_back();
        faces.push_back(f);
        check_guard(faces.size() <= guards.faces, "faces", guards.faces);
        const int start = f ? 64 - __builtin_clzll(f) : 0;
        for (std::size_t v = static_cast<std::size_t>(start); v < supp.size(); ++v) {
          Face g = f | (Face{1} << v);
          if (in_ideal(g)) stack.push_back(g);
        }
      }
    }
    auto h = reduced_homology_of_faces(faces, field);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i]) out.add(static_cast<int>(i), b, static_cast<long long>(h[i]));
  }
  return out;
}

}  // namespace

BettiTable taylor_betti(const MonomialIdeal& I, FieldChoice field, TaylorMode mode, const Guards& guards) {
  if (mode == TaylorMode::Auto) mode = I.size() <= 12 ? TaylorMode::Literal : TaylorMode::Contracted;
  if (mode == TaylorMode::Literal) return literal_taylor(I, field, guards);
  return contracted_taylor(I, field, guards);
}

bool has_linear_resolution(const BettiTable& betti, int d) {
  for (const auto& [key, v] : betti.coarse())
    if (v != 0 && key.second != d + key.first) return false;
  return true;
}

}  // namespace colp
