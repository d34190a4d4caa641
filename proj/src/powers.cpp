#include "colp/powers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "colp/betti_oracle.hpp"

namespace colp {

int N_ell(const Multiset& A, int ell, int n) {
  if (ell < 1) throw InputError("N_ell: ell must be positive");
  if (!std::is_sorted(A.begin(), A.end())) throw InputError("N_ell: multiset is not sorted");
  return static_cast<std::size_t>(ell) <= A.size() ? A[static_cast<std::size_t>(ell) - 1] : n;
}

bool check_N_monotone(const Multiset& A, const Multiset& B, const std::vector<std::size_t>& phi, int n) {
  if (A.size() != B.size() || phi.size() != A.size()) throw InputError("check_N_monotone: sizes differ");
  std::vector<char> hit(B.size(), 0);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] >= B.size() || hit[phi[i]]) throw InputError("check_N_monotone: phi is not a bijection");
    hit[phi[i]] = 1;
    if (A[i] > B[phi[i]]) throw InputError("check_N_monotone: phi is not dominating");
  }
  for (int ell = 1; ell <= static_cast<int>(A.size()); ++ell)
    if (N_ell(A, ell, n) > N_ell(B, ell, n)) return false;
  return true;
}

NMonotoneSweep sweep_N_monotone(int n, int k) {
  if (n < 1 || k < 1) throw InputError("sweep_N_monotone: n and k must be positive");
  // All multiplicity vectors in {0..k}^n.
  std::vector<Multiset> all;
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  while (true) {
    Multiset s;
    for (int a = 1; a <= n; ++a) s.insert(s.end(), static_cast<std::size_t>(mult[static_cast<std::size_t>(a - 1)]), a);
    all.push_back(std::move(s));
    std::size_t i = 0;
    while (i < mult.size() && mult[i] == k) mult[i++] = 0;
    if (i == mult.size()) break;
    ++mult[i];
  }
  NMonotoneSweep out;
  out.multisets = all.size();
  std::map<std::size_t, std::vector<const Multiset*>> by_size;
  for (const auto& s : all) by_size[s.size()].push_back(&s);

  for (const auto& [size, group] : by_size) {
    for (const Multiset* A : group)
      for (const Multiset* B : group) {
        // An arrangement of B lists phi(A[0]), phi(A[1]), ...
        Multiset arr = *B;
        do {
          bool dominated = true;
          for (std::size_t i = 0; i < size && dominated; ++i) dominated = (*A)[i] <= arr[i];
          if (!dominated) continue;
          ++out.dominated;
          bool ok = true;
          for (int ell = 1; ell <= static_cast<int>(size); ++ell)
            if (N_ell(*A, ell, n) > N_ell(*B, ell, n)) ok = false;
          if (!ok && out.holds) {
            out.holds = false;
            out.counterexample = std::make_pair(*A, *B);
          }
        } while (std::next_permutation(arr.begin(), arr.end()));
      }
  }
  return out;
}

std::vector<std::vector<IsotoneMap>> increasing_chains(const PosetIdeal& ideal, int k, std::size_t cap) {
  if (k < 1) throw InputError("chain length must be positive");
  const auto& mem = ideal.members();
  std::vector<std::vector<IsotoneMap>> out;
  std::vector<std::size_t> stack;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(stack.size()) == k) {
      check_guard(out.size() < cap, "chains", cap);
      std::vector<IsotoneMap> c;
      for (std::size_t i : stack) c.push_back(mem[i]);
      out.push_back(std::move(c));
      return;
    }
    // g >= f componentwise implies g >=_l f, so successors sit at or after f.
    const std::size_t from = stack.empty() ? 0 : stack.back();
    for (std::size_t j = from; j < mem.size(); ++j) {
      if (!stack.empty() && !hom_leq(mem[stack.back()], mem[j])) continue;
      stack.push_back(j);
      rec();
      stack.pop_back();
    }
  };
  rec();
  return out;
}

MonomialIdeal bounded_power(const PosetIdeal& ideal, int k, const Guards& guards) {
  std::vector<Monomial> gens;
  for (const auto& chain : increasing_chains(ideal, k, guards.chains)) {
    Monomial u;
    for (const auto& f : chain) u = u * monomial_of_map(f);
    gens.push_back(std::move(u));
  }
  return MonomialIdeal(std::move(gens));
}

bool EquivalenceReport::all_agree() const {
  return equal_at_k == sublattice && sublattice == unique_maximal && unique_maximal == hom_of_subsets &&
         hom_of_subsets == equal_at_k_and_next;
}

EquivalenceReport equivalence_report(const PosetIdeal& ideal, int k, const Guards& guards) {
  if (k < 2) throw InputError("equivalence_report needs k >= 2");
  EquivalenceReport rep;
  rep.k = k;
  const auto L = ideal_of(ideal);
  rep.equal_at_k = bounded_power(ideal, k, guards) == ideal_power(L, k);
  rep.equal_at_k_and_next = rep.equal_at_k && bounded_power(ideal, k + 1, guards) == ideal_power(L, k + 1);
  const auto props = ideal_properties(ideal);
  rep.sublattice = props.is_sublattice;
  rep.unique_maximal = props.unique_maximal.has_value();
  // If A = Hom(P, B) for some B, then also A = Hom(P, letters actually used).
  rep.b_sets = achieved_letters(ideal);
  rep.hom_of_subsets = enumerate_hom(ideal.space().poset, rep.b_sets, guards.hom_maps) == ideal.members();
  verify(rep.all_agree(), "the equivalent conditions on A disagree");
  return rep;
}

Variable PowerContext::to_power_ring(const Variable& v) const {
  verify(v.copy == 0 && v.element >= 0 && static_cast<std::size_t>(v.element) < product.pair_of_index.size(),
         "variable " + to_string(v) + " is not a variable of the lifted ring");
  const auto [i, j] = product.pair_of_index[static_cast<std::size_t>(v.element)];
  return Variable(static_cast<int>(i), v.letter, static_cast<int>(j) + 1);
}

MonomialIdeal PowerContext::lifted_ideal() const {
  std::vector<Monomial> gens;
  const auto base_ring = ideal_of(lifted);
  for (const auto& g : base_ring.generators()) {
    std::vector<Monomial::Term> t;
    for (const auto& [v, e] : g.terms()) t.emplace_back(to_power_ring(v), e);
    gens.emplace_back(std::move(t));
  }
  return MonomialIdeal(std::move(gens));
}

ResolutionComplex PowerContext::lifted_resolution(const Guards& guards) const {
  return map_variables(build_resolution(lifted, guards), [this](const Variable& v) { return to_power_ring(v); });
}

namespace {

PosetIdeal lifted_ideal_of(const PosetIdeal& ideal, const ProductPoset& prod, const Guards& guards) {
  const auto& base = ideal.space();
  AlphabetMap ak;
  ak.n = base.alphabet.n;
  ak.sets.resize(prod.poset.size());
  for (std::size_t l = 0; l < prod.poset.size(); ++l) ak.sets[l] = base.alphabet.sets[prod.pair_of_index[l].first];
  std::vector<IsotoneMap> gens;
  for (const auto& g : ideal.maximal_elements()) {
    IsotoneMap bar;
    bar.values.resize(prod.poset.size());
    for (std::size_t l = 0; l < prod.poset.size(); ++l) bar.values[l] = g[prod.pair_of_index[l].first];
    gens.push_back(std::move(bar));
  }
  return ideal_from_generators(make_space(prod.poset, ak), gens, guards.hom_maps);
}

}  // namespace

PowerContext lift(const PosetIdeal& ideal, int k, const Guards& guards) {
  if (k < 1) throw InputError("lift: k must be positive");
  const auto& base = ideal.space();
  ProductPoset prod = product_with_chain(base.poset, static_cast<std::size_t>(k), guards.poset_elements);
  PosetIdeal lifted = lifted_ideal_of(ideal, prod, guards);

  // Every member of the lift is a weakly increasing chain of members and back.
  const auto chains = increasing_chains(ideal, k, guards.chains);
  verify(chains.size() == lifted.size(), "lifted ideal and chains differ in size");
  std::set<std::vector<IsotoneMap>> seen;
  for (const auto& f : lifted.members()) {
    std::vector<IsotoneMap> parts(static_cast<std::size_t>(k));
    for (std::size_t j = 0; j < parts.size(); ++j) {
      parts[j].values.resize(base.m());
      for (std::size_t i = 0; i < base.m(); ++i) parts[j].values[i] = f[prod.index(i, j)];
      verify(ideal.contains(parts[j]), "lifted member " + to_string(f) + " has a component outside the ideal");
      if (j) verify(hom_leq(parts[j - 1], parts[j]), "lifted member " + to_string(f) + " is not a chain");
    }
    verify(seen.insert(std::move(parts)).second, "two lifted members give the same chain");
  }
  for (const auto& c : chains) verify(seen.count(c) > 0, "a chain is missing from the lifted ideal");

  std::vector<std::pair<Variable, Variable>> diffs;
  for (std::size_t i = 0; i < base.m(); ++i)
    for (int a : base.alphabet.sets[i])
      for (int s = 1; s < k; ++s) diffs.emplace_back(Variable(static_cast<int>(i), a, s), Variable(static_cast<int>(i), a, s + 1));
  verify(diffs.size() == base.alphabet.size() * static_cast<std::size_t>(k - 1), "difference list has the wrong length");

  return PowerContext{ideal, k, std::move(prod), std::move(lifted), std::move(diffs)};
}

Variable specialize(const Variable& v) { return Variable(v.element, v.letter); }

MonomialIdeal specialize(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<Monomial::Term> t;
    for (const auto& [v, e] : g.terms()) t.emplace_back(specialize(v), e);
    gens.emplace_back(std::move(t));
  }
  return MonomialIdeal(std::move(gens));
}

ResolutionComplex specialize(const ResolutionComplex& rz) {
  auto out = map_variables(rz, [](const Variable& v) { return specialize(v); });
  out.symbols.clear();
  verify_complex(out);
  verify_minimal(out);
  return out;
}

RegularityCertificate regular_sequence_certificate(const PowerContext& ctx, const Guards& guards) {
  RegularityCertificate cert;
  const auto lt = ctx.lifted_ideal();
  const auto lr = bounded_power(ctx.base, ctx.k, guards);
  cert.quotient_matches = specialize(lt) == lr;
  cert.numerator_t = hilbert_numerator(lt, guards);
  cert.numerator_r = hilbert_numerator(lr, guards);
  cert.r_variables = static_cast<int>(ctx.base.space().alphabet.size());
  cert.t_variables = cert.r_variables * ctx.k;
  cert.c = cert.t_variables - cert.r_variables;
  verify(static_cast<std::size_t>(cert.c) == ctx.differences.size(), "c differs from the number of differences");
  cert.holds = cert.quotient_matches && cert.numerator_t == cert.numerator_r;
  return cert;
}

PowerResolutionReport verify_power_resolution(const Poset& P, const AlphabetMap& A, int k, FieldChoice field,
                                              const Guards& guards) {
  auto space = make_space(P, A);
  const auto full = PosetIdeal::full(space, guards.hom_maps);
  const auto ctx = lift(full, k, guards);

  PowerResolutionReport rep;
  rep.target = ideal_power(ideal_of(full), k);
  verify(specialize(ctx.lifted_ideal()) == rep.target, "specialized lifted ideal differs from L(P, A)^k");
  rep.complex = specialize(ctx.lifted_resolution(guards));
  rep.ranks = rep.complex.ranks();

  std::vector<Monomial> f0 = rep.complex.degrees.empty() ? std::vector<Monomial>{} : rep.complex.degrees[0];
  verify(MonomialIdeal(f0) == rep.target && f0.size() == rep.target.size(), "F_0 does not map onto G(L^k)");
  rep.strands_checked = verify_exact(rep.complex, rep.target, field, guards).checked();
  rep.betti_matches_oracle =
      betti_table_from_resolution(rep.complex) == taylor_betti(rep.target, field, TaylorMode::Auto, guards);
  verify(rep.betti_matches_oracle, "Betti numbers of the specialized complex differ from the Taylor oracle");
  return rep;
}

namespace {

// Sorted degrees of the generators containing each variable.
std::map<Variable, std::vector<int>> degree_profiles(const MonomialIdeal& I) {
  std::map<Variable, std::vector<int>> out;
  for (const auto& g : I.generators())
    for (const auto& [v, e] : g.terms()) out[v].push_back(g.degree() * 100 + e);
  for (auto& [v, p] : out) std::sort(p.begin(), p.end());
  return out;
}

}  // namespace

PolarizationReport polarization_mismatch(const PowerContext& ctx, const Guards& guards) {
  PolarizationReport rep;
  rep.lifted = ctx.lifted_ideal();
  rep.polarized = polarize(bounded_power(ctx.base, ctx.k, guards));

  const auto pa = degree_profiles(rep.lifted);
  const auto pb = degree_profiles(rep.polarized);
  if (pa.size() != pb.size()) {
    rep.reason = "the ideals use " + std::to_string(pa.size()) + " and " + std::to_string(pb.size()) + " variables";
    return rep;
  }
  if (rep.lifted.size() != rep.polarized.size()) {
    rep.reason = "the ideals have different numbers of generators";
    return rep;
  }
  check_guard(pa.size() <= guards.bijection_variables, "bijection_variables", guards.bijection_variables);

  std::vector<Variable> src, dst;
  for (const auto& [v, p] : pa) src.push_back(v);
  for (const auto& [v, p] : pb) dst.push_back(v);
  std::map<Variable, std::size_t> src_pos;
  for (std::size_t i = 0; i < src.size(); ++i) src_pos[src[i]] = i;
  const std::set<Monomial> target(rep.polarized.generators().begin(), rep.polarized.generators().end());

  // Generators of the lifted ideal, bucketed by the last source variable they use.
  std::vector<std::vector<const Monomial*>> ready(src.size());
  for (const auto& g : rep.lifted.generators()) {
    std::size_t last = 0;
    for (const auto& [v, e] : g.terms()) last = std::max(last, src_pos.at(v));
    ready[last].push_back(&g);
  }

  std::vector<std::size_t> image(src.size());
  std::vector<char> used(dst.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == src.size()) return true;
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (used[j] || pa.at(src[i]) != pb.at(dst[j])) continue;
      ++rep.nodes;
      image[i] = j;
      bool ok = true;
      for (const Monomial* g : ready[i]) {
        std::vector<Monomial::Term> t;
        for (const auto& [v, e] : g->terms()) t.emplace_back(dst[image[src_pos.at(v)]], e);
        if (!target.count(Monomial(std::move(t)))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[j] = 1;
      if (rec(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  // Generator counts agree and the renaming is injective on generators, so
  // mapping every lifted generator into the target is onto.
  if (rec(0)) {
    rep.isomorphic = true;
    for (std::size_t i = 0; i < src.size(); ++i) rep.witness.emplace_back(src[i], dst[image[i]]);
  } else {
    rep.reason = "exhausted all variable bijections compatible with the degree profiles";
  }
  return rep;
}

}  // namespace colp
