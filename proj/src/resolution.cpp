#include "colp/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "colp/betti_oracle.hpp"

namespace colp {

int BasisSymbol::t() const {
  int s = 0;
  for (const auto& k : sets) s += static_cast<int>(k.size());
  return s - static_cast<int>(sets.size());
}

IsotoneMap BasisSymbol::top() const {
  IsotoneMap f;
  for (const auto& k : sets) f.values.push_back(k.back());
  return f;
}

std::string to_string(const BasisSymbol& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (std::size_t j = 0; j < s.sets[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(s.sets[i][j]);
    }
    out += "}";
  }
  return out + "]";
}

std::vector<std::size_t> ResolutionComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& d : degrees) r.push_back(d.size());
  return r;
}

namespace {

// All basis symbols, grouped by t. A symbol is determined by its top map f in
// the ideal and, for each i, a subset of the free letters
// {a in A_i : f(p_j) <= a < f(p_i) for all p_j < p_i}.
std::vector<std::vector<BasisSymbol>> all_symbols(const PosetIdeal& ideal, std::size_t cap) {
  const auto& space = ideal.space();
  const std::size_t m = space.m();
  std::vector<std::vector<std::size_t>> below(m);
  for (std::size_t i = 0; i < m; ++i) below[i] = space.poset.strictly_below(i);

  std::vector<std::vector<BasisSymbol>> levels;
  std::size_t total = 0;
  for (const auto& f : ideal.members()) {
    std::vector<std::pair<std::size_t, int>> free;  // (element, letter)
    for (std::size_t i = 0; i < m; ++i) {
      int lo = 0;
      for (std::size_t j : below[i]) lo = std::max(lo, f[j]);
      for (int a : space.alphabet.sets[i])
        if (a >= lo && a < f[i]) free.emplace_back(i, a);
    }
    check_guard(free.size() < 40, "basis", cap);
    const std::size_t count = std::size_t{1} << free.size();
    total += count;
    check_guard(total <= cap, "basis", cap);
    if (levels.size() < free.size() + 1) levels.resize(free.size() + 1);
    for (std::size_t mask = 0; mask < count; ++mask) {
      BasisSymbol s;
      s.sets.resize(m);
      for (std::size_t b = 0; b < free.size(); ++b)
        if (mask >> b & 1) s.sets[free[b].first].push_back(free[b].second);
      for (std::size_t i = 0; i < m; ++i) s.sets[i].push_back(f[i]);  // free letters are < f(p_i)
      levels[static_cast<std::size_t>(__builtin_popcountll(mask))].push_back(std::move(s));
    }
  }
  for (auto& l : levels) std::sort(l.begin(), l.end());
  while (!levels.empty() && levels.back().empty()) levels.pop_back();
  return levels;
}

std::size_t find_symbol(const std::vector<BasisSymbol>& level, const BasisSymbol& s) {
  auto it = std::lower_bound(level.begin(), level.end(), s);
  verify(it != level.end() && *it == s, "differential target " + to_string(s) + " is not a basis symbol");
  return static_cast<std::size_t>(it - level.begin());
}

// Entries of d_t grouped by column.
std::vector<std::vector<const DiffEntry*>> by_column(const std::vector<DiffEntry>& d, std::size_t cols) {
  std::vector<std::vector<const DiffEntry*>> out(cols);
  for (const auto& e : d) out.at(e.col).push_back(&e);
  return out;
}

}  // namespace

std::vector<BasisSymbol> enumerate_Ct(const PosetIdeal& ideal, int t, std::size_t cap) {
  if (t < 0) throw InputError("enumerate_Ct: negative t");
  auto levels = all_symbols(ideal, cap);
  if (static_cast<std::size_t>(t) >= levels.size()) return {};
  return levels[static_cast<std::size_t>(t)];
}

std::vector<SymbolTerm> differential(const BasisSymbol& s) {
  if (s.t() < 1) throw InputError("differential: symbol " + to_string(s) + " lies in F_0");
  std::vector<SymbolTerm> out;
  int before = 0;  // elements of the full symbol ranked above the current one
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    const auto& k = s.sets[i];
    for (std::size_t pos = 0; pos < k.size(); ++pos) {
      if (k.size() >= 2) {
        BasisSymbol target = s;
        target.sets[i].erase(target.sets[i].begin() + static_cast<std::ptrdiff_t>(pos));
        const int sigma = before + static_cast<int>(pos);
        out.push_back({std::move(target), sigma % 2 == 0 ? 1 : -1, Variable(static_cast<int>(i), k[pos])});
      }
    }
    before += static_cast<int>(k.size());
  }
  return out;
}

ResolutionComplex build_resolution(const PosetIdeal& ideal, const Guards& guards) {
  ResolutionComplex rz;
  rz.symbols = all_symbols(ideal, guards.basis);
  rz.degrees.resize(rz.symbols.size());
  rz.differentials.resize(rz.symbols.size());
  for (std::size_t t = 0; t < rz.symbols.size(); ++t) {
    for (const auto& s : rz.symbols[t]) {
      verify(ideal.contains(s.top()), "basis symbol " + to_string(s) + " has its top map outside the ideal");
      rz.degrees[t].push_back(s.degree());
    }
    if (t == 0) continue;
    for (std::size_t c = 0; c < rz.symbols[t].size(); ++c)
      for (auto& term : differential(rz.symbols[t][c]))
        rz.differentials[t].push_back({find_symbol(rz.symbols[t - 1], term.target), c, term.sign, term.var});
    std::sort(rz.differentials[t].begin(), rz.differentials[t].end());
  }
  verify(rz.rank(0) == ideal.size(), "rank F_0 differs from the size of the poset ideal");
  verify_complex(rz);
  verify_minimal(rz);
  return rz;
}

void verify_complex(const ResolutionComplex& rz) {
  for (std::size_t t = 1; t < rz.levels(); ++t) {
    for (const auto& e : rz.differentials[t]) {
      verify(e.row < rz.rank(t - 1) && e.col < rz.rank(t), "differential entry out of range");
      verify(rz.degrees[t - 1][e.row] * Monomial::of(e.var) == rz.degrees[t][e.col],
             "multidegree mismatch in d_" + std::to_string(t) + " at column " + std::to_string(e.col));
    }
  }
  // d_0 d_1 = 0, where d_0 sends a basis element to its multidegree.
  if (rz.levels() > 1) {
    for (const auto& col : by_column(rz.differentials[1], rz.rank(1))) {
      std::map<Monomial, long long> acc;
      for (const DiffEntry* e : col) acc[rz.degrees[0][e->row] * Monomial::of(e->var)] += e->sign;
      for (const auto& [mono, c] : acc) verify(c == 0, "d_0 d_1 != 0 (coefficient of " + to_string(mono) + ")");
    }
  }
  for (std::size_t t = 2; t < rz.levels(); ++t) {
    auto lower = by_column(rz.differentials[t - 1], rz.rank(t - 1));
    for (const auto& col : by_column(rz.differentials[t], rz.rank(t))) {
      std::map<std::pair<std::size_t, Monomial>, long long> acc;
      for (const DiffEntry* e : col)
        for (const DiffEntry* f : lower[e->row])
          acc[{f->row, Monomial::of(e->var) * Monomial::of(f->var)}] += e->sign * f->sign;
      for (const auto& [key, c] : acc)
        verify(c == 0, "d_" + std::to_string(t - 1) + " d_" + std::to_string(t) + " != 0");
    }
  }
}

void verify_minimal(const ResolutionComplex& rz) {
  for (std::size_t t = 1; t < rz.levels(); ++t) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : rz.differentials[t]) {
      verify(e.sign == 1 || e.sign == -1, "differential coefficient is not +-1");
      verify(seen.insert({e.col, e.row}).second, "repeated entry in d_" + std::to_string(t));
    }
  }
}

ExactnessReport verify_exact(const ResolutionComplex& rz, const MonomialIdeal& I, FieldChoice field,
                             const Guards& guards) {
  verify_complex(rz);  // the rank shortcut below relies on d d = 0
  ExactnessReport report;
  // A strand only depends on which degrees divide b, so the lcm-closure of the
  // generators and all basis degrees covers every strand. For a minimal
  // resolution that is just the closure of G(I); otherwise take the union.
  std::set<Monomial> gens(I.generators().begin(), I.generators().end());
  if (gens.empty() && rz.levels() == 0) return report;
  auto closure = lcm_closure({gens.begin(), gens.end()}, guards.strands);
  bool covered = true;
  for (const auto& level : rz.degrees)
    for (const auto& d : level) covered = covered && std::binary_search(closure.begin(), closure.end(), d);
  if (!covered) {
    for (const auto& level : rz.degrees) gens.insert(level.begin(), level.end());
    closure = lcm_closure({gens.begin(), gens.end()}, guards.strands);
  }
  const std::size_t L = rz.levels();

  for (const auto& b : closure) {
    StrandRecord rec;
    rec.b = b;
    rec.in_ideal = I.contains(b);
    std::vector<std::vector<std::size_t>> local(L);  // global index -> local index, or npos
    rec.dims.assign(L, 0);
    for (std::size_t t = 0; t < L; ++t) {
      local[t].assign(rz.rank(t), SIZE_MAX);
      for (std::size_t j = 0; j < rz.rank(t); ++j)
        if (divides(rz.degrees[t][j], b)) local[t][j] = rec.dims[t]++;
    }
    std::vector<SparseMatrix> maps;
    for (std::size_t t = 1; t < L; ++t) {
      SparseMatrix m(rec.dims[t], rec.dims[t - 1]);
      for (const auto& e : rz.differentials[t]) {
        if (local[t][e.col] == SIZE_MAX) continue;
        verify(local[t - 1][e.row] != SIZE_MAX, "strand is not a subcomplex");
        m.add(local[t][e.col], local[t - 1][e.row], e.sign);
      }
      maps.push_back(std::move(m));
    }
    rec.ranks = chain_ranks(maps, rec.dims, rec.dims[0] == 0 ? 0 : 1, field);
    const std::string where = "strand " + to_string(b);
    verify(rec.ranks[0] == (rec.in_ideal ? 1u : 0u), where + ": augmentation is not onto the ideal");
    for (std::size_t t = 0; t < L; ++t)
      verify(rec.dims[t] == rec.ranks[t] + rec.ranks[t + 1],
             where + ": homology at F_" + std::to_string(t) + " (defect " +
                 std::to_string(static_cast<long long>(rec.dims[t]) -
                                static_cast<long long>(rec.ranks[t] + rec.ranks[t + 1])) +
                 ")");
    report.strands.push_back(std::move(rec));
  }
  return report;
}

BettiTable betti_table_from_resolution(const ResolutionComplex& rz) {
  BettiTable b;
  for (std::size_t t = 0; t < rz.levels(); ++t)
    for (const auto& d : rz.degrees[t]) b.add(static_cast<int>(t), d);
  return b;
}

int projective_dimension(const ResolutionComplex& rz) { return rz.pd(); }

BettiSplit betti_split(const PosetIdeal& ideal) {
  const auto& space = ideal.space();
  if (space.m() == 0 || space.alphabet.sets[0].size() < 2) throw InputError("betti_split needs |A_1| >= 2");
  BettiSplit out;
  out.a1 = space.alphabet.sets[0].front();
  std::vector<IsotoneMap> j, k;
  for (const auto& f : ideal.members()) (f[0] == out.a1 ? j : k).push_back(f);

  AlphabetMap aj = space.alphabet, ak = space.alphabet;
  aj.sets[0] = {out.a1};
  ak.sets[0].erase(ak.sets[0].begin());
  out.j_part = PosetIdeal::explicit_members(make_space(space.poset, aj), j);
  if (!k.empty()) out.k_part = PosetIdeal::explicit_members(make_space(space.poset, ak), k);
  return out;
}

SplitReport verify_split_additivity(const PosetIdeal& ideal, FieldChoice field, const Guards& guards) {
  SplitReport rep;
  if (ideal.space().alphabet.sets[0].size() < 2) {
    rep.applicable = false;
    return rep;
  }
  auto split = betti_split(ideal);
  if (!split.splits()) {
    rep.applicable = false;
    return rep;
  }
  const auto L = ideal_of(ideal);
  const auto J = ideal_of(*split.j_part);
  const auto K = ideal_of(*split.k_part);
  const auto JK = ideal_intersect(J, K);
  const auto XK = ideal_multiply(K, MonomialIdeal({Monomial::of(Variable(0, split.a1))}));
  rep.intersection_identity = JK == XK;
  verify(ideal_sum(J, K) == L, "J + K differs from L");

  rep.betti_l = taylor_betti(L, field, TaylorMode::Auto, guards).coarse();
  rep.betti_j = taylor_betti(J, field, TaylorMode::Auto, guards).coarse();
  rep.betti_k = taylor_betti(K, field, TaylorMode::Auto, guards).coarse();
  rep.betti_jk = taylor_betti(JK, field, TaylorMode::Auto, guards).coarse();

  std::set<std::pair<int, int>> keys;
  for (const auto* m : {&rep.betti_l, &rep.betti_j, &rep.betti_k}) {
    for (const auto& [key, v] : *m) keys.insert(key);
  }
  for (const auto& [key, v] : rep.betti_jk) keys.insert({key.first + 1, key.second});
  auto get = [](const std::map<std::pair<int, int>, long long>& m, int i, int j) {
    auto it = m.find({i, j});
    return it == m.end() ? 0LL : it->second;
  };
  rep.additive = true;
  for (const auto& [i, j] : keys)
    if (get(rep.betti_l, i, j) != get(rep.betti_j, i, j) + get(rep.betti_k, i, j) + get(rep.betti_jk, i - 1, j))
      rep.additive = false;
  return rep;
}

// ---------------------------------------------------------------------------
// mapping cone

namespace {

struct Instance {
  Poset poset;
  AlphabetMap alphabet;
  std::vector<IsotoneMap> members;
};

struct SymEntry {
  BasisSymbol source, target;
  int sign;
  Variable var;
};

// A complex keyed by symbols rather than positions.
struct SymComplex {
  std::vector<std::vector<BasisSymbol>> levels;
  std::vector<std::vector<SymEntry>> d;  // d[t]: entries with source in level t

  void ensure(std::size_t n) {
    if (levels.size() < n) levels.resize(n);
    if (d.size() < n) d.resize(n);
  }
};

Poset drop_first(const Poset& p) {
  std::vector<std::string> el(p.names().begin() + 1, p.names().end());
  std::vector<std::pair<std::string, std::string>> cov;
  for (std::size_t i = 1; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p.less(i, j)) cov.emplace_back(p.name(i), p.name(j));
  Poset q = Poset::from_covers(el, cov, std::max<std::size_t>(el.size(), 1));
  for (std::size_t i = 0; i < q.size(); ++i) verify(q.input_order()[i] == i, "sub-poset relabeled");
  return q;
}

SymComplex cone_rec(const Instance& in) {
  const std::size_t m = in.poset.size();
  const auto& A = in.alphabet.sets;
  verify(!in.members.empty(), "empty poset ideal in the cone recursion");
  SymComplex out;

  // Principal ideal: every A_i is a single letter.
  if (std::all_of(A.begin(), A.end(), [](const auto& a) { return a.size() == 1; })) {
    BasisSymbol s;
    for (const auto& a : A) s.sets.push_back(a);
    out.ensure(1);
    out.levels[0].push_back(std::move(s));
    return out;
  }

  // (x_1, x_2): d_1 [x_1 x_2] = x_1 [x_2] - x_2 [x_1].
  if (m == 1 && A[0].size() == 2 && in.members.size() == 2) {
    const int a = A[0][0], b = A[0][1];
    out.ensure(2);
    out.levels[0] = {BasisSymbol{{{a}}}, BasisSymbol{{{b}}}};
    out.levels[1] = {BasisSymbol{{{a, b}}}};
    out.d[1].push_back({BasisSymbol{{{a, b}}}, BasisSymbol{{{b}}}, 1, Variable(0, a)});
    out.d[1].push_back({BasisSymbol{{{a, b}}}, BasisSymbol{{{a}}}, -1, Variable(0, b)});
    return out;
  }

  if (A[0].size() == 1) {
    // L = X_{p1,a1} L' with p1 removed and letters below a1 dropped above p1.
    const int a1 = A[0][0];
    Instance sub;
    sub.poset = drop_first(in.poset);
    sub.alphabet.n = in.alphabet.n;
    for (std::size_t j = 1; j < m; ++j) {
      std::vector<int> s;
      for (int a : A[j])
        if (!in.poset.less(0, j) || a >= a1) s.push_back(a);
      sub.alphabet.sets.push_back(std::move(s));
    }
    for (const auto& f : in.members) sub.members.push_back(IsotoneMap{{f.values.begin() + 1, f.values.end()}});
    SymComplex inner = cone_rec(sub);

    auto lift = [&](const BasisSymbol& s) {
      BasisSymbol r;
      r.sets.push_back({a1});
      r.sets.insert(r.sets.end(), s.sets.begin(), s.sets.end());
      return r;
    };
    out.ensure(inner.levels.size());
    for (std::size_t t = 0; t < inner.levels.size(); ++t) {
      for (const auto& s : inner.levels[t]) out.levels[t].push_back(lift(s));
      for (const auto& e : inner.d[t])
        out.d[t].push_back({lift(e.source), lift(e.target), -e.sign, Variable(e.var.element + 1, e.var.letter)});
    }
    return out;
  }

  // Betti splitting on a1 = min A_1.
  const int a1 = A[0][0];
  Instance ji{in.poset, in.alphabet, {}}, ki{in.poset, in.alphabet, {}};
  ji.alphabet.sets[0] = {a1};
  ki.alphabet.sets[0].erase(ki.alphabet.sets[0].begin());
  for (const auto& f : in.members) (f[0] == a1 ? ji.members : ki.members).push_back(f);
  if (ki.members.empty()) return cone_rec(ji);

  SymComplex fj = cone_rec(ji), fk = cone_rec(ki);

  // F^{J cap K}_{t-1} is F^K_{t-1} shifted by X_{p1,a1}; its basis element
  // X_{p1,a1}[K_1, ...] is identified with [K_1 + {a1}, ...] in F_t.
  std::map<BasisSymbol, BasisSymbol> identify;
  for (const auto& level : fk.levels)
    for (const auto& s : level) {
      BasisSymbol r = s;
      r.sets[0].insert(r.sets[0].begin(), a1);
      verify(identify.emplace(s, std::move(r)).second, "duplicate symbol in F^K");
    }

  const std::size_t top = std::max(fj.levels.size(), fk.levels.size() + 1);
  out.ensure(top);
  std::set<BasisSymbol> jset;
  for (std::size_t t = 0; t < fj.levels.size(); ++t) {
    for (const auto& s : fj.levels[t]) {
      out.levels[t].push_back(s);
      jset.insert(s);
    }
    for (const auto& e : fj.d[t]) out.d[t].push_back(e);
  }
  for (std::size_t t = 0; t < fk.levels.size(); ++t) {
    out.levels[t].insert(out.levels[t].end(), fk.levels[t].begin(), fk.levels[t].end());
    for (const auto& e : fk.d[t]) out.d[t].push_back(e);
  }
  for (std::size_t u = 0; u < fk.levels.size(); ++u) {
    const std::size_t t = u + 1;
    for (const auto& s : fk.levels[u]) out.levels[t].push_back(identify.at(s));
    // -d^{J cap K}
    for (const auto& e : fk.d[u])
      out.d[t].push_back({identify.at(e.source), identify.at(e.target), -e.sign, e.var});
    // comparison map f_u = (f_{u,J}, f_{u,K})
    for (const auto& s : fk.levels[u]) {
      const BasisSymbol& src = identify.at(s);
      if (src.sets[0].size() == 2) {
        BasisSymbol tj = src;
        tj.sets[0] = {a1};
        verify(jset.count(tj) > 0, "comparison map target " + to_string(tj) + " is not in F^J");
        out.d[t].push_back({src, tj, -1, Variable(0, src.sets[0][1])});
      }
      out.d[t].push_back({src, s, 1, Variable(0, a1)});
    }
  }
  for (auto& l : out.levels) {
    std::sort(l.begin(), l.end());
    verify(std::adjacent_find(l.begin(), l.end()) == l.end(), "cone summands overlap");
  }
  return out;
}

ResolutionComplex to_indexed(const SymComplex& sc) {
  ResolutionComplex rz;
  std::size_t n = sc.levels.size();
  while (n > 0 && sc.levels[n - 1].empty()) --n;
  rz.symbols.assign(sc.levels.begin(), sc.levels.begin() + static_cast<std::ptrdiff_t>(n));
  rz.degrees.resize(n);
  rz.differentials.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (const auto& s : rz.symbols[t]) rz.degrees[t].push_back(s.degree());
    if (t == 0) continue;
    for (const auto& e : sc.d[t])
      rz.differentials[t].push_back(
          {find_symbol(rz.symbols[t - 1], e.target), find_symbol(rz.symbols[t], e.source), e.sign, e.var});
    std::sort(rz.differentials[t].begin(), rz.differentials[t].end());
  }
  return rz;
}

}  // namespace

ResolutionComplex build_by_mapping_cone(const PosetIdeal& ideal, const Guards& guards) {
  if (ideal.space().m() == 0) throw InputError("build_by_mapping_cone: empty poset");
  Instance in{ideal.space().poset, ideal.space().alphabet, ideal.members()};
  ResolutionComplex cone = to_indexed(cone_rec(in));
  ResolutionComplex direct = build_resolution(ideal, guards);
  verify(cone.symbols == direct.symbols, "mapping cone basis differs from the direct construction");
  for (std::size_t t = 1; t < direct.levels(); ++t)
    verify(cone.differentials[t] == direct.differentials[t],
           "mapping cone differential d_" + std::to_string(t) + " differs from the direct construction");
  verify(cone == direct, "mapping cone complex differs from the direct construction");
  return cone;
}

}  // namespace colp
