#include "colp/monomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace colp {

std::string to_string(const Variable& v) {
  std::string s = "X[p" + std::to_string(v.element + 1) + "," + std::to_string(v.letter);
  if (v.copy > 0) s += ",s" + std::to_string(v.copy);
  return s + "]";
}

std::tuple<int, int, int> variable_order_key(const Variable& v, VariableOrder order) {
  switch (order) {
    case VariableOrder::ElementCopyLetter:
      return {v.element, v.copy, v.letter};
    case VariableOrder::ElementLetterCopy:
      return {v.element, v.letter, v.copy};
  }
  return {v.element, v.copy, v.letter};
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Term> terms) {
  auto by_var = [](const Term& a, const Term& b) { return a.first < b.first; };
  if (!std::is_sorted(terms.begin(), terms.end(), by_var)) std::sort(terms.begin(), terms.end(), by_var);
  for (auto& t : terms) {
    if (t.second < 0) throw InputError("negative exponent on " + to_string(t.first));
    if (t.second == 0) continue;
    if (!terms_.empty() && terms_.back().first == t.first)
      terms_.back().second += t.second;
    else
      terms_.push_back(t);
  }
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (const auto& t : terms_) d += t.second;
  return d;
}

int Monomial::exponent(const Variable& v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const Term& t, const Variable& x) { return t.first < x; });
  return (it != terms_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::is_squarefree() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 1; });
}

std::vector<Variable> Monomial::support() const {
  std::vector<Variable> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) return 1;
    if (y[j].first < x[i].first) return -1;
    if (x[i].second != y[j].second) return x[i].second > y[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  if (i < x.size()) return 1;
  if (j < y.size()) return -1;
  return 0;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  int l = lex_compare(a, b);
  if (l > 0) return std::strong_ordering::less;
  if (l < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

// Merge two term lists with `op` applied to the exponents (missing = 0).
template <class Op>
Monomial merge(const Monomial& a, const Monomial& b, Op op) {
  std::vector<Monomial::Term> out;
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, op(x[i].second, 0));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, op(0, y[j].second));
      ++j;
    } else {
      out.emplace_back(x[i].first, op(x[i].second, y[j].second));
      ++i;
      ++j;
    }
  }
  return Monomial(std::move(out));
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](int p, int q) { return p + q; });
}

bool divides(const Monomial& a, const Monomial& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t j = 0;
  for (const auto& t : x) {
    while (j < y.size() && y[j].first < t.first) ++j;
    if (j == y.size() || !(y[j].first == t.first) || y[j].second < t.second) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](int p, int q) { return std::max(p, q); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](int p, int q) { return std::min(p, q); });
}

Monomial exact_divide(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw std::invalid_argument(to_string(b) + " does not divide " + to_string(a));
  return merge(a, b, [](int p, int q) { return p - q; });
}

Monomial colon_quotient(const Monomial& v, const Monomial& u) {
  return merge(v, u, [](int p, int q) { return std::max(0, p - q); });
}

Monomial monomial_power(const Monomial& a, int k) {
  std::vector<Monomial::Term> t = a.terms();
  for (auto& x : t) x.second *= k;
  return Monomial(std::move(t));
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.terms()) {
    s += to_string(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Ascending degree: a divisor is always seen before its multiples.
  for (auto& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return divides(h, g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) > 0; });
}

bool MonomialIdeal::contains(const Monomial& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, u); });
}

bool MonomialIdeal::is_equigenerated() const {
  return std::all_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.degree() == gens_[0].degree(); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

std::vector<Variable> MonomialIdeal::variables() const {
  std::set<Variable> vs;
  for (const auto& g : gens_)
    for (const auto& t : g.terms()) vs.insert(t.first);
  return {vs.begin(), vs.end()};
}

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (i) s += ", ";
    s += to_string(I.generators()[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// BettiTable

void BettiTable::add(int i, const Monomial& b, long long count) {
  if (i < 0) throw std::invalid_argument("negative homological index");
  if (count == 0) return;
  auto& v = entries_[{i, b}];
  v += count;
  if (v == 0) entries_.erase({i, b});
}

long long BettiTable::at(int i, const Monomial& b) const {
  auto it = entries_.find({i, b});
  return it == entries_.end() ? 0 : it->second;
}

std::map<std::pair<int, int>, long long> BettiTable::coarse() const {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [k, v] : entries_) out[{k.first, k.second.degree()}] += v;
  return out;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [k, v] : entries_) m = std::max(m, k.first);
  return m;
}

std::vector<long long> BettiTable::totals() const {
  std::vector<long long> t(static_cast<std::size_t>(max_index() + 1), 0);
  for (const auto& [k, v] : entries_) t[static_cast<std::size_t>(k.first)] += v;
  return t;
}

std::string format_betti(const BettiTable& table) {
  auto coarse = table.coarse();
  const int top = table.max_index();
  if (top < 0) return "zero\n";
  int lo = 1 << 30, hi = -(1 << 30);
  for (const auto& [k, v] : coarse) {
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }
  auto totals = table.totals();
  std::size_t width = 1;
  for (auto t : totals) width = std::max(width, std::to_string(t).size());
  auto cell = [&](const std::string& s) { return std::string(width + 1 - s.size(), ' ') + s; };

  std::ostringstream os;
  os << std::string(7, ' ');
  for (int i = 0; i <= top; ++i) os << cell(std::to_string(i));
  os << "\ntotal:";
  os << ' ';
  for (int i = 0; i <= top; ++i) os << cell(std::to_string(totals[static_cast<std::size_t>(i)]));
  os << '\n';
  for (int r = lo; r <= hi; ++r) {
    std::string label = std::to_string(r) + ":";
    os << std::string(7 - std::min<std::size_t>(7, label.size()), ' ') << label;
    for (int i = 0; i <= top; ++i) {
      auto it = coarse.find({i, i + r});
      os << cell(it == coarse.end() ? "." : std::to_string(it->second));
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// IntPolynomial

namespace {
long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}
long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}
}  // namespace

IntPolynomial IntPolynomial::constant(long long c) {
  IntPolynomial p{{c}};
  p.normalize();
  return p;
}

IntPolynomial IntPolynomial::monomial(long long c, int power) {
  IntPolynomial p;
  p.coeffs.assign(static_cast<std::size_t>(power) + 1, 0);
  p.coeffs.back() = c;
  p.normalize();
  return p;
}

IntPolynomial IntPolynomial::one_minus_t_power(int e, int mult) {
  IntPolynomial base = constant(1) - monomial(1, e);
  IntPolynomial out = constant(1);
  for (int i = 0; i < mult; ++i) out = out * base;
  return out;
}

void IntPolynomial::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = checked_add(r.coeffs[i], b.coeffs[i]);
  r.normalize();
  return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial nb = b;
  for (auto& c : nb.coeffs) c = -c;
  return a + nb;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] = checked_add(r.coeffs[i + j], checked_mul(a.coeffs[i], b.coeffs[j]));
  r.normalize();
  return r;
}

std::string to_string(const IntPolynomial& p) {
  if (p.coeffs.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    long long c = p.coeffs[i];
    if (c == 0) continue;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    long long a = std::llabs(c);
    if (a != 1 || i == 0) s += std::to_string(a);
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

// ---------------------------------------------------------------------------
// co-letterplace ideals

Monomial monomial_of_map(const IsotoneMap& f) {
  std::vector<Monomial::Term> t;
  for (std::size_t i = 0; i < f.size(); ++i) t.emplace_back(Variable(static_cast<int>(i), f[i]), 1);
  return Monomial(std::move(t));
}

Monomial monomial_of_sets(const std::vector<std::vector<int>>& sets) {
  std::vector<Monomial::Term> t;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw InputError("monomial_of_sets: empty set K_" + std::to_string(i + 1));
    for (int a : sets[i]) t.emplace_back(Variable(static_cast<int>(i), a), 1);
  }
  Monomial m(std::move(t));
  if (!m.is_squarefree()) throw InputError("monomial_of_sets: repeated letter");
  return m;
}

MonomialIdeal ideal_of(const PosetIdeal& ideal) {
  std::vector<Monomial> g;
  g.reserve(ideal.size());
  for (const auto& f : ideal.members()) g.push_back(monomial_of_map(f));
  return MonomialIdeal(std::move(g));
}

std::size_t ideal_size(const HomSpace& space) { return space.alphabet.size(); }

std::vector<Variable> ring_variables(const HomSpace& space) {
  std::vector<Variable> v;
  for (std::size_t i = 0; i < space.m(); ++i)
    for (int a : space.alphabet.sets[i]) v.emplace_back(static_cast<int>(i), a);
  return v;
}

// ---------------------------------------------------------------------------
// ideal operations

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u) {
  std::vector<Monomial> g;
  g.reserve(I.size());
  for (const auto& v : I.generators()) g.push_back(colon_quotient(v, u));
  return MonomialIdeal(std::move(g));
}

MonomialIdeal ideal_multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  std::vector<Monomial> g;
  for (const auto& u : I.generators())
    for (const auto& v : J.generators()) g.push_back(u * v);
  return MonomialIdeal(std::move(g));
}

MonomialIdeal ideal_power(const MonomialIdeal& I, int k) {
  if (k < 0) throw InputError("negative ideal power");
  MonomialIdeal r(std::vector<Monomial>{Monomial{}});
  for (int i = 0; i < k; ++i) r = ideal_multiply(r, I);
  return r;
}

MonomialIdeal ideal_intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  std::vector<Monomial> g;
  for (const auto& u : I.generators())
    for (const auto& v : J.generators()) g.push_back(lcm(u, v));
  return MonomialIdeal(std::move(g));
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  std::vector<Monomial> g = I.generators();
  g.insert(g.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(std::move(g));
}

bool ideal_equal(const MonomialIdeal& I, const MonomialIdeal& J) { return I == J; }

bool ideal_contains(const MonomialIdeal& big, const MonomialIdeal& small) {
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Monomial& g) { return big.contains(g); });
}

bool is_variable_generated(const MonomialIdeal& I) {
  return std::all_of(I.generators().begin(), I.generators().end(), [](const Monomial& g) { return g.is_variable(); });
}

WeakPolymatroidResult is_weakly_polymatroidal(const MonomialIdeal& I, VariableOrder order) {
  if (!I.is_equigenerated()) throw InputError("is_weakly_polymatroidal: ideal is not equigenerated");
  WeakPolymatroidResult res;
  const auto& gens = I.generators();
  if (gens.size() <= 1) return res;

  auto vars = I.variables();
  std::sort(vars.begin(), vars.end(), [&](const Variable& a, const Variable& b) {
    return variable_order_key(a, order) < variable_order_key(b, order);
  });
  const std::size_t nv = vars.size();
  std::vector<std::vector<int>> exps(gens.size(), std::vector<int>(nv, 0));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t x = 0; x < nv; ++x) exps[g][x] = gens[g].exponent(vars[x]);
  std::set<std::vector<int>> lookup(exps.begin(), exps.end());

  for (std::size_t u = 0; u < gens.size(); ++u)
    for (std::size_t v = 0; v < gens.size(); ++v) {
      if (u == v) continue;
      std::size_t q = 0;
      while (q < nv && exps[u][q] == exps[v][q]) ++q;
      if (q == nv || exps[u][q] >= exps[v][q]) continue;
      bool found = false;
      for (std::size_t p = q + 1; p < nv && !found; ++p) {
        if (exps[u][p] == 0) continue;
        auto w = exps[u];
        ++w[q];
        --w[p];
        found = lookup.count(w) > 0;
      }
      if (!found) {
        res.holds = false;
        res.violation = ExchangeViolation{gens[u], gens[v], vars[q]};
        return res;
      }
    }
  return res;
}

std::vector<Variable> delta_set(const HomSpace& space, const IsotoneMap& f) {
  std::vector<Variable> out;
  for (std::size_t s = 0; s < space.m(); ++s) {
    auto below = space.poset.strictly_below(s);
    for (int k : space.alphabet.sets[s]) {
      if (k >= f[s]) break;
      bool ok = std::all_of(below.begin(), below.end(), [&](std::size_t i) { return f[i] <= k; });
      if (ok) out.emplace_back(static_cast<int>(s), k);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinearQuotientStep> linear_quotients_sets(const PosetIdeal& ideal) {
  const auto& maps = ideal.members();
  std::vector<Monomial> mons;
  mons.reserve(maps.size());
  for (const auto& f : maps) mons.push_back(monomial_of_map(f));

  std::vector<LinearQuotientStep> out;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::set<Variable> linear;
    std::vector<Monomial> rest;
    for (std::size_t j = 0; j < i; ++j) {
      Monomial q = colon_quotient(mons[j], mons[i]);
      if (q.is_variable())
        linear.insert(q.terms()[0].first);
      else
        rest.push_back(std::move(q));
    }
    for (const auto& q : rest) {
      bool covered = std::any_of(q.terms().begin(), q.terms().end(),
                                 [&](const Monomial::Term& t) { return linear.count(t.first) > 0; });
      verify(covered, "prefix colon at " + to_string(maps[i]) + " is not generated by variables (contains " +
                          to_string(q) + ")");
    }
    LinearQuotientStep step{maps[i], {linear.begin(), linear.end()}};
    verify(step.set == delta_set(ideal.space(), maps[i]),
           "set(U_f) differs from the closed form at f = " + to_string(maps[i]));
    out.push_back(std::move(step));
  }
  return out;
}

MonomialIdeal colon_without_generator(const MonomialIdeal& I, const Monomial& u) {
  std::vector<Monomial> g;
  for (const auto& v : I.generators())
    if (!(v == u)) g.push_back(colon_quotient(v, u));
  return MonomialIdeal(std::move(g));
}

QuasiLinearResult is_quasi_linear(const MonomialIdeal& I) {
  QuasiLinearResult res;
  if (I.size() <= 1) return res;
  for (const auto& u : I.generators()) {
    auto colon = colon_without_generator(I, u);
    QuasiLinearFailure fail{u, {}};
    for (const auto& g : colon.generators())
      if (!g.is_variable()) fail.non_variable.push_back(g);
    if (!fail.non_variable.empty()) {
      res.holds = false;
      res.failures.push_back(std::move(fail));
    }
  }
  return res;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> minimal_transversals(const std::vector<Mask>& edges) {
  std::vector<Mask> tr{0};
  for (Mask e : edges) {
    std::vector<Mask> next;
    for (Mask t : tr) {
      if (t & e) {
        next.push_back(t);
        continue;
      }
      for (Mask rem = e; rem; rem &= rem - 1) next.push_back(t | (rem & -rem));
    }
    std::sort(next.begin(), next.end(),
              [](Mask a, Mask b) { return __builtin_popcountll(a) != __builtin_popcountll(b)
                                              ? __builtin_popcountll(a) < __builtin_popcountll(b)
                                              : a < b; });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    tr.clear();
    for (Mask t : next)
      if (std::none_of(tr.begin(), tr.end(), [&](Mask s) { return (s & t) == s; })) tr.push_back(t);
  }
  return tr;
}

}  // namespace

MonomialIdeal alexander_dual(const MonomialIdeal& I, const std::vector<Variable>& vertices) {
  if (!I.is_squarefree()) throw InputError("alexander_dual: ideal is not squarefree");
  std::vector<Variable> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.size() > 64) throw InputError("alexander_dual: more than 64 vertices");
  auto index = [&](const Variable& v) -> std::size_t {
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    if (it == vs.end() || !(*it == v)) throw InputError("alexander_dual: " + to_string(v) + " not in the vertex set");
    return static_cast<std::size_t>(it - vs.begin());
  };
  auto to_masks = [&](const MonomialIdeal& J) {
    std::vector<Mask> e;
    for (const auto& g : J.generators()) {
      Mask m = 0;
      for (const auto& t : g.terms()) m |= Mask{1} << index(t.first);
      e.push_back(m);
    }
    return e;
  };
  auto to_ideal = [&](const std::vector<Mask>& ms) {
    std::vector<Monomial> g;
    for (Mask m : ms) {
      std::vector<Monomial::Term> t;
      for (std::size_t b = 0; b < vs.size(); ++b)
        if (m >> b & 1) t.emplace_back(vs[b], 1);
      g.emplace_back(std::move(t));
    }
    return MonomialIdeal(std::move(g));
  };

  // The zero ideal has the empty transversal; (1) has none.
  auto edges = to_masks(I);
  auto dual_masks = edges.empty() ? std::vector<Mask>{0} : minimal_transversals(edges);
  if (std::find(edges.begin(), edges.end(), Mask{0}) != edges.end()) dual_masks.clear();
  MonomialIdeal dual = to_ideal(dual_masks);

  auto back_masks = dual_masks.empty() ? std::vector<Mask>{0} : minimal_transversals(dual_masks);
  if (std::find(dual_masks.begin(), dual_masks.end(), Mask{0}) != dual_masks.end()) back_masks.clear();
  verify(to_ideal(back_masks) == I, "Alexander duality is not an involution on " + to_string(I));
  return dual;
}

MonomialIdeal polarize(const MonomialIdeal& I) {
  std::vector<Monomial> g;
  for (const auto& u : I.generators()) {
    std::vector<Monomial::Term> t;
    for (const auto& [v, e] : u.terms()) {
      if (v.copy != 0) throw InputError("polarize: " + to_string(v) + " is already a copy variable");
      for (int s = 1; s <= e; ++s) t.emplace_back(Variable(v.element, v.letter, s), 1);
    }
    g.emplace_back(std::move(t));
  }
  return MonomialIdeal(std::move(g));
}

namespace {

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  std::set<Variable> seen;
  for (const auto& g : gens)
    for (const auto& t : g.terms())
      if (!seen.insert(t.first).second) return false;
  return true;
}

IntPolynomial numerator_rec(const std::vector<Monomial>& gens) {
  IntPolynomial n = IntPolynomial::constant(1);
  if (pairwise_coprime(gens)) {
    for (const auto& g : gens) n = n * IntPolynomial::one_minus_t_power(g.degree());
    return n;
  }
  // N(g_1..g_i) = N(g_1..g_{i-1}) - t^{deg g_i} N((g_1..g_{i-1}) : g_i)
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Monomial> colon;
    for (std::size_t j = 0; j < i; ++j) colon.push_back(colon_quotient(gens[j], gens[i]));
    MonomialIdeal c(std::move(colon));
    n = n - IntPolynomial::monomial(1, gens[i].degree()) * numerator_rec(c.generators());
  }
  return n;
}

}  // namespace

IntPolynomial hilbert_numerator(const MonomialIdeal& I, const Guards& guards) {
  check_guard(I.size() <= guards.hilbert_generators, "hilbert_generators", guards.hilbert_generators);
  return numerator_rec(I.generators());
}

IntPolynomial hilbert_numerator_inclusion_exclusion(const MonomialIdeal& I, std::size_t cap) {
  check_guard(I.size() <= cap, "hilbert_inclusion_exclusion", cap);
  const auto& g = I.generators();
  std::vector<long long> coeffs;
  auto rec = [&](auto&& self, std::size_t i, const Monomial& l, int sign) -> void {
    if (i == g.size()) {
      auto d = static_cast<std::size_t>(l.degree());
      if (coeffs.size() <= d) coeffs.resize(d + 1, 0);
      coeffs[d] += sign;
      return;
    }
    self(self, i + 1, l, sign);
    self(self, i + 1, lcm(l, g[i]), -sign);
  };
  rec(rec, 0, Monomial{}, 1);
  IntPolynomial p{coeffs};
  p.normalize();
  return p;
}

}  // namespace colp
