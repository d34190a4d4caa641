#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "colp/hom.hpp"

namespace colp {

// X_{p_i, a}, or X^{(s)}_{i, a} in the power ring (copy = s >= 1; copy 0 means
// the base ring). Element indices are 0-based, letters are the values in [n].
//
// The defaulted ordering sorts by (element, copy, letter); the *earlier*
// variable is the *larger* one: X_{p1,1} > X_{p1,2} > ... > X_{pm,n}.
struct Variable {
  int element = 0;
  int copy = 0;
  int letter = 0;

  Variable() = default;
  Variable(int element_, int letter_, int copy_ = 0) : element(element_), copy(copy_), letter(letter_) {}

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;
};

std::string to_string(const Variable& v);  // X[p2,3] or X[p2,3,s1]

// Variable order used by the exchange test. Both orders agree on the base ring.
enum class VariableOrder {
  ElementCopyLetter,  // (i, s, a): the storage order
  ElementLetterCopy,  // (i, a, s): base-ring order with the copy as innermost tiebreak
};
std::tuple<int, int, int> variable_order_key(const Variable& v, VariableOrder order);

// A monomial as a sorted list of (variable, positive exponent).
class Monomial {
 public:
  using Term = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Term> terms);  // merges duplicates, drops zeros
  static Monomial of(const Variable& v, int e = 1) { return Monomial({{v, e}}); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_one() const noexcept { return terms_.empty(); }
  int degree() const noexcept;
  int exponent(const Variable& v) const;
  bool is_squarefree() const;
  bool is_variable() const { return terms_.size() == 1 && terms_[0].second == 1; }
  std::vector<Variable> support() const;

  // Total order: by degree, then lexicographically descending (larger
  // variables first), so X[p1,1] < X[p1,2] < X[p1,1]X[p2,1].
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Term> terms_;
};

// > 0 if a is lex-greater than b (higher exponent at the first differing, i.e. largest, variable).
int lex_compare(const Monomial& a, const Monomial& b);

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial exact_divide(const Monomial& a, const Monomial& b);  // requires b | a
Monomial colon_quotient(const Monomial& v, const Monomial& u);  // v / gcd(v, u)
Monomial monomial_power(const Monomial& a, int k);
std::string to_string(const Monomial& m);  // "1" or X[p1,1]^2X[p2,3]

// A monomial ideal stored by its minimal generators, sorted lex-descending.
// The empty generator list is the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Monomial> gens);  // minimalizes

  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool contains(const Monomial& u) const;
  bool is_equigenerated() const;
  bool is_squarefree() const;
  std::vector<Variable> variables() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<Monomial> gens_;
};

std::string to_string(const MonomialIdeal& I);

// Multigraded Betti numbers beta_{i,b}.
class BettiTable {
 public:
  using Key = std::pair<int, Monomial>;

  void add(int i, const Monomial& b, long long count = 1);
  long long at(int i, const Monomial& b) const;
  const std::map<Key, long long>& entries() const noexcept { return entries_; }
  std::map<std::pair<int, int>, long long> coarse() const;  // (i, total degree) -> beta
  std::vector<long long> totals() const;                    // beta_i summed over degrees
  int max_index() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, long long> entries_;  // nonzero entries only
};

// Conventional triangular layout: rows j - i, columns i.
std::string format_betti(const BettiTable& table);

// Integer polynomial in t, coefficients by ascending power, no trailing zeros.
struct IntPolynomial {
  std::vector<long long> coeffs;

  static IntPolynomial constant(long long c);
  static IntPolynomial monomial(long long c, int power);
  static IntPolynomial one_minus_t_power(int e, int mult = 1);  // (1 - t^e)^mult
  void normalize();
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};
std::string to_string(const IntPolynomial& p);

// ---- generalized co-letterplace ideals ----

Monomial monomial_of_map(const IsotoneMap& f);
Monomial monomial_of_sets(const std::vector<std::vector<int>>& sets);
MonomialIdeal ideal_of(const PosetIdeal& ideal);
std::size_t ideal_size(const HomSpace& space);  // sum |A_i|
std::vector<Variable> ring_variables(const HomSpace& space);

// ---- ideal operations ----

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u);
MonomialIdeal ideal_multiply(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_power(const MonomialIdeal& I, int k);
MonomialIdeal ideal_intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
bool ideal_equal(const MonomialIdeal& I, const MonomialIdeal& J);
bool ideal_contains(const MonomialIdeal& big, const MonomialIdeal& small);
bool is_variable_generated(const MonomialIdeal& I);

struct ExchangeViolation {
  Monomial u, v;   // deg_{X_q} u < deg_{X_q} v, equal before X_q
  Variable q;
};
struct WeakPolymatroidResult {
  bool holds = true;
  std::optional<ExchangeViolation> violation;
};
// Throws InputError when I is not equigenerated.
WeakPolymatroidResult is_weakly_polymatroidal(const MonomialIdeal& I,
                                              VariableOrder order = VariableOrder::ElementCopyLetter);

struct LinearQuotientStep {
  IsotoneMap map;
  std::vector<Variable> set;  // variables generating (U_{f_1},...,U_{f_{i-1}}) : U_{f_i}
};
// Computes set(U_f) from prefix colons in <=_l order and checks it against the
// closed form {X_{p_s,k} : k < f(p_s), k in A_s, f(p_i) <= k for p_i < p_s}.
std::vector<LinearQuotientStep> linear_quotients_sets(const PosetIdeal& ideal);
std::vector<Variable> delta_set(const HomSpace& space, const IsotoneMap& f);

struct QuasiLinearFailure {
  Monomial generator;                 // u in G(I)
  std::vector<Monomial> non_variable;  // minimal generators of (I \ u) : u of degree >= 2
};
struct QuasiLinearResult {
  bool holds = true;
  std::vector<QuasiLinearFailure> failures;
};
QuasiLinearResult is_quasi_linear(const MonomialIdeal& I);
MonomialIdeal colon_without_generator(const MonomialIdeal& I, const Monomial& u);  // (I \ u) : u

// Squarefree Alexander dual: generated by the minimal transversals of the
// generator supports. The involution dual(dual(I)) = I is asserted.
MonomialIdeal alexander_dual(const MonomialIdeal& I, const std::vector<Variable>& vertices);

// Exponent e on X becomes X^{(1)} ... X^{(e)}. Input variables must be base-ring variables.
MonomialIdeal polarize(const MonomialIdeal& I);

// Numerator N(t) of the Hilbert series N(t)/(1-t)^{#vars} of S/I. The
// default route is the colon recursion N(I + (u)) = N(I) - t^{deg u} N(I : u).
IntPolynomial hilbert_numerator(const MonomialIdeal& I, const Guards& guards = default_guards());
// Sum over subsets S of G(I) of (-1)^{|S|} t^{deg lcm S}; refuses beyond the cap.
IntPolynomial hilbert_numerator_inclusion_exclusion(
    const MonomialIdeal& I, std::size_t cap = default_guards().hilbert_inclusion_exclusion);

}  // namespace colp
