#include "doctest.h"
#include "support.hpp"

#include "colp/betti_oracle.hpp"
#include "colp/powers.hpp"

using namespace colp;
using namespace colp::test;

TEST_CASE("N_ell and the monotonicity check") {
  CHECK(N_ell({1, 1, 3}, 1, 4) == 1);
  CHECK(N_ell({1, 1, 3}, 3, 4) == 3);
  CHECK(N_ell({1, 1, 3}, 4, 4) == 4);
  CHECK(check_N_monotone({1, 2}, {2, 3}, {0, 1}, 3));
  CHECK(check_N_monotone({1, 2}, {2, 3}, {1, 0}, 3));
  CHECK_THROWS_AS(check_N_monotone({2, 2}, {1, 3}, {0, 1}, 3), InputError);
  CHECK_THROWS_AS(check_N_monotone({1, 2}, {2, 3}, {0, 0}, 3), InputError);
}

TEST_CASE("exhaustive monotonicity sweep over {[4]}_3") {
  auto s = sweep_N_monotone(4, 3);
  CHECK(s.holds);
  CHECK(s.multisets == 256);
  CHECK(s.dominated == 43298);
  CHECK_FALSE(s.counterexample);
}

TEST_CASE("increasing chains and bounded powers") {
  auto L = full(Poset::chain(1), 3, {{1, 2, 3}});
  CHECK(increasing_chains(L, 2).size() == 6);
  CHECK(bounded_power(L, 2) == ideal_power(ideal_of(L), 2));
  auto two = generated(Poset::antichain(2), 2, {{1, 2}, {1, 2}}, {{1, 2}, {2, 1}});
  CHECK(bounded_power(two, 2) != ideal_power(ideal_of(two), 2));
  auto rep = equivalence_report(two, 2);
  CHECK_FALSE(rep.equal_at_k);
  CHECK(rep.all_agree());
  Guards g;
  g.chains = 2;
  CHECK_THROWS_AS(bounded_power(L, 2, g), GuardError);
}

TEST_CASE("lift of the singleton instance") {
  auto L = full(Poset::chain(1), 3, {{1, 2, 3}});
  auto ctx = lift(L, 2);
  CHECK(ctx.product.poset.size() == 2);
  CHECK(ctx.lifted.size() == 6);
  CHECK(ctx.differences.size() == 3);
  auto T = ctx.lifted_ideal();
  std::vector<std::string> got;
  for (const auto& g : T.generators()) got.push_back(to_string(g));
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"X[p1,1,s1]X[p1,1,s2]", "X[p1,1,s1]X[p1,2,s2]", "X[p1,1,s1]X[p1,3,s2]",
                                        "X[p1,2,s1]X[p1,2,s2]", "X[p1,2,s1]X[p1,3,s2]", "X[p1,3,s1]X[p1,3,s2]"});
  CHECK(specialize(T) == ideal_power(ideal_of(L), 2));
  auto rz = ctx.lifted_resolution();
  CHECK(rz.ranks() == std::vector<std::size_t>{6, 8, 3});
  auto sp = specialize(rz);
  CHECK(sp.ranks() == std::vector<std::size_t>{6, 8, 3});
  CHECK(sp.symbols.empty());

  auto cert = regular_sequence_certificate(ctx);
  CHECK(cert.c == 3);
  CHECK(cert.holds);
  CHECK(cert.quotient_matches);
  CHECK(cert.numerator_t == IntPolynomial{{1, 0, -6, 8, -3}});

  auto pol = polarization_mismatch(ctx);
  CHECK_FALSE(pol.isomorphic);
}

TEST_CASE("power resolution of the singleton instance") {
  auto rep = verify_power_resolution(Poset::chain(1), AlphabetMap{3, {{1, 2, 3}}}, 2);
  CHECK(rep.ranks == std::vector<std::size_t>{6, 8, 3});
  CHECK(rep.betti_matches_oracle);
  CHECK(rep.strands_checked > 0);
}

TEST_CASE("alphabets of size at most 2 polarize") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto spec = random_instance(seed, RandomBounds{2, 2, 20});
    auto in = load_instance(spec);
    auto ctx = lift(in.ideal, 2);
    CAPTURE(seed);
    auto pol = polarization_mismatch(ctx);
    CHECK(pol.isomorphic);
  }
}

TEST_CASE("random instances: exchange property, five-way agreement, certificate") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto in = random_loaded(seed, 3, 3, 12);
    CAPTURE(seed);
    for (int k : {2, 3}) {
      auto B = bounded_power(in.ideal, k);
      CHECK(is_weakly_polymatroidal(B, VariableOrder::ElementLetterCopy).holds);
      CHECK(equivalence_report(in.ideal, k).all_agree());
    }
    auto ctx = lift(in.ideal, 2);
    CHECK(regular_sequence_certificate(ctx).holds);
    auto rz = ctx.lifted_resolution();
    auto sp = specialize(rz);
    CHECK(betti_table_from_resolution(sp).totals() == taylor_betti(bounded_power(in.ideal, 2)).totals());
  }
}
