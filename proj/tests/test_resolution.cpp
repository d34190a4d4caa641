#include "doctest.h"
#include "support.hpp"

#include "colp/betti_oracle.hpp"
#include "colp/resolution.hpp"
#include "colp/shift.hpp"

using namespace colp;
using namespace colp::test;

TEST_CASE("base case (x1, x2)") {
  auto L = full(Poset::chain(1), 2, {{1, 2}});
  auto rz = build_resolution(L);
  CHECK(rz.ranks() == std::vector<std::size_t>{2, 1});
  REQUIRE(rz.differentials[1].size() == 2);
  // d1([{1,2}]) = X1 [{2}] - X2 [{1}]
  CHECK(rz.differentials[1][0] == DiffEntry{0, 0, -1, X(1, 2)});
  CHECK(rz.differentials[1][1] == DiffEntry{1, 0, 1, X(1, 1)});
  CHECK(to_string(rz.symbols[1][0]) == "[{1,2}]");
  CHECK(verify_exact(rz, ideal_of(L)).checked() == 3);
}

TEST_CASE("basis symbols and their differential") {
  auto L = full(Poset::chain(2), 2, {{1, 2}, {1, 2}});
  CHECK(enumerate_Ct(L, 0).size() == 3);
  auto c1 = enumerate_Ct(L, 1);
  REQUIRE(c1.size() == 2);
  CHECK(to_string(c1[0]) == "[{1},{1,2}]");
  CHECK(to_string(c1[1]) == "[{1,2},{2}]");
  CHECK(enumerate_Ct(L, 2).empty());
  CHECK(c1[1].t() == 1);
  CHECK(c1[1].top().values == std::vector<int>{2, 2});
  auto d = differential(c1[1]);
  REQUIRE(d.size() == 2);
  CHECK(to_string(d[0].target) == "[{2},{2}]");
  CHECK(d[0].sign == 1);
  CHECK(d[0].var == X(1, 1));
  CHECK(to_string(d[1].target) == "[{1},{2}]");
  CHECK(d[1].sign == -1);
  CHECK(d[1].var == X(1, 2));
}

TEST_CASE("(X1, X2, X3): Koszul-like ranks") {
  auto rz = build_resolution(full(Poset::chain(1), 3, {{1, 2, 3}}));
  CHECK(rz.ranks() == std::vector<std::size_t>{3, 3, 1});
  CHECK(rz.pd() == 2);
}

TEST_CASE("complex checks reject corrupted differentials") {
  auto rz = build_resolution(full(Poset::chain(2), 3, {{1, 2, 3}, {1, 2, 3}}));
  auto bad = rz;
  bad.differentials[1][0].sign *= -1;
  CHECK_THROWS_AS(verify_complex(bad), VerificationError);
  auto dup = rz;
  dup.differentials[1].push_back(dup.differentials[1][0]);
  CHECK_THROWS_AS(verify_minimal(dup), VerificationError);
  auto short_ = rz;
  short_.degrees.pop_back();
  short_.differentials.pop_back();
  short_.symbols.pop_back();
  CHECK_THROWS_AS(verify_exact(short_, ideal_of(full(Poset::chain(2), 3, {{1, 2, 3}, {1, 2, 3}}))), VerificationError);
}

TEST_CASE("guards trip on the basis") {
  Guards g;
  g.basis = 3;
  CHECK_THROWS_AS(build_resolution(full(Poset::chain(1), 5, {{1, 2, 3, 4, 5}}), g), GuardError);
}

TEST_CASE("Betti splitting of the singleton instance") {
  auto L = full(Poset::chain(1), 3, {{1, 2, 3}});
  auto s = betti_split(L);
  CHECK(s.a1 == 1);
  REQUIRE(s.splits());
  CHECK(s.j_part->size() == 1);
  CHECK(s.k_part->size() == 2);
  auto r = verify_split_additivity(L);
  CHECK(r.intersection_identity);
  CHECK(r.additive);
  CHECK_THROWS_AS(betti_split(full(Poset::chain(1), 3, {{2}})), InputError);
  CHECK_FALSE(verify_split_additivity(full(Poset::chain(1), 3, {{2}})).applicable);
  CHECK_FALSE(betti_split(full(Poset::chain(2), 2, {{1, 2}, {1}})).splits());
}

TEST_CASE("random instances: oracle, exactness, cone, shifts") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto in = random_loaded(seed, 3, 4, 50);
    auto I = ideal_of(in.ideal);
    auto rz = build_resolution(in.ideal);
    CAPTURE(seed);
    CHECK(betti_table_from_resolution(rz) == taylor_betti(I));
    CHECK(verify_exact(rz, I).checked() > 0);
    CHECK(build_by_mapping_cone(in.ideal) == rz);
    CHECK(has_linear_resolution(betti_table_from_resolution(rz), static_cast<int>(in.space().m())));
    auto split = verify_split_additivity(in.ideal);
    if (split.applicable) {
      CHECK(split.intersection_identity);
      CHECK(split.additive);
    }
    for (int t = 0; t <= rz.pd(); ++t) {
      auto hs = hs_generators(in.ideal, t);
      CHECK(hs.is_equigenerated());
      CHECK(hs.size() == rz.rank(static_cast<std::size_t>(t)));
    }
  }
}

TEST_CASE("homological shift linearity on the 3-chain over [3]") {
  auto L = full(Poset::chain(3), 3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
  auto rep = hs_linearity_report(L);
  REQUIRE(rep.size() == 3);
  CHECK(rep[0].generators == 10);
  CHECK(rep[1].generators == 15);
  CHECK(rep[2].generators == 6);
  CHECK(rep[0].linear == true);
  CHECK(rep[1].linear == true);
  CHECK(rep[2].linear == false);
  CHECK_FALSE(rep[2].quasi_linear);
  const auto alpha = M({{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
  const auto beta = M({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}});
  CHECK(std::count(rep[2].hs.generators().begin(), rep[2].hs.generators().end(), alpha) == 1);
  CHECK(std::count(rep[2].hs.generators().begin(), rep[2].hs.generators().end(), beta) == 1);
  bool found = false;
  for (const auto& w : rep[2].witnesses)
    if (w.generator == alpha)
      for (const auto& g : w.non_variable) found |= g == M({{2, 1}, {3, 1}, {3, 2}});
  CHECK(found);
}
