#include "doctest.h"
#include "support.hpp"

#include "colp/classify.hpp"
#include "colp/export.hpp"

using namespace colp;
using namespace colp::test;

namespace {
std::string path(const char* name) { return std::string(COLP_TEST_DIR) + "/instances/" + name; }

std::vector<std::string> facet_strings(const SimplicialComplex& d) {
  std::vector<std::string> out;
  for (Face f : d.facets()) out.push_back(d.face_to_string(f));
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("two-element chain with A_q = {1,3}: a ball with two boundary points") {
  auto in = load_instance(read_instance_file(path("ball.json")));
  auto rep = classify(in.ideal);
  CHECK(rep.verdict() == "ball");
  CHECK(facet_strings(rep.delta.complex) ==
        std::vector<std::string>{"{(p,1),(q,1)}", "{(p,2),(q,1)}", "{(p,2),(q,3)}"});
  CHECK(facet_strings(rep.boundary) == std::vector<std::string>{"{(p,1)}", "{(q,3)}"});
  REQUIRE(rep.homology);
  CHECK(rep.homology->ball);
  CHECK_FALSE(rep.homology->sphere);
  CHECK(rep.pd == 1);
  CHECK(rep.pd_bound == 2);
}

TEST_CASE("chain p < q over [n], A_q = {n}: spheres") {
  for (int n : {3, 4, 5}) {
    InstanceSpec s;
    s.elements = {"p", "q"};
    s.covers = {{"p", "q"}};
    s.n = n;
    std::vector<int> all;
    for (int a = 1; a <= n; ++a) all.push_back(a);
    s.A = {{"p", all}, {"q", {n}}};
    auto rep = classify(load_instance(s).ideal);
    CAPTURE(n);
    CHECK(rep.sphere);
    REQUIRE(rep.homology);
    CHECK(rep.homology->sphere);
    CHECK(rep.delta.complex.dim() == n - 2);
    CHECK(has_sphere_homology(rep.homology->homology, n - 2));
    CHECK(rep.delta.complex.facets().size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("singleton ideal: Delta on the used vertices is {emptyset}") {
  auto rep = classify(generated(Poset::chain(2), 2, {{1, 2}, {1, 2}}, {{1, 1}}));
  CHECK(rep.sphere);
  CHECK(rep.delta.complex.dim() == -1);
  CHECK(rep.delta.discarded.size() == 2);
}

TEST_CASE("random instances: both sphere rules and the homology certificate agree") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto in = random_loaded(seed, 3, 4, 50);
    CAPTURE(seed);
    auto rep = classify(in.ideal);
    CHECK(rep.sphere == rep.combinatorial_sphere);
    CHECK(rep.pd <= rep.pd_bound);
  }
}

TEST_CASE("instance parsing") {
  auto spec = read_instance_file(path("two_maximal.json"));
  CHECK(spec.elements == std::vector<std::string>{"x", "y"});
  CHECK(spec.ideal_type == "generators");
  CHECK(parse_instance(dump_instance(spec)) == spec);
  CHECK_THROWS_WITH_AS(parse_instance("{\"elements\": [\"a\"],\n \"n\": }"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_AS(parse_instance("[1]"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"elements": ["a"], "A": {"a": [1]}})"), InputError);
  CHECK_THROWS_AS(load_instance(parse_instance(R"({"elements": ["a"], "n": 2, "A": {"a": [3]}})")), InputError);
  CHECK_THROWS_AS(load_instance(parse_instance(R"({"elements": ["a"], "n": 2, "A": {"a": [1]},
      "ideal": {"type": "weird"}})")),
                  InputError);
  CHECK_THROWS_AS(load_instance(parse_instance(R"({"elements": ["a"], "n": 2, "A": {"a": [1]},
      "guards": {"nonsense": 1}})")),
                  InputError);
  CHECK_THROWS_AS(read_instance_file(path("missing.json")), InputError);
}

TEST_CASE("random instances are reproducible and round-trip") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto a = random_instance(seed);
    CHECK(dump_instance(a) == dump_instance(random_instance(seed)));
    CHECK(parse_instance(dump_instance(a)) == a);
    CHECK(load_instance(a).ideal.size() <= 200);
  }
  CHECK(dump_instance(random_instance(1)) != dump_instance(random_instance(2)));
}

TEST_CASE("export formats") {
  auto rz = build_resolution(full(Poset::chain(1), 2, {{1, 2}}));
  CHECK(matrix_text(rz, 1) == "d1 = matrix {{-X[p1,2]},\n  {X[p1,1]}}\n");
  auto j = resolution_json(rz);
  CHECK(j["pd"] == 1);
  CHECK(j["levels"][1]["basis"][0]["sets"] == nlohmann::json::parse("[[1,2]]"));
  CHECK(j["differentials"][0]["entries"][0] == nlohmann::json::parse(R"([0,0,-1,"X[p1,2]"])"));
  auto b = betti_json(betti_table_from_resolution(rz));
  CHECK(b["graded"].size() == 2);
  CHECK(resolution_json(rz).dump() == j.dump());
}
