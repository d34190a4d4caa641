#include "colp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace colp {

using nlohmann::json;

namespace {

std::string where(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("instance: missing key \"") + key + "\"");
  return *it;
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("instance: JSON parse error at " + where(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("instance: top level must be an object");

  InstanceSpec s;
  try {
    const json& poset = j.contains("poset") ? j.at("poset") : j;
    s.elements = require(poset, "elements").get<std::vector<std::string>>();
    if (poset.contains("covers"))
      for (const auto& c : poset.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw InputError("instance: each cover must be a pair [a, b]");
        s.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
      }
    s.n = require(j, "n").get<int>();
    s.A = require(j, "A").get<std::map<std::string, std::vector<int>>>();
    if (j.contains("ideal")) {
      const json& id = j.at("ideal");
      s.ideal_type = require(id, "type").get<std::string>();
      if (id.contains("maps")) s.maps = id.at("maps").get<std::vector<std::vector<int>>>();
    }
    if (j.contains("guards")) s.guards = j.at("guards").get<std::map<std::string, std::size_t>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("instance: ") + e.what());
  }
  return s;
}

InstanceSpec read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string dump_instance(const InstanceSpec& s) {
  json j;
  j["elements"] = s.elements;
  json covers = json::array();
  for (const auto& [a, b] : s.covers) covers.push_back({a, b});
  j["covers"] = covers;
  j["n"] = s.n;
  j["A"] = s.A;
  j["ideal"]["type"] = s.ideal_type;
  if (s.ideal_type != "full") j["ideal"]["maps"] = s.maps;
  if (!s.guards.empty()) j["guards"] = s.guards;
  return j.dump(2) + "\n";
}

std::vector<int> Instance::to_input_order(const IsotoneMap& f) const {
  const auto& order = space().poset.input_order();
  std::vector<int> out(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) out[p] = f[order[p]];
  return out;
}

Instance load_instance(const InstanceSpec& spec, Guards guards) {
  for (const auto& [name, value] : spec.guards) guards.set(name, value);
  Poset poset = Poset::from_covers(spec.elements, spec.covers, guards.poset_elements);
  if (spec.n < 1) throw InputError("instance: n must be positive");

  AlphabetMap alphabet;
  alphabet.n = spec.n;
  alphabet.sets.resize(poset.size());
  for (const auto& [name, letters] : spec.A)
    if (!poset.index_of(name)) throw InputError("instance: A names unknown element " + name);
  for (std::size_t p = 0; p < spec.elements.size(); ++p) {
    auto it = spec.A.find(spec.elements[p]);
    if (it == spec.A.end()) throw InputError("instance: A has no letters for element " + spec.elements[p]);
    std::vector<int> set = it->second;
    std::sort(set.begin(), set.end());
    if (set.empty()) throw InputError("instance: A_" + spec.elements[p] + " is empty");
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
      throw InputError("instance: A_" + spec.elements[p] + " repeats a letter");
    if (set.front() < 1 || set.back() > spec.n)
      throw InputError("instance: A_" + spec.elements[p] + " is not inside [n]");
    alphabet.sets[poset.input_order()[p]] = std::move(set);
  }

  std::vector<IsotoneMap> maps;
  for (const auto& v : spec.maps) {
    if (v.size() != poset.size()) throw InputError("instance: a map has the wrong number of values");
    IsotoneMap f;
    f.values.resize(v.size());
    for (std::size_t p = 0; p < v.size(); ++p) f.values[poset.input_order()[p]] = v[p];
    maps.push_back(std::move(f));
  }

  // The ideal is built before the aggregate: g++ 11 leaks already-copied
  // aggregate members when a later initializer throws.
  auto space = make_space(std::move(poset), std::move(alphabet));
  auto ideal = [&] {
    if (spec.ideal_type == "full") {
      if (!spec.maps.empty()) throw InputError("instance: a full ideal takes no maps");
      return PosetIdeal::full(space, guards.hom_maps);
    }
    if (spec.ideal_type == "generators") return PosetIdeal::from_generators(space, maps, guards.hom_maps);
    if (spec.ideal_type == "explicit") {
      std::sort(maps.begin(), maps.end());
      return PosetIdeal::explicit_members(space, std::move(maps));
    }
    throw InputError("instance: unknown ideal type \"" + spec.ideal_type + "\"");
  }();
  return Instance{spec, guards, std::move(ideal)};
}

namespace {

// Uniform on [lo, hi], identical on every standard library.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t range = hi - lo + 1;
  if (range == 0) return rng();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + x % range;
}

}  // namespace

InstanceSpec random_instance(std::uint64_t seed, const RandomBounds& bounds) {
  if (bounds.m_max < 1 || bounds.n_max < 1 || bounds.ideal_max < 1) throw InputError("random: bounds must be positive");
  if (bounds.m_max > 8 || bounds.n_max > 10) throw InputError("random: bounds too large (m <= 8, n <= 10)");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    InstanceSpec s;
    // Larger of two draws: small cases stay possible but stop dominating.
    const auto m = static_cast<std::size_t>(std::max(draw(rng, 1, bounds.m_max), draw(rng, 1, bounds.m_max)));
    const auto n_max = static_cast<std::uint64_t>(bounds.n_max);
    s.n = static_cast<int>(std::max(draw(rng, 1, n_max), draw(rng, 1, n_max)));

    // Hidden order e1 < ... < em; relations only go upward in it.
    std::vector<std::string> hidden;
    for (std::size_t i = 0; i < m; ++i) hidden.push_back("e" + std::to_string(i + 1));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (draw(rng, 0, 2) == 0) s.covers.emplace_back(hidden[i], hidden[j]);
    s.elements = hidden;
    for (std::size_t i = m; i > 1; --i) std::swap(s.elements[i - 1], s.elements[draw(rng, 0, i - 1)]);

    // Each letter kept with probability 2/3; an empty draw falls back to one letter.
    for (const auto& e : hidden) {
      std::vector<int> set;
      for (int a = 1; a <= s.n; ++a)
        if (draw(rng, 0, 2) != 0) set.push_back(a);
      if (set.empty()) set.push_back(static_cast<int>(draw(rng, 1, static_cast<std::uint64_t>(s.n))));
      s.A[e] = set;
    }

    const auto kind = draw(rng, 0, 2);
    std::optional<Instance> probe;
    try {
      probe = load_instance(s);  // the full ideal
    } catch (const InputError&) {
      continue;  // empty Hom(P, A) carries no poset ideal
    }
    const auto& hom = probe->ideal.members();
    if (kind == 0) {
      if (hom.size() <= bounds.ideal_max) return s;
      continue;
    }
    // Generators come from the upper half by value sum so the ideals are not all tiny.
    std::vector<std::size_t> by_height(hom.size());
    for (std::size_t i = 0; i < hom.size(); ++i) by_height[i] = i;
    auto height = [&](std::size_t i) {
      int h = 0;
      for (int v : hom[i].values) h += v;
      return h;
    };
    std::stable_sort(by_height.begin(), by_height.end(),
                     [&](std::size_t a, std::size_t b) { return height(a) > height(b); });
    const auto gens = draw(rng, 1, 3);
    std::vector<IsotoneMap> chosen;
    for (std::uint64_t g = 0; g < gens; ++g)
      chosen.push_back(hom[by_height[draw(rng, 0, (hom.size() - 1) / 2)]]);
    const auto ideal = PosetIdeal::from_generators(probe->ideal.space_ptr(), chosen);
    if (ideal.size() > bounds.ideal_max) continue;
    s.ideal_type = kind == 1 ? "generators" : "explicit";
    const auto listed = kind == 1 ? ideal.maximal_elements() : ideal.members();
    for (const auto& f : listed) s.maps.push_back(probe->to_input_order(f));
    return s;
  }
  throw InputError("random: no instance within bounds after 10000 attempts");
}

}  // namespace colp
