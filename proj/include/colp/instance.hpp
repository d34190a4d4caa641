#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "colp/hom.hpp"

namespace colp {

// An instance file as written: elements in input order, maps listed in that
// same order.
//
// {"elements": [...], "covers": [[a, b], ...], "n": 3, "A": {"a": [1, 2], ...},
//  "ideal": {"type": "full" | "generators" | "explicit", "maps": [[...], ...]},
//  "guards": {"basis": 1000, ...}}
//
// The poset fragment may also sit under a "poset" key.
struct InstanceSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  int n = 0;
  std::map<std::string, std::vector<int>> A;
  std::string ideal_type = "full";
  std::vector<std::vector<int>> maps;
  std::map<std::string, std::size_t> guards;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

InstanceSpec parse_instance(const std::string& text);  // InputError with line and column
InstanceSpec read_instance_file(const std::string& path);
std::string dump_instance(const InstanceSpec& spec);   // canonical, deterministic JSON

struct Instance {
  InstanceSpec spec;
  Guards guards;
  PosetIdeal ideal;

  const HomSpace& space() const { return ideal.space(); }
  // Label-order map -> input-order vector, for printing maps back to the user.
  std::vector<int> to_input_order(const IsotoneMap& f) const;
};

// Validates and builds P, A and the poset ideal. File guards override `base`.
Instance load_instance(const InstanceSpec& spec, Guards base = default_guards());

struct RandomBounds {
  std::size_t m_max = 4;
  int n_max = 5;
  std::size_t ideal_max = 200;
};

// Deterministic for a given seed on every platform: mt19937_64 with
// rejection-sampled bounded draws.
InstanceSpec random_instance(std::uint64_t seed, const RandomBounds& bounds = {});

}  // namespace colp
