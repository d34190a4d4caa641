#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colp/error.hpp"

namespace colp {

// A finite poset whose elements are labeled p_1..p_m along a linear extension:
// leq(i, j) with i != j implies i < j. Indices are 0-based.
class Poset {
 public:
  Poset() = default;

  // Builds the transitive closure of `covers` and relabels the elements by a
  // stable topological sort (ties broken by input order).
  static Poset from_covers(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& covers,
                           std::size_t cap = default_guards().poset_elements);

  static Poset chain(std::size_t m);
  static Poset antichain(std::size_t m);

  std::size_t size() const noexcept { return names_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  // input_position -> label index, as computed by from_covers.
  const std::vector<std::size_t>& input_order() const noexcept { return input_to_index_; }

  // Indices j < i with p_j < p_i.
  std::vector<std::size_t> strictly_below(std::size_t i) const;

  // Reflexive, antisymmetric, transitive, and a linear extension.
  bool is_valid() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<std::size_t> input_to_index_;
};

// P x [k], the poset with elements p_{i,j} ordered componentwise. Elements are
// named "<name>.<j>" with j 1-based.
struct ProductPoset {
  Poset poset;
  std::size_t base_size = 0;
  std::size_t k = 0;
  // index_of_pair[i * k + j] = label of p_{i,j} in `poset` (0-based i, j).
  std::vector<std::size_t> index_of_pair;
  // pair_of_index[label] = (i, j).
  std::vector<std::pair<std::size_t, std::size_t>> pair_of_index;

  std::size_t index(std::size_t i, std::size_t j) const { return index_of_pair[i * k + j]; }
};

ProductPoset product_with_chain(const Poset& base, std::size_t k,
                                std::size_t cap = default_guards().poset_elements);

}  // namespace colp
