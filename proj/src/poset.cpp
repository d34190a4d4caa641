#include "colp/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace colp {

void Guards::set(const std::string& name, std::size_t value) {
  auto m = as_map();
  if (!m.count(name)) throw InputError("unknown guard '" + name + "'");
  if (name == "poset_elements") poset_elements = value;
  else if (name == "hom_maps") hom_maps = value;
  else if (name == "basis") basis = value;
  else if (name == "chains") chains = value;
  else if (name == "hilbert_inclusion_exclusion") hilbert_inclusion_exclusion = value;
  else if (name == "hilbert_generators") hilbert_generators = value;
  else if (name == "taylor_generators") taylor_generators = value;
  else if (name == "koszul_vertices") koszul_vertices = value;
  else if (name == "faces") faces = value;
  else if (name == "bijection_variables") bijection_variables = value;
  else if (name == "strands") strands = value;
}

std::map<std::string, std::size_t> Guards::as_map() const {
  return {{"poset_elements", poset_elements},
          {"hom_maps", hom_maps},
          {"basis", basis},
          {"chains", chains},
          {"hilbert_inclusion_exclusion", hilbert_inclusion_exclusion},
          {"hilbert_generators", hilbert_generators},
          {"taylor_generators", taylor_generators},
          {"koszul_vertices", koszul_vertices},
          {"faces", faces},
          {"bijection_variables", bijection_variables},
          {"strands", strands}};
}

Poset Poset::from_covers(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers,
                         std::size_t cap) {
  const std::size_t m = elements.size();
  check_guard(m <= cap, "poset_elements", cap);

  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) {
    if (!pos.emplace(elements[i], i).second)
      throw InputError("duplicate element identifier '" + elements[i] + "'");
  }

  std::vector<std::set<std::size_t>> succ(m);
  std::vector<std::size_t> indeg(m, 0);
  for (const auto& [a, b] : covers) {
    auto ia = pos.find(a), ib = pos.find(b);
    if (ia == pos.end() || ib == pos.end())
      throw InputError("cover (" + a + ", " + b + ") references an undeclared element");
    if (ia->second == ib->second) continue;  // reflexive pairs carry no information
    if (succ[ia->second].insert(ib->second).second) ++indeg[ib->second];
  }

  // Kahn's algorithm, always taking the available element earliest in input order.
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < m; ++i)
    if (indeg[i] == 0) ready.insert(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (std::size_t w : succ[v])
      if (--indeg[w] == 0) ready.insert(w);
  }
  if (order.size() != m) throw InputError("not a partial order: the cover relation has a cycle");

  Poset p;
  p.input_to_index_.assign(m, 0);
  for (std::size_t idx = 0; idx < m; ++idx) p.input_to_index_[order[idx]] = idx;
  p.names_.resize(m);
  for (std::size_t i = 0; i < m; ++i) p.names_[p.input_to_index_[i]] = elements[i];

  p.leq_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) p.leq_[i * m + i] = 1;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b : succ[a]) p.leq_[p.input_to_index_[a] * m + p.input_to_index_[b]] = 1;
  // Labels are topologically sorted, so a single backwards sweep closes the relation.
  for (std::size_t i = m; i-- > 0;)
    for (std::size_t j = i + 1; j < m; ++j)
      if (p.leq_[i * m + j])
        for (std::size_t l = j + 1; l < m; ++l)
          if (p.leq_[j * m + l]) p.leq_[i * m + l] = 1;
  return p;
}

Poset Poset::chain(std::size_t m) {
  std::vector<std::string> el;
  std::vector<std::pair<std::string, std::string>> cov;
  for (std::size_t i = 0; i < m; ++i) {
    el.push_back("p" + std::to_string(i + 1));
    if (i > 0) cov.emplace_back(el[i - 1], el[i]);
  }
  return from_covers(el, cov, std::max<std::size_t>(m, default_guards().poset_elements));
}

Poset Poset::antichain(std::size_t m) {
  std::vector<std::string> el;
  for (std::size_t i = 0; i < m; ++i) el.push_back("p" + std::to_string(i + 1));
  return from_covers(el, {}, std::max<std::size_t>(m, default_guards().poset_elements));
}

std::optional<std::size_t> Poset::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == id) return i;
  return std::nullopt;
}

std::vector<std::size_t> Poset::strictly_below(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < i; ++j)
    if (leq(j, i)) out.push_back(j);
  return out;
}

bool Poset::is_valid() const {
  const std::size_t m = size();
  if (leq_.size() != m * m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (!leq(i, i)) return false;
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) return false;
      if (i != j && leq(i, j) && j < i) return false;
      for (std::size_t l = 0; l < m; ++l)
        if (leq(i, j) && leq(j, l) && !leq(i, l)) return false;
    }
  }
  return true;
}

ProductPoset product_with_chain(const Poset& base, std::size_t k, std::size_t cap) {
  if (k == 0) throw InputError("product_with_chain: k must be positive");
  const std::size_t m = base.size();
  check_guard(m * k <= cap, "poset_elements", cap);

  std::vector<std::string> el;
  std::vector<std::pair<std::string, std::string>> cov;
  auto nm = [&](std::size_t i, std::size_t j) { return base.name(i) + "." + std::to_string(j + 1); };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) el.push_back(nm(i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (j + 1 < k) cov.emplace_back(nm(i, j), nm(i, j + 1));
      for (std::size_t l = i + 1; l < m; ++l)
        if (base.leq(i, l)) cov.emplace_back(nm(i, j), nm(l, j));
    }

  ProductPoset out;
  out.poset = Poset::from_covers(el, cov, cap);
  out.base_size = m;
  out.k = k;
  out.index_of_pair.resize(m * k);
  out.pair_of_index.resize(m * k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t idx = out.poset.input_order()[i * k + j];
      out.index_of_pair[i * k + j] = idx;
      out.pair_of_index[idx] = {i, j};
    }
  return out;
}

}  // namespace colp
