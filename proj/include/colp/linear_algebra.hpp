#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace colp {

// Coefficient field for rank computations. Rationals certify; GF(p) is a
// faster prescreen.
struct FieldChoice {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint64_t p = 32003;

  static FieldChoice rational() { return {}; }
  static FieldChoice prime(std::uint64_t p = 32003);  // throws InputError if p is not prime
  static FieldChoice parse(const std::string& spec);  // "rat" or "gfp:<p>"
  std::string to_string() const;

  friend bool operator==(const FieldChoice&, const FieldChoice&) = default;
};

// Integer matrix stored by rows; duplicate (row, col) entries are summed.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}
  static SparseMatrix dense(const std::vector<std::vector<long long>>& m);

  void add(std::size_t r, std::size_t c, long long v);
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  // Row entries sorted by column, zeros removed.
  std::vector<std::vector<std::pair<std::size_t, long long>>> normalized_rows() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::pair<std::size_t, long long>>> data_;
};

std::size_t exact_rank(const SparseMatrix& m, FieldChoice field = FieldChoice::rational());
std::size_t exact_rank(const std::vector<std::vector<long long>>& m, FieldChoice field = FieldChoice::rational());

// Ranks of the maps d_k : C_k -> C_{k-1} (k = 1..K, maps[k-1] = d_k, rows index
// C_k) of a complex with d d = 0. `r0` is the rank of whatever leaves C_0.
// Returns r[0..K+1] with r[0] = r0 and r[K+1] = 0.
//
// Over the rationals every map is first ranked modulo 2^61 - 1. That rank never
// exceeds the rational one, and r_k + r_{k+1} <= dim C_k over any field, so
// zero homology mod p at C_k pins both neighbouring ranks. Only maps not
// pinned that way are recomputed over Q.
std::vector<std::size_t> chain_ranks(const std::vector<SparseMatrix>& maps, const std::vector<std::size_t>& dims,
                                     std::size_t r0, FieldChoice field = FieldChoice::rational());

}  // namespace colp
