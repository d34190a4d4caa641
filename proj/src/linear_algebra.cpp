#include "colp/linear_algebra.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>

#include "colp/error.hpp"

namespace colp {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct RationalOps {
  using T = mpq_class;
  T from(long long v) const { return T(static_cast<long>(v)); }
  bool zero(const T& x) const { return sgn(x) == 0; }
  T inv(const T& x) const { return T(1) / x; }
  T mul(const T& a, const T& b) const { return a * b; }
  T sub(const T& a, const T& b) const { return a - b; }
};

struct PrimeOps {
  using T = std::uint64_t;
  std::uint64_t p;
  T from(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<T>(r < 0 ? r + static_cast<long long>(p) : r);
  }
  bool zero(T x) const { return x == 0; }
  T mul(T a, T b) const { return static_cast<T>((static_cast<unsigned __int128>(a) * b) % p); }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T inv(T x) const {
    T r = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
};

// Incremental sparse row echelon form. Each pivot row is normalized to a
// leading 1; a new row is reduced against existing pivots until it either
// vanishes or introduces a new pivot column.
template <class Ops>
std::size_t sparse_rank(const SparseMatrix& m, const Ops& ops) {
  using T = typename Ops::T;
  using Row = std::vector<std::pair<std::size_t, T>>;
  std::map<std::size_t, Row> pivots;

  auto rows = m.normalized_rows();
  // Short rows first keeps fill-in low.
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

  for (const auto& src : rows) {
    Row r;
    r.reserve(src.size());
    for (const auto& [c, v] : src) {
      T x = ops.from(v);
      if (!ops.zero(x)) r.emplace_back(c, std::move(x));
    }
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        T s = ops.inv(r.front().second);
        for (auto& e : r) e.second = ops.mul(e.second, s);
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      const Row& p = it->second;
      T factor = r.front().second;
      Row out;
      out.reserve(r.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
          out.push_back(std::move(r[i++]));
        } else if (i == r.size() || p[j].first < r[i].first) {
          T x = ops.sub(ops.from(0), ops.mul(factor, p[j].second));
          out.emplace_back(p[j].first, std::move(x));
          ++j;
        } else {
          T x = ops.sub(r[i].second, ops.mul(factor, p[j].second));
          if (!ops.zero(x)) out.emplace_back(r[i].first, std::move(x));
          ++i;
          ++j;
        }
      }
      r = std::move(out);
    }
  }
  return pivots.size();
}

}  // namespace

FieldChoice FieldChoice::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 62)) throw InputError("field characteristic too large");
  FieldChoice f;
  f.kind = Kind::Prime;
  f.p = p;
  return f;
}

FieldChoice FieldChoice::parse(const std::string& spec) {
  if (spec == "rat") return rational();
  if (spec.rfind("gfp:", 0) == 0) {
    const std::string num = spec.substr(4);
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError("bad field '" + spec + "'");
    return prime(std::stoull(num));
  }
  throw InputError("bad field '" + spec + "' (expected rat or gfp:<p>)");
}

std::string FieldChoice::to_string() const {
  return kind == Kind::Rational ? "rat" : "gfp:" + std::to_string(p);
}

SparseMatrix SparseMatrix::dense(const std::vector<std::vector<long long>>& m) {
  SparseMatrix s(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != s.cols_) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < m[r].size(); ++c)
      if (m[r][c] != 0) s.add(r, c, m[r][c]);
  }
  return s;
}

void SparseMatrix::add(std::size_t r, std::size_t c, long long v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  data_[r].emplace_back(c, v);
}

std::vector<std::vector<std::pair<std::size_t, long long>>> SparseMatrix::normalized_rows() const {
  std::vector<std::vector<std::pair<std::size_t, long long>>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto row = data_[r];
    std::sort(row.begin(), row.end());
    for (const auto& [c, v] : row) {
      if (!out[r].empty() && out[r].back().first == c)
        out[r].back().second += v;
      else
        out[r].emplace_back(c, v);
    }
    out[r].erase(std::remove_if(out[r].begin(), out[r].end(), [](const auto& e) { return e.second == 0; }),
                 out[r].end());
  }
  return out;
}

std::size_t exact_rank(const SparseMatrix& m, FieldChoice field) {
  if (field.kind == FieldChoice::Kind::Rational) return sparse_rank(m, RationalOps{});
  return sparse_rank(m, PrimeOps{field.p});
}

std::size_t exact_rank(const std::vector<std::vector<long long>>& m, FieldChoice field) {
  return exact_rank(SparseMatrix::dense(m), field);
}

std::vector<std::size_t> chain_ranks(const std::vector<SparseMatrix>& maps, const std::vector<std::size_t>& dims,
                                     std::size_t r0, FieldChoice field) {
  const std::size_t K = maps.size();
  if (dims.size() != K + 1) throw std::invalid_argument("chain_ranks: need one dimension per position");
  std::vector<std::size_t> r(K + 2, 0);
  r[0] = r0;
  const FieldChoice screen = field.kind == FieldChoice::Kind::Rational ? FieldChoice{FieldChoice::Kind::Prime, 2305843009213693951ULL} : field;
  for (std::size_t k = 1; k <= K; ++k) r[k] = exact_rank(maps[k - 1], screen);
  if (field.kind != FieldChoice::Kind::Rational) return r;

  std::vector<char> pinned(K + 2, 0);
  pinned[0] = pinned[K + 1] = 1;
  for (std::size_t k = 0; k <= K; ++k)
    if (r[k] + r[k + 1] == dims[k]) pinned[k] = pinned[k + 1] = 1;
  for (std::size_t k = 1; k <= K; ++k)
    if (!pinned[k]) r[k] = exact_rank(maps[k - 1], field);
  return r;
}

}  // namespace colp
