#include "weylcent/linalg.hpp"

#include <algorithm>

namespace weylcent {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 invmod(u64 a, u64 p) {
  // Fermat: a^(p-2) mod p.
  u64 r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<std::size_t> FpMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && get(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != rank) {
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(a_[piv * cols_ + c], a_[rank * cols_ + c]);
    }
    const u64 inv = invmod(get(rank, col), p_);
    for (std::size_t c = col; c < cols_; ++c)
      a_[rank * cols_ + c] = mulmod(a_[rank * cols_ + c], inv, p_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      const u64 f = get(r, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < cols_; ++c) {
        u64 sub = mulmod(f, a_[rank * cols_ + c], p_);
        u64 cur = a_[r * cols_ + c];
        a_[r * cols_ + c] = cur >= sub ? cur - sub : cur + p_ - sub;
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

std::vector<std::vector<u64>> FpMatrix::kernel() const {
  FpMatrix m = *this;
  std::vector<std::size_t> pivots = m.rref();

  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<u64>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(cols_, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const u64 entry = m.get(r, f);
      if (entry != 0) v[pivots[r]] = p_ - entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

WeylFp FpEchelon::reduce(WeylFp v) const {
  // Rows are mutually reduced, so no row's leading monomial can reappear
  // after a subtraction; one pass suffices.
  for (const WeylFp& row : rows_) {
    if (v.is_zero()) break;
    FpElem c = v.coeff(row.lead_key());
    if (!c.is_zero()) v = v - row.scaled(c);
  }
  return v;
}

bool FpEchelon::insert(WeylFp v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  v = v.scaled(v.lead_coeff().inv());
  for (WeylFp& row : rows_) {
    FpElem c = row.coeff(v.lead_key());
    if (!c.is_zero()) row = row - v.scaled(c);
  }
  auto at = std::lower_bound(rows_.begin(), rows_.end(), v,
                             [](const WeylFp& a, const WeylFp& b) {
                               return graded_lex_less(b.lead_key(), a.lead_key());
                             });
  rows_.insert(at, std::move(v));
  return true;
}

std::vector<WeylFp> FpEchelon::basis_ascending() const {
  std::vector<WeylFp> out(rows_.rbegin(), rows_.rend());
  return out;
}

}  // namespace weylcent
