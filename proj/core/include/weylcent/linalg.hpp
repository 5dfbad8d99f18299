#pragma once

#include <cstdint>
#include <vector>

#include "weylcent/fp.hpp"
#include "weylcent/weyl.hpp"

namespace weylcent {

// Dense matrix over F_p with exact Gaussian elimination. Row and column
// order is fixed by the caller, so results are deterministic.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, Prime p)
      : rows_(rows), cols_(cols), p_(p.value()), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return p_; }

  std::uint64_t get(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t v) { a_[r * cols_ + c] = v % p_; }

  // In-place reduced row echelon form; returns the pivot columns in order.
  std::vector<std::size_t> rref();

  // Canonical basis of the null space {v : Mv = 0}, one vector per free
  // column, in ascending free-column order.
  std::vector<std::vector<std::uint64_t>> kernel() const;

 private:
  std::size_t rows_, cols_;
  std::uint64_t p_;
  std::vector<std::uint64_t> a_;
};

// Reduced echelon set of sparse F_p Weyl elements. Leading monomial of a row
// is its graded-lex greatest monomial; rows are monic, mutually reduced, and
// kept sorted by leading monomial. The reduced form of a subspace is unique,
// so bases produced this way are canonical.
class FpEchelon {
 public:
  FpEchelon(int nvars, Prime p) : nvars_(nvars), p_(p) {}

  // Reduces v against the rows; the residue is zero iff v is in the span.
  WeylFp reduce(WeylFp v) const;

  bool contains(const WeylFp& v) const { return reduce(v).is_zero(); }

  // Inserts v (after reduction); returns false if v was already in the span.
  bool insert(WeylFp v);

  std::size_t rank() const { return rows_.size(); }

  // Rows in ascending leading-monomial order.
  std::vector<WeylFp> basis_ascending() const;

 private:
  int nvars_;
  Prime p_;
  std::vector<WeylFp> rows_;  // sorted by leading monomial, descending
};

}  // namespace weylcent
