#pragma once

#include <map>
#include <optional>
#include <vector>

#include "koszul/rational.hpp"

namespace koszul {

// Sparse matrix over the rationals. Rows store only nonzero entries and all
// arithmetic is exact; no stored zeros, all indices in bounds.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(int nrows, int ncols);

  int nrows() const { return nrows_; }
  int ncols() const { return ncols_; }

  Rat at(int r, int c) const;             // zero if absent
  void set(int r, int c, const Rat& v);   // erases the entry when v == 0
  void add(int r, int c, const Rat& v);
  const std::map<int, Rat>& row(int r) const;
  std::size_t nnz() const;

  Vec apply(const Vec& x) const;  // m·x, requires |x| == ncols
  SparseMat transpose() const;
  static SparseMat from_columns(int nrows, const std::vector<Vec>& cols);

 private:
  int nrows_ = 0, ncols_ = 0;
  std::vector<std::map<int, Rat>> rows_;
};

// Reduced row echelon form with its pivot columns, pivoting on the first
// nonzero entry in column order (deterministic, no magnitude heuristics).
struct Rref {
  std::vector<std::map<int, Rat>> rows;  // nonzero rows only, leading 1
  std::vector<int> pivots;               // strictly increasing
};
Rref rref_of(const SparseMat& m);

// Rank over the rationals.
int rank(const SparseMat& m);

// Basis of the right null space in reduced echelon normal form.
std::vector<Vec> kernel_basis(const SparseMat& m);

// Some x with m·x = b (free variables zero in echelon order), or nothing.
std::optional<Vec> solve(const SparseMat& m, const Vec& b);

// v in the rational span of the given vectors?
bool membership(const Vec& v, const std::vector<Vec>& span);

// Incrementally maintained reduced row echelon span of dense vectors.
class EchelonBasis {
 public:
  explicit EchelonBasis(int ambient) : ambient_(ambient) {}
  bool insert(Vec v);         // true iff v enlarged the span
  bool contains(Vec v) const;
  Vec reduce(Vec v) const;    // residue of v after row reduction
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }
  const std::map<int, Vec>& rows() const { return rows_; }  // pivot -> row

 private:
  int ambient_;
  std::map<int, Vec> rows_;
};

// The span's canonical reduced-echelon basis, as rows.
std::vector<Vec> echelon_normalize(const std::vector<Vec>& vecs);

}  // namespace koszul
