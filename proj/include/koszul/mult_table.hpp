#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "koszul/rational.hpp"

namespace koszul {

class SparseMat;

// Rectangular bilinear pairing A ⊗ B -> T given by the products of basis
// vectors (each a T-coordinate vector).
struct BilinearTable {
  int dimA = 0, dimB = 0, dimT = 0;
  std::vector<std::vector<Vec>> val;  // [a][b], each of length dimT

  BilinearTable() = default;
  BilinearTable(int a, int b, int t)
      : dimA(a), dimB(b), dimT(t),
        val(a, std::vector<Vec>(b, zero_vec(t))) {}

  const Vec& value(int a, int b) const;
  Vec apply(const Vec& u, const Vec& v) const;  // bilinear extension

  // Matrix of the flattened map A⊗B -> T, columns indexed a*dimB + b.
  SparseMat flatten() const;
};

// Symmetric multiplication table V1 × V1 -> V2 with named bases: the
// computational form of H0(X,L) ⊗ H0(X,L) -> H0(X,L²).
struct MultTable {
  int dim1 = 0, dim2 = 0;
  std::vector<std::string> names1, names2;
  std::map<std::pair<int, int>, Vec> products;  // keys i <= j only

  MultTable();
  MultTable(int d1, int d2);

  void set_product(int i, int j, Vec v);
  const Vec& product(int i, int j) const;            // symmetric access
  Vec product_vec(const Vec& u, const Vec& v) const;  // bilinear extension
  BilinearTable as_pairing() const;                   // V1 ⊗ V1 -> V2

  // Read-mostly memo of assembled differential matrices, shared by copies
  // of the table; writes are mutex-guarded.
  struct Cache;
  std::shared_ptr<Cache> cache;
};

struct MultTable::Cache {
  std::mutex mu;
  std::map<int, std::shared_ptr<const SparseMat>> differential;  // by p
  std::map<int, std::shared_ptr<const SparseMat>> restriction;   // by p
};

}  // namespace koszul
