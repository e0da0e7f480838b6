#include "koszul/mult_table.hpp"

#include "koszul/errors.hpp"
#include "koszul/sparse.hpp"

namespace koszul {

const Vec& BilinearTable::value(int a, int b) const {
  if (a < 0 || a >= dimA || b < 0 || b >= dimB)
    throw InputError("pairing index out of range");
  return val[a][b];
}

Vec BilinearTable::apply(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != dimA || static_cast<int>(v.size()) != dimB)
    throw InputError("dimension mismatch in pairing");
  Vec out = zero_vec(dimT);
  for (int a = 0; a < dimA; ++a) {
    if (u[a] == 0) continue;
    for (int b = 0; b < dimB; ++b) {
      if (v[b] == 0) continue;
      axpy(out, u[a] * v[b], val[a][b]);
    }
  }
  return out;
}

SparseMat BilinearTable::flatten() const {
  SparseMat m(dimT, dimA * dimB);
  for (int a = 0; a < dimA; ++a)
    for (int b = 0; b < dimB; ++b)
      for (int t = 0; t < dimT; ++t)
        if (val[a][b][t] != 0) m.set(t, a * dimB + b, val[a][b][t]);
  return m;
}

MultTable::MultTable() : cache(std::make_shared<Cache>()) {}

MultTable::MultTable(int d1, int d2)
    : dim1(d1), dim2(d2), cache(std::make_shared<Cache>()) {}

void MultTable::set_product(int i, int j, Vec v) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= dim1 || static_cast<int>(v.size()) != dim2)
    throw InputError("product entry out of range");
  products[{i, j}] = std::move(v);
}

const Vec& MultTable::product(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = products.find({i, j});
  if (it == products.end())
    throw InputError("missing product entry in multiplication table");
  return it->second;
}

Vec MultTable::product_vec(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != dim1 || static_cast<int>(v.size()) != dim1)
    throw InputError("dimension mismatch in product");
  Vec out = zero_vec(dim2);
  for (int i = 0; i < dim1; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < dim1; ++j) {
      if (v[j] == 0) continue;
      axpy(out, u[i] * v[j], product(i, j));
    }
  }
  return out;
}

BilinearTable MultTable::as_pairing() const {
  BilinearTable t(dim1, dim1, dim2);
  for (int i = 0; i < dim1; ++i)
    for (int j = 0; j < dim1; ++j) t.val[i][j] = product(i, j);
  return t;
}

}  // namespace koszul
