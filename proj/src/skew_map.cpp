#include "koszul/skew_map.hpp"

#include "koszul/errors.hpp"

namespace koszul {

void SkewMap::set(int i, int j, Vec v) {
  if (i == j) throw InputError("skew map has no diagonal entries");
  if (i < 0 || j < 0 || i >= h || j >= h)
    throw InputError("skew map index out of range");
  if (static_cast<int>(v.size()) != target_dim)
    throw InputError("skew map value has wrong dimension");
  if (i > j) {
    std::swap(i, j);
    for (auto& x : v) x = -x;
  }
  if (is_zero_vec(v))
    values.erase({i, j});
  else
    values[{i, j}] = std::move(v);
}

Vec SkewMap::value(int i, int j) const {
  if (i < 0 || j < 0 || i >= h || j >= h)
    throw InputError("skew map index out of range");
  if (i == j) return zero_vec(target_dim);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = values.find({i, j});
  if (it == values.end()) return zero_vec(target_dim);
  return flip ? scaled(it->second, Rat(-1)) : it->second;
}

Vec SkewMap::apply(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != h || static_cast<int>(v.size()) != h)
    throw InputError("dimension mismatch in skew map");
  Vec out = zero_vec(target_dim);
  for (const auto& [ij, val] : values) {
    Rat c = u[ij.first] * v[ij.second] - u[ij.second] * v[ij.first];
    if (c != 0) axpy(out, c, val);
  }
  return out;
}

Vec pfaffian4(const SkewMap& a, const MultTable& mult, int i, int j, int k,
              int l) {
  if (!(i < j && j < k && k < l) || i < 0 || l >= a.h)
    throw InputError("pfaffian indices must satisfy i<j<k<l within range");
  if (mult.dim1 != a.target_dim)
    throw InputError("multiplication table does not match skew map target");
  Vec out = mult.product_vec(a.value(i, j), a.value(k, l));
  axpy(out, Rat(-1), mult.product_vec(a.value(i, k), a.value(j, l)));
  axpy(out, Rat(1), mult.product_vec(a.value(i, l), a.value(j, k)));
  return out;
}

Vec pfaffian4_sym(const SkewMap& a, int i, int j, int k, int l) {
  if (!(i < j && j < k && k < l) || i < 0 || l >= a.h)
    throw InputError("pfaffian indices must satisfy i<j<k<l within range");
  Vec out = sym_product(a.value(i, j), a.value(k, l));
  axpy(out, Rat(-1), sym_product(a.value(i, k), a.value(j, l)));
  axpy(out, Rat(1), sym_product(a.value(i, l), a.value(j, k)));
  return out;
}

int sym_dim(int n) { return n * (n + 1) / 2; }

int sym_index(int a, int b, int n) {
  if (a > b) std::swap(a, b);
  return a * n - a * (a - 1) / 2 + (b - a);
}

Vec sym_product(const Vec& u, const Vec& v) {
  int n = static_cast<int>(u.size());
  Vec out = zero_vec(sym_dim(n));
  for (int a = 0; a < n; ++a) {
    if (u[a] == 0) continue;
    for (int b = 0; b < n; ++b) {
      if (v[b] == 0) continue;
      out[sym_index(a, b, n)] += u[a] * v[b];
    }
  }
  return out;
}

}  // namespace koszul
