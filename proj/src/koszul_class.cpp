#include "koszul/koszul_class.hpp"

#include "koszul/errors.hpp"

namespace koszul {

void KoszulClass::add(const Subset& s, int v, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(s.size()) != p)
    throw InputError("wedge size differs from class grading");
  if (v < 0 || v >= value_dim) throw InputError("value index out of range");
  auto key = std::make_pair(s, v);
  auto it = coeffs.find(key);
  if (it == coeffs.end()) {
    coeffs.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

Vec KoszulClass::to_vec() const {
  Vec out = zero_vec(binom(ambient_dim, p) * value_dim);
  for (const auto& [key, c] : coeffs) {
    out[subset_rank(key.first, ambient_dim) * value_dim + key.second] = c;
  }
  return out;
}

KoszulClass KoszulClass::from_vec(int p, int ambient, int value, const Vec& x) {
  KoszulClass c(p, ambient, value);
  if (x.size() != binom(ambient, p) * static_cast<std::uint64_t>(value))
    throw InputError("vector length differs from Λ^p V ⊗ V1");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Subset s = subset_unrank(i / value, ambient, p);
    c.coeffs.emplace(std::make_pair(std::move(s), static_cast<int>(i % value)),
                     x[i]);
  }
  return c;
}

KoszulClass add_scaled(const KoszulClass& a, const KoszulClass& b, const Rat& f) {
  if (a.p != b.p || a.ambient_dim != b.ambient_dim || a.value_dim != b.value_dim)
    throw InputError("class shapes differ");
  KoszulClass out = a;
  for (const auto& [key, c] : b.coeffs) out.add(key.first, key.second, f * c);
  return out;
}

}  // namespace koszul
