#pragma once

#include <map>
#include <utility>

#include "koszul/rational.hpp"
#include "koszul/wedge.hpp"

namespace koszul {

// Sparse element of Λ^p V ⊗ V1: the representative tensor of a Koszul class.
// All wedge subsets have size exactly p and no zero coefficients are stored.
struct KoszulClass {
  int p = 1;
  int ambient_dim = 0;  // dim of V (first factor)
  int value_dim = 0;    // dim of V1 (second factor); equals ambient_dim for
                        // classes on a single line bundle
  std::map<std::pair<Subset, int>, Rat> coeffs;

  KoszulClass() = default;
  KoszulClass(int p_, int ambient, int value)
      : p(p_), ambient_dim(ambient), value_dim(value) {}

  void add(const Subset& s, int v, const Rat& c);
  bool is_zero() const { return coeffs.empty(); }

  // Flattening in wedge-major lexicographic order: subset_rank(S)*value_dim + v.
  Vec to_vec() const;
  static KoszulClass from_vec(int p, int ambient, int value, const Vec& x);
};

KoszulClass add_scaled(const KoszulClass& a, const KoszulClass& b, const Rat& f);

}  // namespace koszul
