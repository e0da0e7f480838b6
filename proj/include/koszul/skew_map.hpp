#pragma once

#include <map>
#include <utility>

#include "koszul/mult_table.hpp"
#include "koszul/rational.hpp"

namespace koszul {

// Alternating map Λ²H -> V1 stored by its strictly upper triangular values;
// the value at (j,i) is the negation and the diagonal is zero. Houses the
// determinant map of a rank-2 bundle as well as matrices of linear forms.
struct SkewMap {
  int h = 0;           // source dimension
  int target_dim = 0;  // dim of V1
  std::map<std::pair<int, int>, Vec> values;  // i<j, nonzero vectors only

  SkewMap() = default;
  SkewMap(int h_, int target) : h(h_), target_dim(target) {}

  void set(int i, int j, Vec v);  // any i != j; stores the i<j normal form
  Vec value(int i, int j) const;  // alternating access, zero on the diagonal
  Vec apply(const Vec& u, const Vec& v) const;  // d(u∧v)
};

// Pf_{ijkl} = a_ij·a_kl − a_ik·a_jl + a_il·a_jk with products taken through
// the multiplication table (value in V2). Requires i<j<k<l.
Vec pfaffian4(const SkewMap& a, const MultTable& mult, int i, int j, int k,
              int l);

// The same Pfaffian as a formal quadratic expression in S²V1, i.e. before
// multiplying into V2.
Vec pfaffian4_sym(const SkewMap& a, int i, int j, int k, int l);

// Coordinates on S²V1: basis e_a ⊙ e_b for a <= b, ranked by (a,b) lex.
int sym_dim(int n);
int sym_index(int a, int b, int n);
Vec sym_product(const Vec& u, const Vec& v);

}  // namespace koszul
