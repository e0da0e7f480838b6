#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "koszul/koszul_class.hpp"
#include "koszul/models.hpp"
#include "koszul/skew_map.hpp"

namespace koszul {

// (H, d): the computational content of a rank-2 bundle E, namely a space of
// sections H ⊆ H0(E) together with the determinant map d: Λ²H -> V1. The
// multiplication table of the target model is passed alongside wherever
// products in V2 are needed.
struct DeterminantDatum {
  int H_dim = 0;
  SkewMap d;
};

// A splitting L = L1 ⊗ L2 presented by section space dimensions r_i + 1 and
// the multiplication H0(L1) ⊗ H0(L2) -> V1.
struct SplitDatum {
  int r1 = 0, r2 = 0;
  BilinearTable mult12;
};

// O(d1) ⊗ O(d2) on the line, multiplication of binary forms.
SplitDatum split_datum_rational(int d1, int d2);

// H = H0(L1) ⊕ H0(L2), d((a1,a2)∧(b1,b2)) = a1·b2 − b1·a2.
DeterminantDatum datum_from_split(const SplitDatum& s);

// Voisin's four-term relation, checked on all basis 4-tuples (equivalently,
// all 4×4 sub-Pfaffians of d vanish in V2).
bool check_four_term(const DeterminantDatum& datum, const MultTable& mult);

// γ(W,t) ∈ Λ^p W ⊗ V1 with W = d_t(U), assembled with the project sign
// convention; the cycle condition δ(γ) = 0 is asserted on the result.
KoszulClass build_voisin_class(const DeterminantDatum& datum,
                               const MultTable& mult, const Vec& t,
                               const std::vector<Vec>& U, int p);

struct GlClassResult {
  KoszulClass cls;
  int p = 0;
  Vec t;                  // section of H = H0(L1) ⊕ H0(L2)
  std::vector<Vec> U;     // the chosen complement of ker d_t
  std::vector<Vec> W;     // d_t(U), in construction order
};

// Green–Lazarsfeld class of the chosen sections; V(s1,s2) is assumed of
// codimension >= 2 (no common zeros). Fails when dim im(d_t) != r1+r2+1.
GlClassResult build_gl_class(const SplitDatum& s, const MultTable& mult,
                             int s1_index, int s2_index);
GlClassResult build_gl_class_sections(const SplitDatum& s,
                                      const MultTable& mult, const Vec& s1,
                                      const Vec& s2);

// Rational-model entry point: a common factor of the chosen sections is
// divided out of both before the construction, so the class may live on a
// model of smaller degree (returned alongside).
struct GlRationalResult {
  GlClassResult gl;
  CurveModel model;
  int d1 = 0, d2 = 0;  // degrees after removing the common factor
};
GlRationalResult build_gl_class_rational(int d1, int d2, const Vec& s1,
                                         const Vec& s2);

// Dimension of the span of the classes in K_{p,1} (modulo coboundaries).
int gl_span(const MultTable& mult, const std::vector<KoszulClass>& classes,
            int p);

// Linear functional h on U with d(u1∧u2) = h(u2)d_t(u1) − h(u1)d_t(u2) for
// all u1,u2 ∈ U, when one exists. h exists iff γ(W,t) is a coboundary from
// Λ^{p+1}W.
std::optional<Vec> split_detect(const DeterminantDatum& datum, const Vec& t,
                                const std::vector<Vec>& U, int p);

// Membership of a representative in the coboundary space from Λ^{p+1}W.
bool is_w_coboundary(const MultTable& mult, const KoszulClass& c,
                     const std::vector<Vec>& W);

// Skew (p+3)×(p+3) matrix of sections recovered from a rank p+2 class: the
// first row spans W and the lower block is the Λ²W -> V map extracted from
// the representative through Λ^p W ⊗ V ≅ Λ²W^∨ ⊗ V.
struct KSMatrix {
  SkewMap A;  // size p+3, entries in V1
  int p = 0;
};

KSMatrix ks_matrix_from_class(const KoszulClass& c);  // W = support(c)
KSMatrix ks_matrix_from_class(const KoszulClass& c, const std::vector<Vec>& W);
KoszulClass class_from_ks_matrix(const KSMatrix& ks, int ambient_dim);

// α = Σ_{i<j<k} ± a_{1,·}-wedge ⊗ Pf_{1ijk}(A) ∈ Λ^{p-1}V ⊗ V2; equals the
// Koszul differential of the class the matrix was extracted from.
std::map<std::pair<Subset, int>, Rat> ks_alpha(const KSMatrix& ks,
                                               const MultTable& mult);

struct KsConditions {
  bool first_row_independent = false;   // (i)
  bool some_pfaffian_nonzero = false;   // (ii), in the free quadric space S²V1
  bool pfaffians_vanish = false;        // (iii), images zero in V2
};
KsConditions check_ks_conditions(const KSMatrix& ks, const MultTable& mult);

// Search for independent u, v with d(u∧v) = 0: exact basis-pair scan, then
// projective enumeration over small prime fields with exact rational lifting.
// A returned witness is always exact; none_found is a search certificate.
struct GenZeroWitness {
  Vec u, v;
};
struct GenZeroCertificate {
  std::vector<int> primes_used;
  std::vector<int> primes_skipped;  // primes dividing a denominator
  long points_enumerated = 0;
  long candidates_lifted = 0;
};
using GenZeroResult = std::variant<GenZeroWitness, GenZeroCertificate>;
GenZeroResult has_generalized_zero(const DeterminantDatum& datum,
                                   const std::vector<int>& primes = {5, 7, 11});

struct PluckerReport {
  bool on_grassmannian = false;  // all 4×4 Pfaffians vanish
  bool on_linear_space = false;  // first row zero
};
PluckerReport plucker_check_numeric(const std::vector<Vec>& z);
PluckerReport plucker_check_symbolic(const SkewMap& a, const MultTable& mult);

// dim coker of the flattened multiplication map W ⊗ H0(K(−B)) -> target.
int mu_cokernel(const BilinearTable& mu);

}  // namespace koszul
