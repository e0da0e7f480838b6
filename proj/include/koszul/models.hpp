#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/mult_table.hpp"
#include "koszul/rational.hpp"
#include "koszul/sparse.hpp"

namespace koszul {

// Quadratic form in n variables stored by coefficients: q = Σ_{i<=j} c_ij x_i x_j.
struct QuadricForm {
  int n_vars = 0;
  std::map<std::pair<int, int>, Rat> coeffs;  // keys i <= j

  Rat coeff(int i, int j) const;
  SparseMat gram() const;  // symmetric Gram matrix (halved off-diagonal)
};

int quadric_rank(const QuadricForm& q);

// Effective divisor on the projective line: rational points with
// multiplicities plus, when the base forms do not split over Q, one
// leftover factor recorded with its coefficients.
struct Divisor1D {
  struct Point {
    Rat a, b;  // the point (a : b), i.e. the root of b·x − a·y
    int multiplicity = 1;
  };
  struct IrrationalPart {
    Vec coeffs;  // binary form coefficients, x^deg .. y^deg
    int degree = 0;
  };
  std::vector<Point> points;
  std::optional<IrrationalPart> leftover;

  int degree() const;
};

// Binary forms of degree d are coordinate vectors of length d+1 on the
// monomial basis x^d, x^{d-1}y, ..., y^d.
Vec binary_mul(const Vec& f, const Vec& g);
Vec binary_gcd(const Vec& f, const Vec& g);
std::optional<Vec> binary_divide(const Vec& f, const Vec& g);  // exact f/g
int binary_degree_of_length(std::size_t len);

// Base locus of a nonzero space of degree-d binary forms: the divisor of the
// gcd of its members. Throws PreconditionError on the zero space.
Divisor1D base_locus_rational(const std::vector<Vec>& forms);
Divisor1D divisor_of_binary_form(const Vec& g);

// Mixed three-term fixture data for the canonical-bundle computations: the
// pairings W ⊗ A -> M and W ⊗ M -> T, with A = H0 of the base divisor side.
struct MixedFixture {
  int w = 0, dimA = 0, dimM = 0, dimT = 0;
  int p = 0;
  BilinearTable WA;  // W ⊗ A -> M
  BilinearTable WM;  // W ⊗ M -> T (also the matrix of μ)
};

// A finitely presented (curve, line bundle) pair. Curves never appear as
// schemes; the model is exactly the data the Koszul computations consume.
struct CurveModel {
  enum class Kind { rational, quadric_presented };
  Kind kind = Kind::rational;

  int degree = 0;                  // rational(d)
  int n_vars = 0;                  // quadric_presented
  std::vector<QuadricForm> i2;     // basis of the quadric space through X
  std::optional<MixedFixture> canonical;  // user-supplied canonical data

  static CurveModel rational(int d);
  static CurveModel quadric_presented(int n_vars, std::vector<QuadricForm> i2);

  const MultTable& mult_table() const { return mult_; }
  int dim1() const { return mult_.dim1; }

  // quadric_presented only: image of a free quadric in the 15-choose basis
  // under the projection onto V2 = (quadrics)/span(I2).
  Vec project_quadric(const Vec& free_coeffs) const;
  const std::vector<int>& quotient_monomials() const { return quotient_mons_; }

 private:
  MultTable mult_;
  std::vector<int> quotient_mons_;      // monomial ranks spanning the quotient
  Rref i2_rref_;                        // echelonized relations
};

}  // namespace koszul
