#pragma once

#include <optional>
#include <vector>

#include "koszul/differential.hpp"
#include "koszul/koszul_class.hpp"
#include "koszul/mult_table.hpp"

namespace koszul {

// Result of a Koszul cohomology computation: dim = kernel_dim − boundary_dim,
// with a cycle basis whose images span the quotient, in a deterministic
// normal form (each representative reduced against the boundary space).
struct KoszulGroupReport {
  int p = 0;
  int dim = 0;
  int kernel_dim = 0;
  int boundary_dim = 0;
  std::vector<KoszulClass> cycle_basis;
};

// K_{p,1}(X,L) = ker(Λ^p V⊗V1 -> Λ^{p-1}V⊗V2) / im(Λ^{p+1}V -> Λ^p V⊗V1).
KoszulGroupReport compute_K_p1(const MultTable& mult, int p);

// Same with the wedge factor restricted to a subspace W ⊆ V1 (its vectors in
// V1 coordinates): cycles in Λ^p W ⊗ V1, boundaries from Λ^{p+1} W. The
// report's classes are expanded back into ambient V coordinates.
KoszulGroupReport compute_K_p1_subspace(const MultTable& mult, int p,
                                        const std::vector<Vec>& W);

// Middle cohomology of Λ^{p+1}W⊗A -> Λ^p W⊗M -> Λ^{p-1}W⊗T for explicit
// pairings W⊗A -> M and W⊗M -> T. For p = 0 the outgoing map is absent and
// the result is the cokernel dimension of the flattened first pairing.
// Classes are reported in W-wedge coordinates (ambient_dim = w).
KoszulGroupReport compute_K_p1_mixed(int w, const BilinearTable& WA,
                                     const BilinearTable& WM, int p);

// True iff the cycle c is not a coboundary. Throws PreconditionError when c
// is not annihilated by the differential (ill-formed input).
bool is_nonzero_class(const MultTable& mult, const KoszulClass& c);

// Rank of a Koszul class. For p = 1 the rank is exact:
// ceil(rank(symmetrization)/2), invariant under coboundaries. For p >= 2 a
// certified upper bound from greedy coboundary reduction of the support.
struct ClassRank {
  bool exact = false;
  int rank = 0;
  std::optional<KoszulClass> certified_rep;  // p >= 2 only
};
ClassRank class_rank(const MultTable& mult, const KoszulClass& c);

// Symmetrization of a p = 1 representative as a quadratic form coefficient
// vector in S²V1 (the coboundary-invariant of the class).
Vec symmetrize_p1(const KoszulClass& c);

}  // namespace koszul
