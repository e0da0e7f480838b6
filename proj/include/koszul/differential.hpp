#pragma once

#include <map>

#include "koszul/koszul_class.hpp"
#include "koszul/mult_table.hpp"
#include "koszul/sparse.hpp"

namespace koszul {

// Sign convention, fixed project-wide: removing the k-th wedge factor
// (1-based position) carries (−1)^{k−1}.

// Matrix of δ: Λ^p V ⊗ V1 -> Λ^{p-1} V ⊗ V2 on lexicographically ordered
// wedge bases, δ(v_S ⊗ s) = Σ_k (−1)^{k−1} v_{S∖s_k} ⊗ (v_{s_k}·s).
SparseMat koszul_differential(int p, int V_dim, const MultTable& mult);

// Matrix of Λ^{p+1}V -> Λ^p V ⊗ V, whose image is the coboundary space:
// e_T ↦ Σ_k (−1)^{k−1} e_{T∖t_k} ⊗ v_{t_k}.
SparseMat koszul_restriction(int p, int V_dim);

// Cached accessors; matrices are memoized per multiplication table.
std::shared_ptr<const SparseMat> cached_differential(int p, const MultTable& mult);
std::shared_ptr<const SparseMat> cached_restriction(int p, const MultTable& mult);

// General form on Λ^k W ⊗ A -> Λ^{k-1} W ⊗ B for a pairing W ⊗ A -> B.
SparseMat mixed_differential(int k, int w_dim, const BilinearTable& pairing);

// δ applied directly to a sparse representative; keys are (wedge, V2 index).
std::map<std::pair<Subset, int>, Rat> differential_apply(const MultTable& mult,
                                                         const KoszulClass& c);
bool is_cycle(const MultTable& mult, const KoszulClass& c);

// Smallest subspace W with c ∈ Λ^p W ⊗ V1, via contractions of the first
// factor by (p−1)-fold wedges of dual basis vectors; echelon-normalized rows.
std::vector<Vec> support(const KoszulClass& c);

// Coordinates of the wedge of the given vectors in the lex wedge basis of
// Λ^k V (all k×k minors of the coefficient matrix).
Vec wedge_expand(const std::vector<Vec>& vectors, int V_dim);

}  // namespace koszul
