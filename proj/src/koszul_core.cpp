#include "koszul/koszul_core.hpp"

#include "koszul/errors.hpp"
#include "koszul/models.hpp"
#include "koszul/skew_map.hpp"

namespace koszul {

namespace {

// Representatives of the quotient: kernel vectors that enlarge the boundary
// span, reduced against it. Leading coefficients normalized to 1.
std::vector<Vec> quotient_reps(const std::vector<Vec>& kernel,
                               const EchelonBasis& boundary) {
  EchelonBasis combined = boundary;
  std::vector<Vec> reps;
  for (const auto& v : kernel) {
    if (!combined.insert(v)) continue;
    Vec r = boundary.reduce(v);
    for (const auto& x : r) {
      if (x != 0) {
        Rat inv = Rat(1) / x;
        for (auto& y : r) y *= inv;
        break;
      }
    }
    reps.push_back(std::move(r));
  }
  return reps;
}

EchelonBasis column_span(const SparseMat& m) {
  SparseMat t = m.transpose();
  EchelonBasis eb(m.nrows());
  for (int c = 0; c < t.nrows(); ++c) {
    Vec col = zero_vec(m.nrows());
    for (const auto& [r, v] : t.row(c)) col[r] = v;
    eb.insert(col);
  }
  return eb;
}

}  // namespace

KoszulGroupReport compute_K_p1(const MultTable& mult, int p) {
  if (p < 1 || p + 1 > mult.dim1)
    throw PreconditionError("compute_K_p1 needs 1 <= p <= dim V - 1");
  auto delta = cached_differential(p, mult);
  auto restr = cached_restriction(p, mult);
  std::vector<Vec> kernel = kernel_basis(*delta);
  EchelonBasis boundary = column_span(*restr);

  KoszulGroupReport rep;
  rep.p = p;
  rep.kernel_dim = static_cast<int>(kernel.size());
  rep.boundary_dim = boundary.dim();
  rep.dim = rep.kernel_dim - rep.boundary_dim;
  for (auto& v : quotient_reps(kernel, boundary))
    rep.cycle_basis.push_back(
        KoszulClass::from_vec(p, mult.dim1, mult.dim1, v));
  return rep;
}

KoszulGroupReport compute_K_p1_subspace(const MultTable& mult, int p,
                                        const std::vector<Vec>& W) {
  EchelonBasis wspan(mult.dim1);
  for (const auto& w : W) {
    if (static_cast<int>(w.size()) != mult.dim1)
      throw InputError("subspace vector has wrong dimension");
    if (!wspan.insert(w)) throw PreconditionError("dependent subspace basis");
  }
  const int w = static_cast<int>(W.size());
  if (p < 1 || p + 1 > w)
    throw PreconditionError("compute_K_p1_subspace needs 1 <= p <= dim W - 1");

  // pairing W ⊗ V1 -> V2 through the ambient multiplication
  BilinearTable WM(w, mult.dim1, mult.dim2);
  for (int i = 0; i < w; ++i)
    for (int s = 0; s < mult.dim1; ++s) {
      Vec es = zero_vec(mult.dim1);
      es[s] = 1;
      WM.val[i][s] = mult.product_vec(W[i], es);
    }
  // inclusion pairing W ⊗ k -> V1 used for the boundary map
  BilinearTable WI(w, 1, mult.dim1);
  for (int i = 0; i < w; ++i) WI.val[i][0] = W[i];

  SparseMat delta = mixed_differential(p, w, WM);
  SparseMat bmat = mixed_differential(p + 1, w, WI);
  std::vector<Vec> kernel = kernel_basis(delta);
  EchelonBasis boundary = column_span(bmat);

  KoszulGroupReport rep;
  rep.p = p;
  rep.kernel_dim = static_cast<int>(kernel.size());
  rep.boundary_dim = boundary.dim();
  rep.dim = rep.kernel_dim - rep.boundary_dim;

  // expand representatives from Λ^p W ⊗ V1 into ambient V coordinates
  auto wsubs = subsets_lex(w, p);
  for (auto& v : quotient_reps(kernel, boundary)) {
    KoszulClass c(p, mult.dim1, mult.dim1);
    for (std::uint64_t t = 0; t < wsubs.size(); ++t) {
      std::vector<Vec> vecs;
      for (int i : wsubs[t]) vecs.push_back(W[i]);
      Vec wexp = wedge_expand(vecs, mult.dim1);
      for (int s = 0; s < mult.dim1; ++s) {
        Rat coeff = v[t * mult.dim1 + s];
        if (coeff == 0) continue;
        for (std::uint64_t r = 0; r < wexp.size(); ++r)
          if (wexp[r] != 0)
            c.add(subset_unrank(r, mult.dim1, p), s, coeff * wexp[r]);
      }
    }
    rep.cycle_basis.push_back(std::move(c));
  }
  return rep;
}

KoszulGroupReport compute_K_p1_mixed(int w, const BilinearTable& WA,
                                     const BilinearTable& WM, int p) {
  if (p < 0) throw PreconditionError("mixed group needs p >= 0");
  if (WA.dimA != w || (p >= 1 && (WM.dimA != w || WA.dimT != WM.dimB)))
    throw InputError("inconsistent pairing dimensions");
  const int dM = (p == 0) ? WA.dimT : WM.dimB;

  KoszulGroupReport rep;
  rep.p = p;

  SparseMat bmat = mixed_differential(p + 1, w, WA);
  if (p == 0) {
    rep.kernel_dim = dM;
    EchelonBasis boundary = column_span(bmat);
    rep.boundary_dim = boundary.dim();
    rep.dim = rep.kernel_dim - rep.boundary_dim;
    std::vector<Vec> kernel;
    for (int s = 0; s < dM; ++s) {
      Vec e = zero_vec(dM);
      e[s] = 1;
      kernel.push_back(std::move(e));
    }
    for (auto& v : quotient_reps(kernel, boundary))
      rep.cycle_basis.push_back(KoszulClass::from_vec(0, w, dM, v));
    return rep;
  }

  SparseMat delta = mixed_differential(p, w, WM);
  // the two pairings must assemble into a complex
  SparseMat bt = bmat.transpose();
  for (int c = 0; c < bt.nrows(); ++c) {
    Vec col = zero_vec(bmat.nrows());
    for (const auto& [r, v] : bt.row(c)) col[r] = v;
    if (!is_zero_vec(delta.apply(col)))
      throw InputError("pairings do not compose to zero");
  }

  std::vector<Vec> kernel = kernel_basis(delta);
  EchelonBasis boundary = column_span(bmat);
  rep.kernel_dim = static_cast<int>(kernel.size());
  rep.boundary_dim = boundary.dim();
  rep.dim = rep.kernel_dim - rep.boundary_dim;
  for (auto& v : quotient_reps(kernel, boundary))
    rep.cycle_basis.push_back(KoszulClass::from_vec(p, w, dM, v));
  return rep;
}

bool is_nonzero_class(const MultTable& mult, const KoszulClass& c) {
  if (!is_cycle(mult, c))
    throw PreconditionError(
        "representative is not annihilated by the Koszul differential");
  if (c.is_zero()) return false;
  if (c.p + 1 > mult.dim1) return true;  // no coboundaries at top degree
  auto restr = cached_restriction(c.p, mult);
  return !solve(*restr, c.to_vec()).has_value();
}

Vec symmetrize_p1(const KoszulClass& c) {
  if (c.p != 1) throw PreconditionError("symmetrization needs p = 1");
  Vec out = zero_vec(sym_dim(c.value_dim));
  for (const auto& [key, coeff] : c.coeffs)
    out[sym_index(key.first[0], key.second, c.value_dim)] += coeff;
  return out;
}

namespace {

// Try to move the representative into Λ^p W' ⊗ V1 for the subspace W'
// spanned by the given rows, modulo coboundaries. Returns the new
// representative on success.
std::optional<KoszulClass> reduce_into(const MultTable& mult,
                                       const KoszulClass& c,
                                       const std::vector<Vec>& Wp) {
  const int n = mult.dim1, p = c.p;
  auto restr = cached_restriction(p, mult);
  std::vector<Vec> cols;
  SparseMat rt = restr->transpose();
  for (int j = 0; j < rt.nrows(); ++j) {
    Vec col = zero_vec(restr->nrows());
    for (const auto& [r, v] : rt.row(j)) col[r] = v;
    cols.push_back(std::move(col));
  }
  const std::size_t n_bound = cols.size();
  auto tsubs = subsets_lex(static_cast<int>(Wp.size()), p);
  for (const auto& T : tsubs) {
    std::vector<Vec> vecs;
    for (int i : T) vecs.push_back(Wp[i]);
    Vec wexp = wedge_expand(vecs, n);
    for (int s = 0; s < n; ++s) {
      Vec col = zero_vec(restr->nrows());
      for (std::uint64_t r = 0; r < wexp.size(); ++r)
        if (wexp[r] != 0) col[r * n + s] = wexp[r];
      cols.push_back(std::move(col));
    }
  }
  SparseMat sys = SparseMat::from_columns(restr->nrows(), cols);
  auto sol = solve(sys, c.to_vec());
  if (!sol) return std::nullopt;
  // the W'-part of the solution is the new representative
  Vec rep = zero_vec(restr->nrows());
  for (std::size_t j = n_bound; j < cols.size(); ++j)
    if ((*sol)[j] != 0) axpy(rep, (*sol)[j], cols[j]);
  return KoszulClass::from_vec(p, n, n, rep);
}

}  // namespace

ClassRank class_rank(const MultTable& mult, const KoszulClass& c) {
  if (!is_nonzero_class(mult, c))
    throw PreconditionError("rank of the zero class");
  ClassRank out;
  if (c.p == 1) {
    QuadricForm q;
    q.n_vars = c.value_dim;
    Vec sym = symmetrize_p1(c);
    for (int a = 0; a < q.n_vars; ++a)
      for (int b = a; b < q.n_vars; ++b) {
        const Rat& v = sym[sym_index(a, b, q.n_vars)];
        if (v != 0) q.coeffs[{a, b}] = v;
      }
    out.exact = true;
    out.rank = (quadric_rank(q) + 1) / 2;
    return out;
  }
  // greedy coboundary reduction over codimension-one coordinate subspaces of
  // the support, lexicographically first improvement each round
  KoszulClass cur = c;
  std::vector<Vec> W = support(cur);
  bool improved = true;
  while (improved && static_cast<int>(W.size()) > c.p) {
    improved = false;
    for (std::size_t drop = 0; drop < W.size(); ++drop) {
      std::vector<Vec> Wp;
      for (std::size_t i = 0; i < W.size(); ++i)
        if (i != drop) Wp.push_back(W[i]);
      auto next = reduce_into(mult, cur, Wp);
      if (next && !next->is_zero()) {
        cur = std::move(*next);
        W = support(cur);
        improved = true;
        break;
      }
    }
  }
  out.exact = false;
  out.rank = static_cast<int>(W.size());
  out.certified_rep = std::move(cur);
  return out;
}

}  // namespace koszul
