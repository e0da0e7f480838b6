#include "koszul/constructors.hpp"

#include <algorithm>

#include "koszul/differential.hpp"
#include "koszul/errors.hpp"
#include "koszul/koszul_core.hpp"
#include "koszul/sparse.hpp"

namespace koszul {

SplitDatum split_datum_rational(int d1, int d2) {
  if (d1 < 1 || d2 < 1)
    throw PreconditionError("split needs r1 >= 1 and r2 >= 1");
  SplitDatum s;
  s.r1 = d1;
  s.r2 = d2;
  s.mult12 = BilinearTable(d1 + 1, d2 + 1, d1 + d2 + 1);
  for (int i = 0; i <= d1; ++i)
    for (int j = 0; j <= d2; ++j) s.mult12.val[i][j][i + j] = 1;
  return s;
}

DeterminantDatum datum_from_split(const SplitDatum& s) {
  if (s.r1 < 1 || s.r2 < 1)
    throw PreconditionError("split needs r1 >= 1 and r2 >= 1");
  const int n1 = s.r1 + 1, n2 = s.r2 + 1;
  DeterminantDatum d;
  d.H_dim = n1 + n2;
  d.d = SkewMap(d.H_dim, s.mult12.dimT);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) d.d.set(a, n1 + b, s.mult12.value(a, b));
  return d;
}

bool check_four_term(const DeterminantDatum& datum, const MultTable& mult) {
  const int h = datum.H_dim;
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
      for (int k = j + 1; k < h; ++k)
        for (int l = k + 1; l < h; ++l)
          if (!is_zero_vec(pfaffian4(datum.d, mult, i, j, k, l))) return false;
  return true;
}

namespace {

// d_t images of U; throws unless they are independent (U ∩ ker d_t = 0).
std::vector<Vec> dt_images(const DeterminantDatum& datum, const Vec& t,
                           const std::vector<Vec>& U, int p) {
  if (p < 1) throw PreconditionError("construction needs p >= 1");
  if (static_cast<int>(U.size()) != p + 2)
    throw PreconditionError("U must have dimension p + 2");
  if (static_cast<int>(t.size()) != datum.H_dim)
    throw InputError("section has wrong dimension");
  std::vector<Vec> a1;
  EchelonBasis span(datum.d.target_dim);
  for (const auto& u : U) {
    if (static_cast<int>(u.size()) != datum.H_dim)
      throw InputError("U vector has wrong dimension");
    Vec img = datum.d.apply(t, u);
    if (!span.insert(img))
      throw PreconditionError("U meets the kernel of d_t");
    a1.push_back(std::move(img));
  }
  return a1;
}

}  // namespace

KoszulClass build_voisin_class(const DeterminantDatum& datum,
                               const MultTable& mult, const Vec& t,
                               const std::vector<Vec>& U, int p) {
  if (datum.d.target_dim != mult.dim1)
    throw InputError("datum target differs from the model");
  std::vector<Vec> a1 = dt_images(datum, t, U, p);
  const int n = mult.dim1;
  KoszulClass gamma(p, n, n);
  // γ = Σ_{i<j} (−1)^{i+j} d_t(e_2)∧…ê_i…ê_j…∧d_t(e_{p+3}) ⊗ d(e_i∧e_j),
  // with e_1 = t and U giving e_2..e_{p+3}. The signs are stated for the
  // 1-based basis of <t> ⊕ U, so 0-based U-indices i,j carry (−1)^{i+j}.
  for (int i = 0; i < p + 2; ++i) {
    for (int j = i + 1; j < p + 2; ++j) {
      Vec dij = datum.d.apply(U[i], U[j]);
      if (is_zero_vec(dij)) continue;
      Rat sign((i + j) % 2 == 0 ? 1 : -1);
      std::vector<Vec> vecs;
      for (int k = 0; k < p + 2; ++k)
        if (k != i && k != j) vecs.push_back(a1[k]);
      Vec wexp = wedge_expand(vecs, n);
      for (std::uint64_t r = 0; r < wexp.size(); ++r) {
        if (wexp[r] == 0) continue;
        Subset S = subset_unrank(r, n, p);
        for (int s = 0; s < n; ++s)
          if (dij[s] != 0) gamma.add(S, s, sign * wexp[r] * dij[s]);
      }
    }
  }
  if (!is_cycle(mult, gamma))
    throw PreconditionError("datum violates the four-term relation");
  return gamma;
}

GlClassResult build_gl_class_sections(const SplitDatum& s,
                                      const MultTable& mult, const Vec& s1,
                                      const Vec& s2) {
  if (is_zero_vec(s1) || is_zero_vec(s2))
    throw PreconditionError("chosen sections must be nonzero");
  const int n1 = s.r1 + 1, n2 = s.r2 + 1;
  if (static_cast<int>(s1.size()) != n1 || static_cast<int>(s2.size()) != n2)
    throw InputError("section coordinates have wrong dimension");
  DeterminantDatum datum = datum_from_split(s);
  Vec t = zero_vec(datum.H_dim);
  for (int i = 0; i < n1; ++i) t[i] = s1[i];
  for (int j = 0; j < n2; ++j) t[n1 + j] = s2[j];

  const int p = s.r1 + s.r2 - 1;
  // greedy complement of ker d_t: basis vectors with independent images
  GlClassResult out;
  out.p = p;
  out.t = t;
  EchelonBasis span(datum.d.target_dim);
  for (int c = 0; c < datum.H_dim; ++c) {
    Vec e = zero_vec(datum.H_dim);
    e[c] = 1;
    Vec img = datum.d.apply(t, e);
    if (span.insert(img)) {
      out.U.push_back(std::move(e));
      out.W.push_back(std::move(img));
    }
  }
  if (static_cast<int>(out.U.size()) != s.r1 + s.r2 + 1)
    throw PreconditionError(
        "dim W != r1 + r2 + 1: the chosen sections have an unhandled base "
        "locus");
  out.cls = build_voisin_class(datum, mult, t, out.U, p);
  return out;
}

GlClassResult build_gl_class(const SplitDatum& s, const MultTable& mult,
                             int s1_index, int s2_index) {
  if (s1_index < 0 || s1_index > s.r1 || s2_index < 0 || s2_index > s.r2)
    throw InputError("section index out of range");
  Vec s1 = zero_vec(s.r1 + 1), s2 = zero_vec(s.r2 + 1);
  s1[s1_index] = 1;
  s2[s2_index] = 1;
  return build_gl_class_sections(s, mult, s1, s2);
}

GlRationalResult build_gl_class_rational(int d1, int d2, const Vec& s1,
                                         const Vec& s2) {
  if (d1 < 1 || d2 < 1)
    throw PreconditionError("decomposition needs d1 >= 1 and d2 >= 1");
  if (static_cast<int>(s1.size()) != d1 + 1 ||
      static_cast<int>(s2.size()) != d2 + 1)
    throw InputError("section coordinates have wrong dimension");
  if (is_zero_vec(s1) || is_zero_vec(s2))
    throw PreconditionError("chosen sections must be nonzero");
  Vec g = binary_gcd(s1, s2);
  int b = binary_degree_of_length(g.size());
  Vec t1 = s1, t2 = s2;
  int e1 = d1, e2 = d2;
  if (b > 0) {
    // divide the common factor out of both sections; the class then lives
    // on the model of degree d1 + d2 - 2b
    auto q1 = binary_divide(s1, g), q2 = binary_divide(s2, g);
    if (!q1 || !q2) throw InputError("gcd does not divide the sections");
    t1 = *q1;
    t2 = *q2;
    e1 = d1 - b;
    e2 = d2 - b;
    if (e1 < 1 || e2 < 1)
      throw PreconditionError(
          "common factor reduces a section space below a pencil");
  }
  GlRationalResult out;
  out.d1 = e1;
  out.d2 = e2;
  out.model = CurveModel::rational(e1 + e2);
  SplitDatum split = split_datum_rational(e1, e2);
  out.gl = build_gl_class_sections(split, out.model.mult_table(), t1, t2);
  return out;
}

int gl_span(const MultTable& mult, const std::vector<KoszulClass>& classes,
            int p) {
  for (const auto& c : classes) {
    if (c.p != p) throw PreconditionError("classes of mixed p");
    if (!is_cycle(mult, c)) throw PreconditionError("class is not a cycle");
  }
  if (classes.empty()) return 0;
  auto restr = cached_restriction(p, mult);
  SparseMat rt = restr->transpose();
  EchelonBasis eb(restr->nrows());
  for (int c = 0; c < rt.nrows(); ++c) {
    Vec col = zero_vec(restr->nrows());
    for (const auto& [r, v] : rt.row(c)) col[r] = v;
    eb.insert(col);
  }
  int dim = 0;
  for (const auto& c : classes)
    if (eb.insert(c.to_vec())) ++dim;
  return dim;
}

std::optional<Vec> split_detect(const DeterminantDatum& datum, const Vec& t,
                                const std::vector<Vec>& U, int p) {
  std::vector<Vec> a1 = dt_images(datum, t, U, p);
  const int m = p + 2, n = datum.d.target_dim;
  // unknowns h_0..h_{p+1}; one vector equation per pair i<j
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  SparseMat sys(static_cast<int>(pairs.size()) * n, m);
  Vec rhs = zero_vec(static_cast<int>(pairs.size()) * n);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    auto [i, j] = pairs[r];
    Vec dij = datum.d.apply(U[i], U[j]);
    for (int c = 0; c < n; ++c) {
      int row = static_cast<int>(r) * n + c;
      sys.add(row, j, a1[i][c]);
      sys.add(row, i, -a1[j][c]);
      rhs[row] = dij[c];
    }
  }
  return solve(sys, rhs);
}

bool is_w_coboundary(const MultTable& mult, const KoszulClass& c,
                     const std::vector<Vec>& W) {
  const int n = mult.dim1, p = c.p;
  const int w = static_cast<int>(W.size());
  std::vector<Vec> cols;
  for (const auto& T : subsets_lex(w, p + 1)) {
    Vec col = zero_vec(binom(n, p) * n);
    for (int k = 0; k <= p; ++k) {
      std::vector<Vec> rest;
      for (int x : T)
        if (x != T[k]) rest.push_back(W[x]);
      Vec wexp = wedge_expand(rest, n);
      Rat sign(k % 2 == 0 ? 1 : -1);
      for (std::uint64_t r = 0; r < wexp.size(); ++r) {
        if (wexp[r] == 0) continue;
        for (int s = 0; s < n; ++s)
          col[r * n + s] += sign * wexp[r] * W[T[k]][s];
      }
    }
    cols.push_back(std::move(col));
  }
  return membership(c.to_vec(), cols);
}

namespace {

// Coordinates of c inside Λ^p W ⊗ V1: for each value index, solve against
// the expanded W-wedge basis. Throws when c is not supported on W.
std::vector<std::map<int, Rat>> w_coordinates(const KoszulClass& c,
                                              const std::vector<Vec>& W) {
  const int n = c.ambient_dim, p = c.p;
  const int w = static_cast<int>(W.size());
  auto tsubs = subsets_lex(w, p);
  std::vector<Vec> cols;
  for (const auto& T : tsubs) {
    std::vector<Vec> vecs;
    for (int i : T) vecs.push_back(W[i]);
    cols.push_back(wedge_expand(vecs, n));
  }
  SparseMat m = SparseMat::from_columns(static_cast<int>(binom(n, p)), cols);
  std::vector<std::map<int, Rat>> out(c.value_dim);
  for (int s = 0; s < c.value_dim; ++s) {
    Vec rhs = zero_vec(binom(n, p));
    for (const auto& [key, coeff] : c.coeffs)
      if (key.second == s) rhs[subset_rank(key.first, n)] = coeff;
    auto sol = solve(m, rhs);
    if (!sol)
      throw PreconditionError("class is not supported on the given subspace");
    for (std::uint64_t t = 0; t < tsubs.size(); ++t)
      if ((*sol)[t] != 0) out[s].emplace(static_cast<int>(t), (*sol)[t]);
  }
  return out;
}

}  // namespace

KSMatrix ks_matrix_from_class(const KoszulClass& c) {
  std::vector<Vec> W = support(c);
  if (static_cast<int>(W.size()) != c.p + 2)
    throw PreconditionError("support dimension differs from p + 2");
  return ks_matrix_from_class(c, W);
}

KSMatrix ks_matrix_from_class(const KoszulClass& c,
                              const std::vector<Vec>& W) {
  const int p = c.p, n = c.ambient_dim;
  if (static_cast<int>(W.size()) != p + 2)
    throw PreconditionError("support dimension differs from p + 2");
  EchelonBasis indep(n);
  for (const auto& w : W)
    if (!indep.insert(w)) throw PreconditionError("dependent subspace basis");
  auto coords = w_coordinates(c, W);

  KSMatrix ks;
  ks.p = p;
  ks.A = SkewMap(p + 3, n);
  for (int j = 0; j < p + 2; ++j) ks.A.set(0, j + 1, W[j]);
  // lower block through Λ^p W ⊗ V ≅ Λ²W^∨ ⊗ V: the (i,j) entry reads off
  // the coefficient at the complementary wedge, with the γ-formula sign
  auto tsubs = subsets_lex(p + 2, p);
  for (int i = 0; i < p + 2; ++i) {
    for (int j = i + 1; j < p + 2; ++j) {
      Subset comp;
      for (int k = 0; k < p + 2; ++k)
        if (k != i && k != j) comp.push_back(k);
      int t = static_cast<int>(subset_rank(comp, p + 2));
      Vec val = zero_vec(n);
      for (int s = 0; s < n; ++s) {
        auto it = coords[s].find(t);
        if (it != coords[s].end()) val[s] = it->second;
      }
      if ((i + j) % 2 != 0)
        for (auto& x : val) x = -x;
      ks.A.set(i + 1, j + 1, std::move(val));
    }
  }
  return ks;
}

KoszulClass class_from_ks_matrix(const KSMatrix& ks, int ambient_dim) {
  const int p = ks.p, n = ambient_dim;
  if (ks.A.h != p + 3) throw InputError("matrix size differs from p + 3");
  if (ks.A.target_dim != n) throw InputError("entries have wrong dimension");
  KoszulClass gamma(p, n, n);
  for (int i = 1; i < p + 3; ++i) {
    for (int j = i + 1; j < p + 3; ++j) {
      Vec aij = ks.A.value(i, j);
      if (is_zero_vec(aij)) continue;
      Rat sign((i + j) % 2 == 0 ? 1 : -1);
      std::vector<Vec> vecs;
      for (int k = 1; k < p + 3; ++k)
        if (k != i && k != j) vecs.push_back(ks.A.value(0, k));
      Vec wexp = wedge_expand(vecs, n);
      for (std::uint64_t r = 0; r < wexp.size(); ++r) {
        if (wexp[r] == 0) continue;
        Subset S = subset_unrank(r, n, p);
        for (int s = 0; s < n; ++s)
          if (aij[s] != 0) gamma.add(S, s, sign * wexp[r] * aij[s]);
      }
    }
  }
  return gamma;
}

std::map<std::pair<Subset, int>, Rat> ks_alpha(const KSMatrix& ks,
                                               const MultTable& mult) {
  const int p = ks.p, n = ks.A.target_dim;
  if (mult.dim1 != n) throw InputError("model does not match the matrix");
  std::map<std::pair<Subset, int>, Rat> alpha;
  for (int i = 1; i < p + 3; ++i) {
    for (int j = i + 1; j < p + 3; ++j) {
      for (int k = j + 1; k < p + 3; ++k) {
        Vec pf = pfaffian4(ks.A, mult, 0, i, j, k);
        if (is_zero_vec(pf)) continue;
        // (−1)^{i+j+k} on the 1-based row indices
        Rat sign((i + j + k) % 2 == 0 ? -1 : 1);
        std::vector<Vec> vecs;
        for (int m = 1; m < p + 3; ++m)
          if (m != i && m != j && m != k) vecs.push_back(ks.A.value(0, m));
        Vec wexp = wedge_expand(vecs, n);
        for (std::uint64_t r = 0; r < wexp.size(); ++r) {
          if (wexp[r] == 0) continue;
          Subset S = subset_unrank(r, n, p - 1);
          for (int t = 0; t < mult.dim2; ++t) {
            if (pf[t] == 0) continue;
            auto key = std::make_pair(S, t);
            auto it = alpha.find(key);
            if (it == alpha.end()) {
              alpha.emplace(std::move(key), sign * wexp[r] * pf[t]);
            } else {
              it->second += sign * wexp[r] * pf[t];
              if (it->second == 0) alpha.erase(it);
            }
          }
        }
      }
    }
  }
  return alpha;
}

KsConditions check_ks_conditions(const KSMatrix& ks, const MultTable& mult) {
  KsConditions out;
  const int p = ks.p;
  EchelonBasis fr(ks.A.target_dim);
  for (int j = 1; j < p + 3; ++j) fr.insert(ks.A.value(0, j));
  out.first_row_independent = fr.dim() == p + 2;
  out.some_pfaffian_nonzero = false;
  out.pfaffians_vanish = true;
  for (int i = 1; i < p + 3; ++i)
    for (int j = i + 1; j < p + 3; ++j)
      for (int k = j + 1; k < p + 3; ++k) {
        if (!is_zero_vec(pfaffian4_sym(ks.A, 0, i, j, k)))
          out.some_pfaffian_nonzero = true;
        if (!is_zero_vec(pfaffian4(ks.A, mult, 0, i, j, k)))
          out.pfaffians_vanish = false;
      }
  return out;
}

namespace {

long mod_pow(long b, long e, long q) {
  long r = 1 % q;
  b %= q;
  if (b < 0) b += q;
  while (e > 0) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

// reduction of a rational mod q; false when the denominator vanishes
bool mod_reduce(const Rat& x, long q, long& out) {
  Int num = numerator(x) % q, den = denominator(x) % q;
  if (den == 0) return false;
  long n = static_cast<long>(num), d = static_cast<long>(den);
  if (n < 0) n += q;
  out = n * mod_pow(d, q - 2, q) % q;
  return true;
}

int fq_kernel_dim(std::vector<std::vector<long>> m, int rows, int cols,
                  long q) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % q != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    long inv = mod_pow(m[rank][c], q - 2, q);
    for (int cc = c; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * inv % q;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long f = m[r][c];
      for (int cc = c; cc < cols; ++cc) {
        m[r][cc] = (m[r][cc] - f * m[rank][cc]) % q;
        if (m[r][cc] < 0) m[r][cc] += q;
      }
    }
    ++rank;
  }
  return cols - rank;
}

}  // namespace

GenZeroResult has_generalized_zero(const DeterminantDatum& datum,
                                   const std::vector<int>& primes) {
  const int h = datum.H_dim, n = datum.d.target_dim;
  // exact scan of basis pairs first
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
      if (is_zero_vec(datum.d.value(i, j))) {
        GenZeroWitness w;
        w.u = zero_vec(h);
        w.v = zero_vec(h);
        w.u[i] = 1;
        w.v[j] = 1;
        return w;
      }

  GenZeroCertificate cert;
  auto exact_kernel_at = [&](const Vec& u) -> std::optional<Vec> {
    std::vector<Vec> cols;
    for (int j = 0; j < h; ++j) {
      Vec e = zero_vec(h);
      e[j] = 1;
      cols.push_back(datum.d.apply(u, e));
    }
    auto ker = kernel_basis(SparseMat::from_columns(n, cols));
    if (ker.size() < 2) return std::nullopt;
    EchelonBasis line(h);
    line.insert(u);
    for (const auto& v : ker)
      if (!line.contains(v)) return v;
    return std::nullopt;
  };

  for (int q : primes) {
    // reduce the datum mod q
    std::map<std::pair<int, int>, std::vector<long>> dq;
    bool ok = true;
    for (const auto& [ij, val] : datum.d.values) {
      std::vector<long> v(n);
      for (int c = 0; c < n && ok; ++c) ok = mod_reduce(val[c], q, v[c]);
      if (!ok) break;
      dq[ij] = std::move(v);
    }
    if (!ok) {
      cert.primes_skipped.push_back(q);
      continue;
    }
    cert.primes_used.push_back(q);
    // projective points with leading coordinate one, in lexicographic order
    Vec u_rat = zero_vec(h);
    std::vector<long> u(h, 0);
    for (int lead = 0; lead < h; ++lead) {
      std::fill(u.begin(), u.end(), 0L);
      u[lead] = 1;
      long tail = h - 1 - lead;
      long count = 1;
      for (long i = 0; i < tail; ++i) count *= q;
      for (long idx = 0; idx < count; ++idx) {
        long rem = idx;
        for (int pos = h - 1; pos > lead; --pos) {
          u[pos] = rem % q;
          rem /= q;
        }
        ++cert.points_enumerated;
        // kernel of d(u ∧ ·) mod q
        std::vector<std::vector<long>> m(n, std::vector<long>(h, 0));
        for (const auto& [ij, val] : dq) {
          auto [a, b] = ij;
          for (int c = 0; c < n; ++c) {
            m[c][b] = (m[c][b] + u[a] * val[c]) % q;
            m[c][a] = (m[c][a] - u[b] * val[c]) % q;
            if (m[c][a] < 0) m[c][a] += q;
          }
        }
        if (fq_kernel_dim(std::move(m), n, h, q) < 2) continue;
        ++cert.candidates_lifted;
        // centered lift and exact verification
        for (int c = 0; c < h; ++c)
          u_rat[c] = Rat(u[c] > q / 2 ? u[c] - q : u[c]);
        auto v = exact_kernel_at(u_rat);
        if (v) {
          GenZeroWitness w;
          w.u = u_rat;
          w.v = *v;
          return w;
        }
      }
    }
  }
  return cert;
}

PluckerReport plucker_check_numeric(const std::vector<Vec>& z) {
  const int n = static_cast<int>(z.size());
  for (const auto& row : z)
    if (static_cast<int>(row.size()) != n)
      throw InputError("matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (z[i][i] != 0) throw InputError("matrix is not skew-symmetric");
    for (int j = i + 1; j < n; ++j)
      if (z[i][j] != -z[j][i]) throw InputError("matrix is not skew-symmetric");
  }
  PluckerReport rep;
  rep.on_grassmannian = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          if (z[i][j] * z[k][l] - z[i][k] * z[j][l] + z[i][l] * z[j][k] != 0)
            rep.on_grassmannian = false;
  rep.on_linear_space = true;
  for (int j = 1; j < n; ++j)
    if (z[0][j] != 0) rep.on_linear_space = false;
  return rep;
}

PluckerReport plucker_check_symbolic(const SkewMap& a, const MultTable& mult) {
  PluckerReport rep;
  rep.on_grassmannian = true;
  for (int i = 0; i < a.h; ++i)
    for (int j = i + 1; j < a.h; ++j)
      for (int k = j + 1; k < a.h; ++k)
        for (int l = k + 1; l < a.h; ++l)
          if (!is_zero_vec(pfaffian4(a, mult, i, j, k, l)))
            rep.on_grassmannian = false;
  rep.on_linear_space = true;
  for (int j = 1; j < a.h; ++j)
    if (!is_zero_vec(a.value(0, j))) rep.on_linear_space = false;
  return rep;
}

int mu_cokernel(const BilinearTable& mu) {
  return mu.dimT - rank(mu.flatten());
}

}  // namespace koszul
