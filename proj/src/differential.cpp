#include "koszul/differential.hpp"

#include "koszul/errors.hpp"

namespace koszul {

SparseMat koszul_differential(int p, int V_dim, const MultTable& mult) {
  if (p < 1) throw PreconditionError("differential needs p >= 1");
  if (V_dim != mult.dim1)
    throw InputError("V dimension differs from the multiplication table");
  const int n = V_dim;
  const int d1 = mult.dim1, d2 = mult.dim2;
  SparseMat m(static_cast<int>(binom(n, p - 1)) * d2,
              static_cast<int>(binom(n, p)) * d1);
  auto cols = subsets_lex(n, p);
  for (std::uint64_t sc = 0; sc < cols.size(); ++sc) {
    const Subset& S = cols[sc];
    for (int s = 0; s < d1; ++s) {
      int col = static_cast<int>(sc) * d1 + s;
      for (int k = 0; k < p; ++k) {
        Subset T = subset_remove(S, k);
        int sign = (k % 2 == 0) ? 1 : -1;
        std::uint64_t tr = subset_rank(T, n);
        const Vec& prod = mult.product(S[k], s);
        for (int t = 0; t < d2; ++t)
          if (prod[t] != 0)
            m.add(static_cast<int>(tr) * d2 + t, col, sign * prod[t]);
      }
    }
  }
  return m;
}

SparseMat koszul_restriction(int p, int V_dim) {
  if (p < 0 || p + 1 > V_dim)
    throw PreconditionError("restriction needs p+1 <= dim V");
  const int n = V_dim;
  SparseMat m(static_cast<int>(binom(n, p)) * n,
              static_cast<int>(binom(n, p + 1)));
  auto cols = subsets_lex(n, p + 1);
  for (std::uint64_t tc = 0; tc < cols.size(); ++tc) {
    const Subset& T = cols[tc];
    for (int k = 0; k <= p; ++k) {
      Subset S = subset_remove(T, k);
      int sign = (k % 2 == 0) ? 1 : -1;
      m.add(static_cast<int>(subset_rank(S, n)) * n + T[k],
            static_cast<int>(tc), Rat(sign));
    }
  }
  return m;
}

std::shared_ptr<const SparseMat> cached_differential(int p,
                                                     const MultTable& mult) {
  auto& cache = *mult.cache;
  std::lock_guard<std::mutex> lock(cache.mu);
  auto it = cache.differential.find(p);
  if (it != cache.differential.end()) return it->second;
  auto m = std::make_shared<const SparseMat>(
      koszul_differential(p, mult.dim1, mult));
  cache.differential.emplace(p, m);
  return m;
}

std::shared_ptr<const SparseMat> cached_restriction(int p,
                                                    const MultTable& mult) {
  auto& cache = *mult.cache;
  std::lock_guard<std::mutex> lock(cache.mu);
  auto it = cache.restriction.find(p);
  if (it != cache.restriction.end()) return it->second;
  auto m = std::make_shared<const SparseMat>(koszul_restriction(p, mult.dim1));
  cache.restriction.emplace(p, m);
  return m;
}

SparseMat mixed_differential(int k, int w_dim, const BilinearTable& pairing) {
  if (k < 1) throw PreconditionError("differential needs k >= 1");
  if (pairing.dimA != w_dim)
    throw InputError("pairing does not act on the wedge factor");
  const int dA = pairing.dimB, dT = pairing.dimT;
  SparseMat m(static_cast<int>(binom(w_dim, k - 1)) * dT,
              static_cast<int>(binom(w_dim, k)) * dA);
  auto cols = subsets_lex(w_dim, k);
  for (std::uint64_t sc = 0; sc < cols.size(); ++sc) {
    const Subset& S = cols[sc];
    for (int a = 0; a < dA; ++a) {
      int col = static_cast<int>(sc) * dA + a;
      for (int j = 0; j < k; ++j) {
        Subset T = subset_remove(S, j);
        int sign = (j % 2 == 0) ? 1 : -1;
        std::uint64_t tr = subset_rank(T, w_dim);
        const Vec& prod = pairing.value(S[j], a);
        for (int t = 0; t < dT; ++t)
          if (prod[t] != 0)
            m.add(static_cast<int>(tr) * dT + t, col, sign * prod[t]);
      }
    }
  }
  return m;
}

std::map<std::pair<Subset, int>, Rat> differential_apply(const MultTable& mult,
                                                         const KoszulClass& c) {
  if (c.ambient_dim != mult.dim1 || c.value_dim != mult.dim1)
    throw InputError("class does not live over the multiplication table");
  std::map<std::pair<Subset, int>, Rat> out;
  for (const auto& [key, coeff] : c.coeffs) {
    const auto& [S, s] = key;
    for (int k = 0; k < c.p; ++k) {
      Subset T = subset_remove(S, k);
      Rat f = (k % 2 == 0) ? coeff : -coeff;
      const Vec& prod = mult.product(S[k], s);
      for (int t = 0; t < mult.dim2; ++t) {
        if (prod[t] == 0) continue;
        auto kk = std::make_pair(T, t);
        auto it = out.find(kk);
        if (it == out.end()) {
          out.emplace(std::move(kk), f * prod[t]);
        } else {
          it->second += f * prod[t];
          if (it->second == 0) out.erase(it);
        }
      }
    }
  }
  return out;
}

bool is_cycle(const MultTable& mult, const KoszulClass& c) {
  return differential_apply(mult, c).empty();
}

std::vector<Vec> support(const KoszulClass& c) {
  if (c.is_zero()) throw PreconditionError("support of the zero class");
  const int n = c.ambient_dim;
  EchelonBasis eb(n);
  // contraction by the dual wedge of each (p−1)-subset T, per value index:
  // the T-contraction collects the coefficients c_{T∪{l},s} with sign.
  std::map<std::pair<Subset, int>, Vec> contractions;
  for (const auto& [key, coeff] : c.coeffs) {
    const auto& [S, s] = key;
    for (int k = 0; k < c.p; ++k) {
      Subset T = subset_remove(S, k);
      // moving e_{S[k]} past the k preceding factors
      Rat f = (k % 2 == 0) ? coeff : -coeff;
      auto it = contractions.find({T, s});
      if (it == contractions.end())
        it = contractions.emplace(std::make_pair(T, s), zero_vec(n)).first;
      it->second[S[k]] += f;
    }
  }
  for (const auto& [key, v] : contractions) eb.insert(v);
  std::vector<Vec> out;
  for (const auto& [piv, row] : eb.rows()) out.push_back(row);
  return out;
}

Vec wedge_expand(const std::vector<Vec>& vectors, int V_dim) {
  const int k = static_cast<int>(vectors.size());
  Vec out = zero_vec(binom(V_dim, k));
  auto subsets = subsets_lex(V_dim, k);
  for (std::uint64_t r = 0; r < subsets.size(); ++r) {
    // k×k minor on the columns of the subset
    const Subset& S = subsets[r];
    std::vector<Vec> m(k, zero_vec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = vectors[i][S[j]];
    // exact determinant by elimination
    Rat det = 1;
    bool zero = false;
    for (int col = 0; col < k && !zero; ++col) {
      int piv = -1;
      for (int row = col; row < k; ++row)
        if (m[row][col] != 0) { piv = row; break; }
      if (piv < 0) { zero = true; break; }
      if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
      det *= m[col][col];
      Rat inv = Rat(1) / m[col][col];
      for (int row = col + 1; row < k; ++row) {
        if (m[row][col] == 0) continue;
        Rat f = m[row][col] * inv;
        for (int cc = col; cc < k; ++cc) m[row][cc] -= f * m[col][cc];
      }
    }
    if (!zero && det != 0) out[r] = det;
  }
  return out;
}

}  // namespace koszul
