#include "koszul/wedge.hpp"

#include <algorithm>

namespace koszul {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) {
    out = out * static_cast<std::uint64_t>(n - i) / (i + 1);
  }
  return out;
}

std::uint64_t subset_rank(const Subset& s, int n) {
  std::uint64_t r = 0;
  int p = static_cast<int>(s.size());
  int prev = -1;
  for (int i = 0; i < p; ++i) {
    for (int v = prev + 1; v < s[i]; ++v) r += binom(n - 1 - v, p - 1 - i);
    prev = s[i];
  }
  return r;
}

Subset subset_unrank(std::uint64_t r, int n, int p) {
  Subset s;
  s.reserve(p);
  int v = 0;
  for (int i = 0; i < p; ++i) {
    while (true) {
      std::uint64_t block = binom(n - 1 - v, p - 1 - i);
      if (r < block) break;
      r -= block;
      ++v;
    }
    s.push_back(v++);
  }
  return s;
}

std::vector<Subset> subsets_lex(int n, int p) {
  std::vector<Subset> out;
  if (p < 0 || p > n) return out;
  out.reserve(binom(n, p));
  Subset s(p);
  for (int i = 0; i < p; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    int i = p - 1;
    while (i >= 0 && s[i] == n - p + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < p; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

Subset subset_remove(const Subset& s, int pos) {
  Subset out;
  out.reserve(s.size() - 1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (i != pos) out.push_back(s[i]);
  return out;
}

int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

WedgeIndex::WedgeIndex(Subset s, int n) : subset(std::move(s)), ambient_dim(n) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= n)
      throw InputError("wedge index out of range");
    if (i > 0 && subset[i - 1] >= subset[i])
      throw InputError("wedge indices must be strictly increasing");
  }
}

}  // namespace koszul
