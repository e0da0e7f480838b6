#pragma once

#include <cstdint>
#include <vector>

#include "koszul/errors.hpp"

namespace koszul {

// A strictly increasing tuple of basis indices; the wedge bases of Λ^p V are
// ordered lexicographically on these tuples throughout the project.
using Subset = std::vector<int>;

std::uint64_t binom(int n, int k);

// Lexicographic rank of a p-subset of {0..n-1}.
std::uint64_t subset_rank(const Subset& s, int n);
Subset subset_unrank(std::uint64_t r, int n, int p);
std::vector<Subset> subsets_lex(int n, int p);

Subset subset_remove(const Subset& s, int pos);  // drop element at position pos

// Sorts idx in place; returns the permutation sign, or 0 on a repeat.
int sort_sign(std::vector<int>& idx);

// Basis element of Λ^p V.
struct WedgeIndex {
  Subset subset;
  int ambient_dim = 0;
  WedgeIndex() = default;
  WedgeIndex(Subset s, int n);  // validates strict increase and bounds
};

}  // namespace koszul
