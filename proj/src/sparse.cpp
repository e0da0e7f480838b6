#include "koszul/sparse.hpp"

#include "koszul/errors.hpp"

namespace koszul {

SparseMat::SparseMat(int nrows, int ncols)
    : nrows_(nrows), ncols_(ncols), rows_(nrows) {}

Rat SparseMat::at(int r, int c) const {
  const auto& row = rows_.at(r);
  auto it = row.find(c);
  return it == row.end() ? Rat(0) : it->second;
}

void SparseMat::set(int r, int c, const Rat& v) {
  if (r < 0 || r >= nrows_ || c < 0 || c >= ncols_)
    throw InputError("matrix index out of bounds");
  if (v == 0)
    rows_[r].erase(c);
  else
    rows_[r][c] = v;
}

void SparseMat::add(int r, int c, const Rat& v) {
  if (v == 0) return;
  auto& row = rows_.at(r);
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
  } else {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

const std::map<int, Rat>& SparseMat::row(int r) const { return rows_.at(r); }

std::size_t SparseMat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Vec SparseMat::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != ncols_)
    throw InputError("dimension mismatch in matrix-vector product");
  Vec out = zero_vec(nrows_);
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [c, v] : rows_[r]) out[r] += v * x[c];
  return out;
}

SparseMat SparseMat::transpose() const {
  SparseMat t(ncols_, nrows_);
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
  return t;
}

SparseMat SparseMat::from_columns(int nrows, const std::vector<Vec>& cols) {
  SparseMat m(nrows, static_cast<int>(cols.size()));
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    if (static_cast<int>(cols[c].size()) != nrows)
      throw InputError("column length mismatch");
    for (int r = 0; r < nrows; ++r)
      if (cols[c][r] != 0) m.rows_[r].emplace(c, cols[c][r]);
  }
  return m;
}

namespace {

void scale_row(std::map<int, Rat>& row, const Rat& f) {
  for (auto& [c, v] : row) v *= f;
}

// dst -= f * src; f is taken by value because it usually aliases an entry
// of dst that the loop erases
void eliminate(std::map<int, Rat>& dst, const Rat f,
               const std::map<int, Rat>& src) {
  for (const auto& [c, v] : src) {
    auto it = dst.find(c);
    if (it == dst.end()) {
      dst.emplace(c, -f * v);
    } else {
      it->second -= f * v;
      if (it->second == 0) dst.erase(it);
    }
  }
}

Rref rref_rows(std::vector<std::map<int, Rat>> rows, int ncols) {
  Rref out;
  std::size_t next = 0;
  for (int c = 0; c < ncols && next < rows.size(); ++c) {
    std::size_t piv = next;
    while (piv < rows.size()) {
      auto it = rows[piv].find(c);
      if (it != rows[piv].end()) break;
      ++piv;
    }
    if (piv == rows.size()) continue;
    std::swap(rows[next], rows[piv]);
    scale_row(rows[next], Rat(1) / rows[next].at(c));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next) continue;
      auto it = rows[r].find(c);
      if (it != rows[r].end()) eliminate(rows[r], it->second, rows[next]);
    }
    out.pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

}  // namespace

Rref rref_of(const SparseMat& m) {
  std::vector<std::map<int, Rat>> rows;
  rows.reserve(m.nrows());
  for (int r = 0; r < m.nrows(); ++r)
    if (!m.row(r).empty()) rows.push_back(m.row(r));
  return rref_rows(std::move(rows), m.ncols());
}

int rank(const SparseMat& m) {
  return static_cast<int>(rref_of(m).pivots.size());
}

std::vector<Vec> kernel_basis(const SparseMat& m) {
  Rref rr = rref_of(m);
  int n = m.ncols();
  std::vector<bool> is_pivot(n, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(n);
    v[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      auto it = rr.rows[i].find(f);
      if (it != rr.rows[i].end()) v[rr.pivots[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return echelon_normalize(basis);
}

std::optional<Vec> solve(const SparseMat& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.nrows())
    throw InputError("dimension mismatch in solve");
  int n = m.ncols();
  std::vector<std::map<int, Rat>> rows;
  rows.reserve(m.nrows());
  for (int r = 0; r < m.nrows(); ++r) {
    auto row = m.row(r);
    if (b[r] != 0) row.emplace(n, b[r]);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  Rref rr = rref_rows(std::move(rows), n + 1);
  Vec x = zero_vec(n);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == n) return std::nullopt;  // inconsistent
    auto it = rr.rows[i].find(n);
    if (it != rr.rows[i].end()) x[rr.pivots[i]] = it->second;
  }
  return x;
}

bool membership(const Vec& v, const std::vector<Vec>& span) {
  EchelonBasis eb(static_cast<int>(v.size()));
  for (const auto& s : span) {
    if (s.size() != v.size()) throw InputError("dimension mismatch in membership");
    eb.insert(s);
  }
  return eb.contains(v);
}

bool EchelonBasis::insert(Vec v) {
  v = reduce(std::move(v));
  int lead = -1;
  for (int i = 0; i < ambient_; ++i)
    if (v[i] != 0) { lead = i; break; }
  if (lead < 0) return false;
  Rat inv = Rat(1) / v[lead];
  for (auto& x : v) x *= inv;
  for (auto& [piv, row] : rows_) {
    if (row[lead] != 0) {
      Rat f = row[lead];
      for (int i = 0; i < ambient_; ++i) row[i] -= f * v[i];
    }
  }
  rows_.emplace(lead, std::move(v));
  return true;
}

Vec EchelonBasis::reduce(Vec v) const {
  for (const auto& [piv, row] : rows_) {
    if (v[piv] != 0) {
      Rat f = v[piv];
      for (int i = 0; i < ambient_; ++i) v[i] -= f * row[i];
    }
  }
  return v;
}

bool EchelonBasis::contains(Vec v) const {
  return is_zero_vec(reduce(std::move(v)));
}

std::vector<Vec> echelon_normalize(const std::vector<Vec>& vecs) {
  if (vecs.empty()) return {};
  EchelonBasis eb(static_cast<int>(vecs[0].size()));
  for (const auto& v : vecs) eb.insert(v);
  std::vector<Vec> out;
  out.reserve(eb.rows().size());
  for (const auto& [piv, row] : eb.rows()) out.push_back(row);
  return out;
}

}  // namespace koszul
