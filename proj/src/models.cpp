#include "koszul/models.hpp"

#include <algorithm>

#include "koszul/errors.hpp"
#include "koszul/skew_map.hpp"

namespace koszul {

Rat QuadricForm::coeff(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = coeffs.find({i, j});
  return it == coeffs.end() ? Rat(0) : it->second;
}

SparseMat QuadricForm::gram() const {
  SparseMat g(n_vars, n_vars);
  for (const auto& [ij, c] : coeffs) {
    auto [i, j] = ij;
    if (i == j) {
      g.set(i, i, c);
    } else {
      g.set(i, j, c / 2);
      g.set(j, i, c / 2);
    }
  }
  return g;
}

int quadric_rank(const QuadricForm& q) { return rank(q.gram()); }

int Divisor1D::degree() const {
  int d = 0;
  for (const auto& p : points) d += p.multiplicity;
  if (leftover) d += leftover->degree;
  return d;
}

int binary_degree_of_length(std::size_t len) {
  if (len == 0) throw InputError("empty binary form");
  return static_cast<int>(len) - 1;
}

Vec binary_mul(const Vec& f, const Vec& g) {
  Vec out = zero_vec(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

namespace {

// Univariate view of a binary form: coefficients low-to-high in t = x/y,
// plus the multiplicity of the factor y (missing top coefficients).
struct UniForm {
  std::vector<Rat> u;  // u[k] = coefficient of t^k; trimmed, u.back() != 0
  int y_mult = 0;
};

UniForm to_uni(const Vec& f) {
  // f is on the basis x^d, x^{d-1}y, ..., y^d, so coefficient of x^k is
  // f[d-k]; t^k picks up the same coefficient.
  int d = binary_degree_of_length(f.size());
  std::vector<Rat> u(d + 1);
  for (int k = 0; k <= d; ++k) u[k] = f[d - k];
  int top = d;
  while (top > 0 && u[top] == 0) --top;
  if (u[top] == 0 && top == 0) return {{}, 0};  // the zero form
  UniForm out;
  out.u.assign(u.begin(), u.begin() + top + 1);
  out.y_mult = d - top;
  return out;
}

Vec from_uni(const std::vector<Rat>& u, int y_mult) {
  int deg = static_cast<int>(u.size()) - 1 + y_mult;
  Vec f = zero_vec(deg + 1);
  for (int k = 0; k < static_cast<int>(u.size()); ++k) f[deg - k] = u[k];
  return f;
}

std::vector<Rat> uni_trim(std::vector<Rat> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// remainder of a by b, b nonzero
std::vector<Rat> uni_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = uni_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

std::vector<Rat> uni_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  while (!b.empty()) {
    auto r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat inv = Rat(1) / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

std::vector<Rat> uni_divexact(const std::vector<Rat>& a,
                              const std::vector<Rat>& b) {
  std::vector<Rat> rem = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0,
                              Rat(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    Rat f = rem.back() / b.back();
    std::size_t off = rem.size() - b.size();
    q[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[off + i] -= f * b[i];
    rem = uni_trim(std::move(rem));
    if (rem.empty()) break;
  }
  if (!rem.empty()) throw InputError("inexact polynomial division");
  return q;
}

}  // namespace

Vec binary_gcd(const Vec& f, const Vec& g) {
  UniForm uf = to_uni(f), ug = to_uni(g);
  if (uf.u.empty()) return g;
  if (ug.u.empty()) return f;
  auto d = uni_gcd(uf.u, ug.u);
  return from_uni(d, std::min(uf.y_mult, ug.y_mult));
}

std::optional<Vec> binary_divide(const Vec& f, const Vec& g) {
  UniForm uf = to_uni(f), ug = to_uni(g);
  if (ug.u.empty()) return std::nullopt;
  if (uf.u.empty()) {
    if (f.size() < g.size()) return std::nullopt;
    return zero_vec(f.size() - g.size() + 1);
  }
  if (uf.y_mult < ug.y_mult || uf.u.size() < ug.u.size()) return std::nullopt;
  try {
    auto q = uni_divexact(uf.u, ug.u);
    return from_uni(q, uf.y_mult - ug.y_mult);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

Divisor1D divisor_of_binary_form(const Vec& g) {
  Divisor1D div;
  UniForm u = to_uni(g);
  if (u.u.empty()) throw PreconditionError("divisor of the zero form");
  if (u.y_mult > 0)
    div.points.push_back({Rat(1), Rat(0), u.y_mult});  // the point (1:0)
  // rational roots t = p/q of the univariate part, extracted with their
  // multiplicities; the rational root bound runs over divisors of the
  // normalized leading and constant integer coefficients.
  std::vector<Rat> poly = u.u;
  // clear denominators and content
  Int lcm = 1;
  for (const auto& c : poly) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<Int> ip;
  ip.reserve(poly.size());
  for (const auto& c : poly) ip.push_back(numerator(c * Rat(lcm)));
  Int content = 0;
  for (const auto& c : ip) content = boost::multiprecision::gcd(content, c);
  if (content > 1)
    for (auto& c : ip) c /= content;

  // t = 0 roots first
  int ord0 = 0;
  while (ord0 < static_cast<int>(ip.size()) && ip[ord0] == 0) ++ord0;
  if (ord0 > 0) {
    div.points.push_back({Rat(0), Rat(1), ord0});
    ip.erase(ip.begin(), ip.begin() + ord0);
  }

  auto divisors_of = [](Int v) {
    std::vector<Int> out;
    if (v < 0) v = -v;
    for (Int d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        out.push_back(d);
        if (d * d != v) out.push_back(v / d);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  if (ip.size() > 1) {
    std::vector<Rat> cur(ip.size());
    for (std::size_t i = 0; i < ip.size(); ++i) cur[i] = Rat(ip[i]);
    auto ps = divisors_of(ip.front());
    auto qs = divisors_of(ip.back());
    std::vector<Rat> candidates;
    for (const auto& pn : ps)
      for (const auto& qn : qs) {
        candidates.push_back(Rat(pn, qn));
        candidates.push_back(Rat(-pn, qn));
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (const auto& root : candidates) {
      int mult = 0;
      while (cur.size() > 1) {
        // evaluate and deflate by (t - root) if it divides
        Rat val = 0;
        for (auto it = cur.rbegin(); it != cur.rend(); ++it) val = val * root + *it;
        if (val != 0) break;
        std::vector<Rat> quo(cur.size() - 1);
        Rat carry = 0;
        for (int k = static_cast<int>(cur.size()) - 1; k >= 1; --k) {
          carry = cur[k] + carry * root;
          quo[k - 1] = carry;
        }
        cur = std::move(quo);
        ++mult;
      }
      if (mult > 0)
        div.points.push_back({numerator(root), denominator(root), mult});
    }
    if (cur.size() > 1) {
      Divisor1D::IrrationalPart rest;
      rest.degree = static_cast<int>(cur.size()) - 1;
      rest.coeffs = from_uni(cur, 0);
      div.leftover = rest;
    }
  }
  return div;
}

Divisor1D base_locus_rational(const std::vector<Vec>& forms) {
  if (forms.empty()) throw PreconditionError("base locus of the zero space");
  Vec g = forms[0];
  for (std::size_t i = 1; i < forms.size(); ++i) g = binary_gcd(g, forms[i]);
  if (is_zero_vec(g)) throw PreconditionError("base locus of the zero space");
  return divisor_of_binary_form(g);
}

CurveModel CurveModel::rational(int d) {
  if (d < 1) throw InputError("rational model needs degree >= 1");
  CurveModel m;
  m.kind = Kind::rational;
  m.degree = d;
  m.mult_ = MultTable(d + 1, 2 * d + 1);
  auto mono_name = [](int deg, int i) {
    std::string s;
    if (deg - i > 0) s += "x" + (deg - i > 1 ? "^" + std::to_string(deg - i) : "");
    if (i > 0) s += "y" + (i > 1 ? "^" + std::to_string(i) : "");
    if (s.empty()) s = "1";
    return s;
  };
  for (int i = 0; i <= d; ++i) m.mult_.names1.push_back(mono_name(d, i));
  for (int i = 0; i <= 2 * d; ++i) m.mult_.names2.push_back(mono_name(2 * d, i));
  for (int i = 0; i <= d; ++i)
    for (int j = i; j <= d; ++j) {
      Vec v = zero_vec(2 * d + 1);
      v[i + j] = 1;
      m.mult_.set_product(i, j, std::move(v));
    }
  return m;
}

CurveModel CurveModel::quadric_presented(int n_vars,
                                         std::vector<QuadricForm> i2) {
  if (n_vars < 1) throw InputError("quadric model needs at least one variable");
  CurveModel m;
  m.kind = Kind::quadric_presented;
  m.n_vars = n_vars;
  m.i2 = std::move(i2);

  int nm = sym_dim(n_vars);
  SparseMat rel(static_cast<int>(m.i2.size()), nm);
  for (int r = 0; r < static_cast<int>(m.i2.size()); ++r) {
    if (m.i2[r].n_vars != n_vars)
      throw InputError("quadric relation in wrong number of variables");
    for (const auto& [ij, c] : m.i2[r].coeffs)
      rel.set(r, sym_index(ij.first, ij.second, n_vars), c);
  }
  m.i2_rref_ = rref_of(rel);
  if (m.i2_rref_.pivots.size() != m.i2.size())
    throw InputError("dependent generators in the quadric space");

  std::vector<bool> is_pivot(nm, false);
  for (int p : m.i2_rref_.pivots) is_pivot[p] = true;
  for (int k = 0; k < nm; ++k)
    if (!is_pivot[k]) m.quotient_mons_.push_back(k);

  int dim2 = static_cast<int>(m.quotient_mons_.size());
  m.mult_ = MultTable(n_vars, dim2);
  for (int i = 0; i < n_vars; ++i)
    m.mult_.names1.push_back("x" + std::to_string(i + 1));
  std::vector<std::pair<int, int>> mon_of(nm);
  for (int a = 0; a < n_vars; ++a)
    for (int b = a; b < n_vars; ++b) mon_of[sym_index(a, b, n_vars)] = {a, b};
  for (int k : m.quotient_mons_) {
    auto [a, b] = mon_of[k];
    m.mult_.names2.push_back("x" + std::to_string(a + 1) + "x" +
                             std::to_string(b + 1));
  }
  for (int i = 0; i < n_vars; ++i)
    for (int j = i; j < n_vars; ++j) {
      Vec mono = zero_vec(nm);
      mono[sym_index(i, j, n_vars)] = 1;
      m.mult_.set_product(i, j, m.project_quadric(mono));
    }
  return m;
}

Vec CurveModel::project_quadric(const Vec& free_coeffs) const {
  if (kind != Kind::quadric_presented)
    throw PreconditionError("projection only defined on quadric models");
  int nm = sym_dim(n_vars);
  if (static_cast<int>(free_coeffs.size()) != nm)
    throw InputError("free quadric has wrong length");
  // reduce against the echelonized relations, then read off the
  // quotient-basis coordinates
  Vec v = free_coeffs;
  for (std::size_t r = 0; r < i2_rref_.pivots.size(); ++r) {
    int pc = i2_rref_.pivots[r];
    if (v[pc] == 0) continue;
    Rat f = v[pc];
    for (const auto& [c, val] : i2_rref_.rows[r]) v[c] -= f * val;
  }
  Vec out(quotient_mons_.size());
  for (std::size_t k = 0; k < quotient_mons_.size(); ++k)
    out[k] = v[quotient_mons_[k]];
  return out;
}

}  // namespace koszul
