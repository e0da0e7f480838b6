#include "koszul/rational.hpp"

#include <stdexcept>

#include "koszul/errors.hpp"

namespace koszul {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in \"" + s + "\"");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rat(num, den);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("malformed rational literal \"" + s + "\"");
  }
}

std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void axpy(Vec& y, const Rat& a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Vec scaled(const Vec& v, const Rat& a) {
  Vec out(v);
  for (auto& x : out) x *= a;
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

}  // namespace koszul
