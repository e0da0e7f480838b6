#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace koszul {

// Exact rational scalar, the only scalar type in the library. Values are
// kept in lowest terms with positive denominator; zero is 0/1.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Accepts "p" or "p/q" with optional sign. Throws InputError on anything else.
Rat parse_rat(const std::string& s);

// Canonical serialization, always with an explicit denominator ("3/1").
std::string rat_to_string(const Rat& r);

using Vec = std::vector<Rat>;

Vec zero_vec(std::size_t n);
bool is_zero_vec(const Vec& v);
void axpy(Vec& y, const Rat& a, const Vec& x);  // y += a*x
Vec scaled(const Vec& v, const Rat& a);
Vec vec_sub(const Vec& a, const Vec& b);

}  // namespace koszul
