#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmil {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Bad input: rejected preconditions, parse failures. Maps to exit code 1.
struct user_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated internal identity (a structural fact the theory guarantees).
// Maps to exit code 2.
struct calc_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int binomial(long n, long k);
long to_long(const Int& v);

Int dot(const IntVec& a, const IntVec& b);
Rat dot_rat(const IntVec& a, const RatVec& x);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(const IntVec& a, const Int& s);
bool vec_is_zero(const IntVec& a);
Int content(const IntVec& a);
IntVec primitive(const IntVec& a);  // divide by content; zero vector unchanged

// lexicographic order on coordinate vectors
bool vec_less(const IntVec& a, const IntVec& b);

RatVec to_rat(const IntVec& a);

std::string rat_str(const Rat& r);       // "a/b", denominator always present
Rat parse_rat(const std::string& s);     // inverse of rat_str (also accepts "a")
std::string vec_str(const IntVec& v);

// representative of r mod 1 in [0,1)
Rat mod1(const Rat& r);

Rat num_den(const Rat&) = delete;
inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

}  // namespace nmil
