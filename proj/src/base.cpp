#include "nmil/base.hpp"

#include <sstream>

namespace nmil {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

long to_long(const Int& v) {
    if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
        throw calc_error("integer out of machine range");
    return static_cast<long>(v);
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw calc_error("dot: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot_rat(const IntVec& a, const RatVec& x) {
    if (a.size() != x.size()) throw calc_error("dot_rat: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
    return s;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec vec_scale(const IntVec& a, const Int& s) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

bool vec_is_zero(const IntVec& a) {
    for (const auto& v : a)
        if (v != 0) return false;
    return true;
}

Int content(const IntVec& a) {
    Int g = 0;
    for (const auto& v : a) g = int_gcd(g, v);
    return g;
}

IntVec primitive(const IntVec& a) {
    Int g = content(a);
    if (g == 0 || g == 1) return a;
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

bool vec_less(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

RatVec to_rat(const IntVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << rat_num(r) << "/" << rat_den(r);
    return os.str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw user_error("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::exception&) {
        throw user_error("malformed rational: '" + s + "'");
    }
}

std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

Rat mod1(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n < 0 && q * d != n) q -= 1;  // floor division
    return r - Rat(q);
}

}  // namespace nmil
