#include "nmil/poly.hpp"

#include <sstream>

namespace nmil {

UniPoly UniPoly::constant(Int v) {
    UniPoly p;
    if (v != 0) p.c.push_back(v);
    return p;
}

UniPoly UniPoly::monomial(int e, Int v) {
    UniPoly p;
    if (v != 0) {
        p.c.assign(e + 1, 0);
        p.c[e] = v;
    }
    return p;
}

void UniPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    UniPoly r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const Int& s) const {
    if (s == 0) return {};
    UniPoly r = *this;
    for (auto& v : r.c) v *= s;
    return r;
}

UniPoly UniPoly::reversed(int D) const {
    if (degree() > D) throw calc_error("UniPoly::reversed: degree exceeds reversal bound");
    UniPoly r;
    r.c.assign(D + 1, 0);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) r.c[D - i] = c[i];
    r.trim();
    return r;
}

UniPoly UniPoly::substitute_power(int k) const {
    UniPoly r;
    if (is_zero()) return r;
    r.c.assign((c.size() - 1) * k + 1, 0);
    for (size_t i = 0; i < c.size(); ++i) r.c[i * k] = c[i];
    r.trim();
    return r;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat s = 0;
    for (size_t i = c.size(); i-- > 0;) s = s * x + Rat(c[i]);
    return s;
}

Int UniPoly::eval_int(const Int& x) const {
    Int s = 0;
    for (size_t i = c.size(); i-- > 0;) s = s * x + c[i];
    return s;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << (c[i] > 0 ? " + " : " - ");
        else if (c[i] < 0) os << "-";
        Int a = boost::multiprecision::abs(c[i]);
        if (a != 1 || i == 0) os << a;
        if (i >= 1) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly tminus1_pow(int k) {
    UniPoly t1;
    t1.c = {Int(-1), Int(1)};
    UniPoly r = UniPoly::one();
    for (int i = 0; i < k; ++i) r = r * t1;
    return r;
}

void Laurent2::add(const Mono2& m, const Int& v) {
    if (v == 0) return;
    auto it = c.find(m);
    if (it == c.end()) {
        c.emplace(m, v);
    } else {
        it->second += v;
        if (it->second == 0) c.erase(it);
    }
}

Laurent2 Laurent2::operator+(const Laurent2& o) const {
    Laurent2 r = *this;
    for (const auto& [m, v] : o.c) r.add(m, v);
    return r;
}

Laurent2 Laurent2::operator-(const Laurent2& o) const {
    Laurent2 r = *this;
    for (const auto& [m, v] : o.c) r.add(m, -v);
    return r;
}

Laurent2 Laurent2::operator*(const Laurent2& o) const {
    Laurent2 r;
    for (const auto& [m1, v1] : c)
        for (const auto& [m2, v2] : o.c) r.add({m1[0] + m2[0], m1[1] + m2[1]}, v1 * v2);
    return r;
}

Laurent2 Laurent2::operator*(const Int& s) const {
    Laurent2 r;
    if (s == 0) return r;
    for (const auto& [m, v] : c) r.c.emplace(m, v * s);
    return r;
}

bool Laurent2::nonnegative_exponents() const {
    for (const auto& [m, v] : c)
        if (m[0] < 0 || m[1] < 0) return false;
    return true;
}

Laurent2 Laurent2::swap_uv() const {
    Laurent2 r;
    for (const auto& [m, v] : c) r.c.emplace(Mono2{m[1], m[0]}, v);
    return r;
}

Laurent2 Laurent2::inv_swap() const {
    Laurent2 r;
    for (const auto& [m, v] : c) r.c.emplace(Mono2{-m[1], -m[0]}, v);
    return r;
}

Laurent2 Laurent2::shift(long du, long dv) const {
    Laurent2 r;
    for (const auto& [m, v] : c) r.c.emplace(Mono2{m[0] + du, m[1] + dv}, v);
    return r;
}

UniPoly Laurent2::specialize_v1() const {
    std::map<long, Int> acc;
    for (const auto& [m, v] : c) acc[m[0]] += v;
    long deg = -1;
    for (const auto& [e, v] : acc) {
        if (v == 0) continue;
        if (e < 0) throw calc_error("specialize_v1: negative exponent survives");
        deg = std::max(deg, e);
    }
    UniPoly p;
    p.c.assign(deg + 1, 0);
    for (const auto& [e, v] : acc)
        if (v != 0) p.c[e] = v;
    p.trim();
    return p;
}

Rat Laurent2::eval(const Rat& u, const Rat& v) const {
    auto powq = [](Rat b, long e) {
        if (e < 0) {
            b = Rat(1) / b;
            e = -e;
        }
        Rat r = 1;
        for (long i = 0; i < e; ++i) r *= b;
        return r;
    };
    Rat s = 0;
    for (const auto& [m, w] : c) s += Rat(w) * powq(u, m[0]) * powq(v, m[1]);
    return s;
}

std::string Laurent2::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : c) {
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        os << boost::multiprecision::abs(v) << "*u^" << m[0] << "*v^" << m[1];
        first = false;
    }
    return os.str();
}

Laurent2 laurent2_const(Int v) {
    Laurent2 r;
    r.add({0, 0}, v);
    return r;
}

Laurent2 one_minus_uv_pow(int k) {
    Laurent2 base;
    base.add({0, 0}, 1);
    base.add({1, 1}, -1);
    Laurent2 r = laurent2_const(1);
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
}

void Laurent3::add(const Mono3& m, const Int& v) {
    if (v == 0) return;
    auto it = c.find(m);
    if (it == c.end()) {
        c.emplace(m, v);
    } else {
        it->second += v;
        if (it->second == 0) c.erase(it);
    }
}

Laurent3 Laurent3::operator+(const Laurent3& o) const {
    Laurent3 r = *this;
    for (const auto& [m, v] : o.c) r.add(m, v);
    return r;
}

Laurent3 Laurent3::operator-(const Laurent3& o) const {
    Laurent3 r = *this;
    for (const auto& [m, v] : o.c) r.add(m, -v);
    return r;
}

bool Laurent3::nonnegative_exponents() const {
    for (const auto& [m, v] : c)
        if (m[0] < 0 || m[1] < 0 || m[2] < 0) return false;
    return true;
}

Laurent2 Laurent3::specialize_w1() const {
    Laurent2 r;
    for (const auto& [m, v] : c) r.add({m[0], m[1]}, v);
    return r;
}

Laurent3 Laurent3::swap_uv() const {
    Laurent3 r;
    for (const auto& [m, v] : c) r.c.emplace(Mono3{m[1], m[0], m[2]}, v);
    return r;
}

Laurent3 Laurent3::uv_inverse_uvw() const {
    // u -> v^-1, v -> u^-1, w -> uvw
    Laurent3 r;
    for (const auto& [m, v] : c) r.add(Mono3{m[2] - m[1], m[2] - m[0], m[2]}, v);
    return r;
}

std::string Laurent3::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : c) {
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        os << boost::multiprecision::abs(v) << "*u^" << m[0] << "*v^" << m[1] << "*w^" << m[2];
        first = false;
    }
    return os.str();
}

void PuiseuxPoly::add(const Rat& e, const Int& v) {
    if (v == 0) return;
    auto it = c.find(e);
    if (it == c.end()) {
        c.emplace(e, v);
    } else {
        it->second += v;
        if (it->second == 0) c.erase(it);
    }
}

PuiseuxPoly PuiseuxPoly::operator+(const PuiseuxPoly& o) const {
    PuiseuxPoly r = *this;
    for (const auto& [e, v] : o.c) r.add(e, v);
    return r;
}

PuiseuxPoly PuiseuxPoly::operator-(const PuiseuxPoly& o) const {
    PuiseuxPoly r = *this;
    for (const auto& [e, v] : o.c) r.add(e, -v);
    return r;
}

Int PuiseuxPoly::total_mass() const {
    Int s = 0;
    for (const auto& [e, v] : c) s += v;
    return s;
}

std::string PuiseuxPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c) {
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        os << boost::multiprecision::abs(v) << "*t^(" << rat_str(e) << ")";
        first = false;
    }
    return os.str();
}

PuiseuxPoly puiseux_from_uni(const UniPoly& p, const Rat& offset) {
    PuiseuxPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add(offset + i, p.coeff(i));
    return r;
}

}  // namespace nmil
