#pragma once

#include <array>
#include <map>

#include "nmil/base.hpp"

namespace nmil {

// Univariate integer polynomial; empty coefficient vector is the zero
// polynomial (degree minus infinity).
struct UniPoly {
    std::vector<Int> c;  // c[i] = coefficient of t^i, trailing zeros trimmed

    static UniPoly zero() { return {}; }
    static UniPoly one() { return constant(1); }
    static UniPoly constant(Int v);
    static UniPoly monomial(int e, Int v = 1);

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    Int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Int(0); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Int& s) const;
    bool operator==(const UniPoly& o) const { return c == o.c; }

    UniPoly reversed(int D) const;  // t^D * p(1/t); requires degree <= D
    UniPoly substitute_power(int k) const;  // p(t^k)
    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;
    std::string str(const std::string& var = "t") const;
};

// (t-1)^k
UniPoly tminus1_pow(int k);

// Laurent polynomials with integer coefficients in two and three variables.
using Mono2 = std::array<long, 2>;
using Mono3 = std::array<long, 3>;

struct Laurent2 {
    std::map<Mono2, Int> c;

    void add(const Mono2& m, const Int& v);
    Laurent2 operator+(const Laurent2& o) const;
    Laurent2 operator-(const Laurent2& o) const;
    Laurent2 operator*(const Laurent2& o) const;
    Laurent2 operator*(const Int& s) const;
    bool operator==(const Laurent2& o) const { return c == o.c; }
    bool is_zero() const { return c.empty(); }
    bool nonnegative_exponents() const;

    // u <-> v
    Laurent2 swap_uv() const;
    // p(v^-1, u^-1)
    Laurent2 inv_swap() const;
    Laurent2 shift(long du, long dv) const;      // multiply by u^du v^dv
    UniPoly specialize_v1() const;               // p(u, 1); requires result polynomial
    Rat eval(const Rat& u, const Rat& v) const;
    std::string str() const;
};

Laurent2 laurent2_const(Int v);
// (1-uv)^k
Laurent2 one_minus_uv_pow(int k);

struct Laurent3 {
    std::map<Mono3, Int> c;

    void add(const Mono3& m, const Int& v);
    Laurent3 operator+(const Laurent3& o) const;
    Laurent3 operator-(const Laurent3& o) const;
    bool operator==(const Laurent3& o) const { return c == o.c; }
    bool is_zero() const { return c.empty(); }
    bool nonnegative_exponents() const;

    Laurent2 specialize_w1() const;   // p(u,v,1)
    Laurent3 swap_uv() const;         // p(v,u,w)
    Laurent3 uv_inverse_uvw() const;  // p(v^-1, u^-1, uvw)
    std::string str() const;
};

// Finitely supported map from rational exponents to integer coefficients.
struct PuiseuxPoly {
    std::map<Rat, Int> c;

    void add(const Rat& e, const Int& v);
    PuiseuxPoly operator+(const PuiseuxPoly& o) const;
    PuiseuxPoly operator-(const PuiseuxPoly& o) const;
    bool operator==(const PuiseuxPoly& o) const { return c == o.c; }
    bool is_zero() const { return c.empty(); }
    Int total_mass() const;
    std::string str() const;
};

// p(t) * q(t^1) where q is univariate placed at offset: sum_i q_i t^(beta+i)
PuiseuxPoly puiseux_from_uni(const UniPoly& p, const Rat& offset);

}  // namespace nmil
