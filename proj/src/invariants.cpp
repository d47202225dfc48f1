#include "nmil/invariants.hpp"

namespace nmil {

Int EPolynomial::eval_11() const {
    Int s = 0;
    for (const auto& [m, v] : coeffs.c) s += v;
    return s;
}

UniPoly EPolynomial::at_v1() const { return coeffs.specialize_v1(); }

Int JordanTable::weighted_total() const {
    Int s = 0;
    for (const auto& [k, j] : counts) s += Int(k) * j;
    return s;
}

namespace {

Laurent2 divide_uv(const Laurent2& p, const char* who) {
    for (const auto& [m, v] : p.c)
        if (m[0] < 1 || m[1] < 1)
            throw calc_error(std::string(who) + ": right-hand side is not divisible by uv");
    return p.shift(-1, -1);
}

LatticePolytope cone_polytope(const CompactFace& f) {
    std::vector<IntVec> verts = f.poly.vertices;
    verts.push_back(IntVec(f.poly.ambient, 0));
    return convex_hull(f.poly.ambient, verts);
}

void require_good(const NewtonPolyhedron& np, const RotationNumber& lambda, const char* who) {
    if (np.convenient)
        throw user_error(std::string(who) + ": input is convenient (outside the hypotheses)");
    if (np.dimP != np.n) throw user_error(std::string(who) + ": requires dim P = n");
    if (in_bad_set(np, lambda))
        throw user_error(std::string(who) + ": eigenvalue lies in the bad set R_f");
}

}  // namespace

EPolynomial e_poly(EvalContext& ctx, const NewtonPolyhedron& np, const RotationNumber& lambda) {
    Laurent2 acc;
    for (const auto& f : np.compact_faces) {
        int d = f.poly.dim;
        Laurent2 term;
        // h*(F, 0_F) vanishes unless lambda = 1
        if (lambda.is_one()) {
            const WeightedComplex& tf = trivial(ctx, f.poly, zero_form(np.n));
            term = term - one_minus_uv_pow(f.s - d) * hstar2(ctx, tf, lambda);
        }
        const WeightedComplex& td = trivial(ctx, cone_polytope(f), linear_form(f.u, f.c));
        term = term + one_minus_uv_pow(f.s - d - 1) * hstar2(ctx, td, lambda);
        acc = (d % 2 == 0) ? acc + term : acc - term;
    }
    EPolynomial out;
    out.lambda = lambda;
    out.coeffs = acc.is_zero() ? acc : divide_uv(acc, "e_poly");
    return out;
}

EPolynomial e_poly_via_lstar(EvalContext& ctx, const NewtonPolyhedron& np,
                             const WeightedComplex& wc, const RotationNumber& lambda) {
    require_good(np, lambda, "e_poly_via_lstar");
    Laurent2 l2 = lstar2(ctx, wc, lambda);
    if ((np.n - 1) % 2 != 0) l2 = l2 * Int(-1);
    EPolynomial out;
    out.lambda = lambda;
    out.coeffs = l2.is_zero() ? l2 : divide_uv(l2, "e_poly_via_lstar");
    return out;
}

JordanTable jordan_blocks(EvalContext& ctx, const NewtonPolyhedron& np, const WeightedComplex& wc,
                          const RotationNumber& lambda) {
    require_good(np, lambda, "jordan_blocks");
    const int n = np.n;
    UniPoly R;
    for (const auto& f : np.compact_faces) {
        if (f.extremal) continue;
        LatticePolytope delta = cone_polytope(f);
        Int l1 = lstar1(ctx, delta, linear_form(f.u, f.c), lambda).eval_int(1);
        if (l1 == 0) continue;
        int cell = wc.cell_index(delta.key());
        if (cell < 0) throw calc_error("jordan_blocks: Delta_F is not a cell of S_nu");
        UniPoly lt = tilde_l(local_h(ctx, wc, cell), n - 1 - f.poly.dim);
        R = R + UniPoly::monomial(delta.dim + 1) * l1 * lt.substitute_power(2);
    }

    JordanTable jt;
    jt.lambda = lambda;
    for (int k = 0; k <= n - 1; ++k) {
        Int j = R.coeff(k + 2);
        if (j < 0) throw calc_error("jordan_blocks: negative block count");
        if (j != 0) jt.counts[n - k] = j;
        if (static_cast<int>(R.c.size()) > k + 2) R.c[k + 2] = 0;
    }
    R.trim();
    if (!R.is_zero())
        throw calc_error("jordan_blocks: residual terms outside u^2..u^{n+1}");
    if (jt.weighted_total() != multiplicity(np, lambda))
        throw calc_error("jordan_blocks: block sizes do not add up to the multiplicity");
    return jt;
}

PuiseuxPoly spectrum_lambda(EvalContext& ctx, const NewtonPolyhedron& np,
                            const WeightedComplex& wc, const Rat& beta) {
    if (!(beta > 0 && beta < 1)) throw user_error("spectrum_lambda: beta must lie in (0,1)");
    RotationNumber lambda{beta};
    require_good(np, lambda, "spectrum_lambda");
    const int n = np.n;

    long smax = 1;
    for (const auto& f : np.compact_faces)
        if (!f.extremal) smax = std::max<long>(smax, f.s);
    const long cutoff = n + smax;

    PuiseuxPoly sp;
    for (const auto& f : np.compact_faces) {
        if (f.extremal) continue;
        // P_{F,beta} through level <= cutoff: levels of Cone(F) are read off
        // the dilated cone polytope cutoff * Delta_F
        LatticePolytope delta = cone_polytope(f);
        PuiseuxPoly pf;
        for (const auto& v : lattice_points(delta, cutoff)) {
            Rat level = Rat(dot(f.u, v), f.c);
            Rat i = level - beta;
            if (rat_den(i) == 1 && i >= 0) pf.add(level, 1);
        }
        // (1 - t)^{s_F} * P_{F,beta}, exact through the cutoff
        UniPoly onemt = tminus1_pow(f.s) * Int((f.s % 2 == 0) ? 1 : -1);
        PuiseuxPoly term;
        for (const auto& [e, ccc] : pf.c)
            for (int k = 0; k <= onemt.degree(); ++k) term.add(e + k, ccc * onemt.coeff(k));
        if ((n - 1 - f.poly.dim) % 2 != 0)
            sp = sp - term;
        else
            sp = sp + term;
    }
    PuiseuxPoly out;
    for (const auto& [e, v] : sp.c) {
        if (e > cutoff) continue;  // truncation garbage from the product
        if (e > n)
            throw calc_error("spectrum_lambda: contribution beyond t^n fails to cancel");
        out.add(e, v);
    }
    return out;
}

std::vector<RotationNumber> candidate_eigenvalues(const NewtonPolyhedron& np) {
    std::set<RotationNumber> out;
    for (const auto& f : np.compact_faces) {
        long d = to_long(f.d);
        for (long k = 0; k < d; ++k) out.insert(RotationNumber(Rat(k, d)));
    }
    return {out.begin(), out.end()};
}

PuiseuxPoly full_spectrum(EvalContext& ctx, const NewtonPolyhedron& np) {
    const int n = np.n;
    PuiseuxPoly sp;
    for (const auto& lambda : candidate_eigenvalues(np)) {
        UniPoly e1 = e_poly(ctx, np, lambda).at_v1();
        for (int p = 0; p <= e1.degree(); ++p) {
            if (e1.coeff(p) == 0) continue;
            Rat alpha = lambda.is_one() ? Rat(n - p) : Rat(n - p) - lambda.theta;
            sp.add(alpha, e1.coeff(p));
        }
    }
    sp.add(Rat(n), -1);  // remove the unit class of H^0 at lambda = 1
    if ((n - 1) % 2 != 0) {
        PuiseuxPoly neg;
        for (const auto& [e, v] : sp.c) neg.add(e, -v);
        sp = neg;
    }
    for (const auto& [e, v] : sp.c)
        if (e < 0 || e > n) throw calc_error("full_spectrum: exponent outside [0, n]");
    return sp;
}

}  // namespace nmil
