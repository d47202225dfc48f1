#include "nmil/poset_poly.hpp"

#include <sstream>

namespace nmil {

namespace {

UniPoly g_impl(EvalContext& ctx, const GradedPoset& poset, const std::string& poset_key, int a,
               int b, bool dual) {
    if (!poset.leq(a, b)) throw calc_error("g_poly: not an interval");
    std::ostringstream ks;
    ks << (dual ? "g*" : "g") << "@" << poset_key << "#" << a << "," << b;
    std::string key = ks.str();
    auto it = ctx.g_memo.find(key);
    if (it != ctx.g_memo.end()) return it->second;

    int r = poset.rank[b] - poset.rank[a];
    UniPoly g;
    if (r == 0) {
        g = UniPoly::one();
    } else {
        UniPoly rhs;
        for (int x : poset.interval(a, b)) {
            if (!dual) {
                if (x == b) continue;
                rhs = rhs + g_impl(ctx, poset, poset_key, a, x, false) *
                                tminus1_pow(poset.rank[b] - poset.rank[x]);
            } else {
                if (x == a) continue;
                rhs = rhs + g_impl(ctx, poset, poset_key, x, b, true) *
                                tminus1_pow(poset.rank[x] - poset.rank[a]);
            }
        }
        // t^r g(1/t) = g(t) + rhs(t), with deg g < r/2: read the top half
        for (int i = 0; 2 * i < r; ++i) {
            Int ci = rhs.coeff(r - i);
            if (ci != 0) {
                if (static_cast<int>(g.c.size()) < i + 1) g.c.resize(i + 1, 0);
                g.c[i] = ci;
            }
        }
        g.trim();
        if (!(g.reversed(r) == g + rhs))
            throw calc_error("g recursion closure failed (interval is not Eulerian?)");
    }
    return ctx.g_memo.emplace(key, std::move(g)).first->second;
}

}  // namespace

UniPoly g_poly(EvalContext& ctx, const GradedPoset& poset, const std::string& poset_key, int a,
               int b) {
    return g_impl(ctx, poset, poset_key, a, b, false);
}

UniPoly g_poly_dual(EvalContext& ctx, const GradedPoset& poset, const std::string& poset_key,
                    int a, int b) {
    return g_impl(ctx, poset, poset_key, a, b, true);
}

const WeightedComplex& restricted(EvalContext& ctx, const WeightedComplex& wc, int face_idx) {
    std::string key = wc.ckey + "|Q" + std::to_string(face_idx);
    auto it = ctx.restriction_memo.find(key);
    if (it != ctx.restriction_memo.end()) return it->second;
    return ctx.restriction_memo.emplace(key, restrict_to_face(wc, face_idx)).first->second;
}

const WeightedComplex& trivial(EvalContext& ctx, const LatticePolytope& poly,
                               const AffineForm& nu) {
    std::string key = poly.key() + "#" + nu.key();
    auto it = ctx.trivial_memo.find(key);
    if (it != ctx.trivial_memo.end()) return it->second;
    return ctx.trivial_memo.emplace(key, trivial_complex(poly, nu)).first->second;
}

const FaceLattice& faces_of(EvalContext& ctx, const LatticePolytope& poly) {
    std::string key = poly.key();
    auto it = ctx.facelat_memo.find(key);
    if (it != ctx.facelat_memo.end()) return it->second;
    return ctx.facelat_memo.emplace(key, face_lattice(poly)).first->second;
}

UniPoly h_link(EvalContext& ctx, const WeightedComplex& view, int cell) {
    std::string key = view.ckey + "#lk" + std::to_string(cell);
    auto it = ctx.hlink_memo.find(key);
    if (it != ctx.hlink_memo.end()) return it->second;

    int D = view.dimP - view.cells[cell].dim();
    UniPoly rhs;
    for (int f = 0; f < static_cast<int>(view.cells.size()); ++f) {
        if (!view.poset.leq(cell, f)) continue;
        rhs = rhs + g_poly(ctx, view.poset, view.ckey, cell, f) *
                        tminus1_pow(view.dimP - view.cells[f].dim());
    }
    if (rhs.degree() > D)
        throw calc_error("h_link: defining identity inconsistent (degree overflow)");
    UniPoly h = rhs.reversed(D);
    return ctx.hlink_memo.emplace(key, std::move(h)).first->second;
}

UniPoly local_h(EvalContext& ctx, const WeightedComplex& wc, int cell) {
    std::string key = wc.ckey + "#lh" + std::to_string(cell);
    auto it = ctx.localh_memo.find(key);
    if (it != ctx.localh_memo.end()) return it->second;

    int sigma = wc.cells[cell].sigma;
    int top = wc.P_faces.top;
    UniPoly acc;
    for (int q = 0; q < static_cast<int>(wc.P_faces.faces.size()); ++q) {
        if (!wc.P_faces.poset.leq(sigma, q)) continue;
        UniPoly hq;
        if (wc.P_faces.faces[q].verts.empty()) {
            hq = UniPoly::one();  // link of the empty cell in the empty restriction
        } else {
            const WeightedComplex& rc = restricted(ctx, wc, q);
            int rcell = wc.cells[cell].poly.empty()
                            ? 0
                            : rc.cell_index(wc.cells[cell].poly.key());
            if (rcell < 0) throw calc_error("local_h: cell missing from restriction");
            hq = h_link(ctx, rc, rcell);
        }
        UniPoly term = hq * g_poly_dual(ctx, wc.P_faces.poset, "FL:" + wc.P.key(), q, top);
        int codim = wc.dimP - wc.P_faces.faces[q].dim;
        acc = (codim % 2 == 0) ? acc + term : acc - term;
    }
    return ctx.localh_memo.emplace(key, std::move(acc)).first->second;
}

UniPoly tilde_l(const UniPoly& lp, int D) {
    UniPoly out;
    if (lp.is_zero()) return out;
    if (D < 0 || lp.degree() > D)
        throw calc_error("tilde_l: polynomial does not fit symmetric degree " + std::to_string(D));
    for (int i = 0; i <= D; ++i)
        if (lp.coeff(i) != lp.coeff(D - i))
            throw calc_error("tilde_l: input is not symmetric");
    for (int i = 0; 2 * i <= D; ++i) {
        Int w = lp.coeff(i) - lp.coeff(i - 1);
        if (w < 0) throw calc_error("tilde_l: input is not unimodal");
        if (w != 0) {
            if (static_cast<int>(out.c.size()) < i + 1) out.c.resize(i + 1, 0);
            out.c[i] = w;
        }
    }
    out.trim();
    return out;
}

}  // namespace nmil
