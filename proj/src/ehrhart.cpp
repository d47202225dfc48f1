#include "nmil/ehrhart.hpp"

#include <sstream>

namespace nmil {

Rat NuFn::eval_scaled(const IntVec& v, long m) const {
    if (affine) return affine->eval_scaled(v, m);
    return piecewise->nu_scaled(v, m);
}

std::string NuFn::key() const {
    if (affine) return "aff:" + affine->key();
    return piecewise->nu_key();
}

namespace {

bool in_dilate(const LatticePolytope& poly, const IntVec& v, long m) {
    if (m == 0) return vec_is_zero(v);
    if (poly.empty()) return false;
    for (const auto& [e, c] : poly.equations)
        if (dot(e, v) != c * m) return false;
    for (const auto& [a, c] : poly.halfspaces)
        if (dot(a, v) < c * m) return false;
    if (poly.dim == 0) return v == vec_scale(poly.vertices[0], m);
    return true;
}

const std::map<Rat, Int>& residue_histogram(EvalContext& ctx, const LatticePolytope& poly,
                                            const NuFn& nu, long m) {
    std::ostringstream ks;
    ks << poly.key() << "#" << nu.key() << "#m" << m;
    std::string key = ks.str();
    auto it = ctx.hist_memo.find(key);
    if (it != ctx.hist_memo.end()) return it->second;
    std::map<Rat, Int> hist;
    for (const auto& v : lattice_points(poly, m)) hist[mod1(nu.eval_scaled(v, m))] += 1;
    return ctx.hist_memo.emplace(key, std::move(hist)).first->second;
}

Int epsilon(const RotationNumber& lambda) { return lambda.is_one() ? 1 : 0; }

}  // namespace

int weight(const LatticePolytope& poly, const NuFn& nu, const IntVec& v, long m,
           const RotationNumber& lambda) {
    if (!in_dilate(poly, v, m)) throw user_error("weight: point is not in the m-th dilate");
    return mod1(nu.eval_scaled(v, m)) == lambda.theta ? 1 : 0;
}

Int f_lambda(EvalContext& ctx, const LatticePolytope& poly, const NuFn& nu, long m,
             const RotationNumber& lambda) {
    if (poly.empty()) return m == 0 ? epsilon(lambda) : Int(0);
    const auto& hist = residue_histogram(ctx, poly, nu, m);
    auto it = hist.find(lambda.theta);
    return it == hist.end() ? Int(0) : it->second;
}

UniPoly hstar1(EvalContext& ctx, const LatticePolytope& poly, const NuFn& nu,
               const RotationNumber& lambda) {
    std::ostringstream ks;
    ks << poly.key() << "#" << nu.key() << "#t" << lambda.str();
    std::string key = ks.str();
    auto hit = ctx.hstar1_memo.find(key);
    if (hit != ctx.hstar1_memo.end()) return hit->second;

    UniPoly h;
    if (poly.empty()) {
        h = UniPoly::constant(epsilon(lambda));
    } else {
        const int d = poly.dim;
        std::vector<Int> f(d + 1);
        for (int m = 0; m <= d; ++m) f[m] = f_lambda(ctx, poly, nu, m, lambda);

        // h*_j = sum_i (-1)^i C(d+1, i) f(j - i)
        h.c.assign(d + 1, 0);
        for (int j = 0; j <= d; ++j) {
            Int s = 0;
            for (int i = 0; i <= j; ++i) {
                Int b = binomial(d + 1, i) * f[j - i];
                s += (i % 2 == 0) ? b : -b;
            }
            h.c[j] = s;
        }
        h.trim();

        // enforce the polynomiality of f_lambda: the degree-<=d interpolation
        // must reproduce the direct counts at d+1 .. 2d+2
        std::vector<Int> diff = f;  // forward differences at 0
        for (int k = 1; k <= d; ++k)
            for (int j = d; j >= k; --j) diff[j] = diff[j] - diff[j - 1];
        for (long m = d + 1; m <= 2 * d + 2; ++m) {
            Int predicted = 0;
            for (int k = 0; k <= d; ++k) predicted += binomial(m, k) * diff[k];
            Int actual = f_lambda(ctx, poly, nu, m, lambda);
            if (predicted != actual)
                throw calc_error("weighted count is not a polynomial of degree dim P (dilate " +
                                 std::to_string(m) + ")");
        }
    }
    return ctx.hstar1_memo.emplace(key, std::move(h)).first->second;
}

UniPoly lstar1(EvalContext& ctx, const LatticePolytope& poly, const NuFn& nu,
               const RotationNumber& lambda) {
    std::ostringstream ks;
    ks << poly.key() << "#" << nu.key() << "#t" << lambda.str();
    std::string key = ks.str();
    auto hit = ctx.lstar1_memo.find(key);
    if (hit != ctx.lstar1_memo.end()) return hit->second;

    UniPoly acc;
    if (poly.empty()) {
        acc = UniPoly::constant(epsilon(lambda));
    } else {
        const FaceLattice& L = faces_of(ctx, poly);
        std::string pkey = "FL:" + poly.key();
        for (int q = 0; q < static_cast<int>(L.faces.size()); ++q) {
            UniPoly hq = L.faces[q].verts.empty()
                             ? UniPoly::constant(epsilon(lambda))
                             : hstar1(ctx, L.face_polytope(q), nu, lambda);
            UniPoly term = hq * g_poly_dual(ctx, L.poset, pkey, q, L.top);
            int codim = poly.dim - L.faces[q].dim;
            acc = (codim % 2 == 0) ? acc + term : acc - term;
        }
    }
    return ctx.lstar1_memo.emplace(key, std::move(acc)).first->second;
}

namespace {

// v^{dim F + 1} * p(u v^{-1}) as a Laurent polynomial
Laurent2 cone_spread(const UniPoly& p, int dimF) {
    Laurent2 out;
    for (int k = 0; k <= p.degree(); ++k)
        out.add({k, dimF + 1 - k}, p.coeff(k));
    return out;
}

// q(uv) placed into two variables
Laurent2 diag_uv(const UniPoly& q) {
    Laurent2 out;
    for (int k = 0; k <= q.degree(); ++k) out.add({k, k}, q.coeff(k));
    return out;
}

UniPoly cell_lstar1(EvalContext& ctx, const WeightedComplex& wc, int cell,
                    const RotationNumber& lambda) {
    const Cell& c = wc.cells[cell];
    if (c.poly.empty()) return UniPoly::constant(epsilon(lambda));
    return lstar1(ctx, c.poly, nu_of(c.nu), lambda);
}

}  // namespace

Laurent2 hstar2(EvalContext& ctx, const WeightedComplex& wc, const RotationNumber& lambda) {
    Laurent2 acc;
    for (int f = 0; f < static_cast<int>(wc.cells.size()); ++f) {
        UniPoly l1 = cell_lstar1(ctx, wc, f, lambda);
        if (l1.is_zero()) continue;
        acc = acc + cone_spread(l1, wc.cells[f].dim()) * diag_uv(h_link(ctx, wc, f));
    }
    if (!acc.nonnegative_exponents())
        throw calc_error("hstar2: negative exponent survives the cell sum");
    return acc;
}

Laurent2 lstar2(EvalContext& ctx, const WeightedComplex& wc, const RotationNumber& lambda) {
    Laurent2 acc;
    for (int f = 0; f < static_cast<int>(wc.cells.size()); ++f) {
        UniPoly l1 = cell_lstar1(ctx, wc, f, lambda);
        if (l1.is_zero()) continue;
        acc = acc + cone_spread(l1, wc.cells[f].dim()) * diag_uv(local_h(ctx, wc, f));
    }
    if (!acc.nonnegative_exponents())
        throw calc_error("lstar2: negative exponent survives the cell sum");
    return acc;
}

Laurent3 hstar3(EvalContext& ctx, const WeightedComplex& wc, const RotationNumber& lambda) {
    Laurent3 acc;
    std::string pkey = "FL:" + wc.P.key();
    for (int q = 0; q < static_cast<int>(wc.P_faces.faces.size()); ++q) {
        Laurent2 l2;
        if (wc.P_faces.faces[q].verts.empty()) {
            l2 = laurent2_const(epsilon(lambda));
        } else {
            l2 = lstar2(ctx, restricted(ctx, wc, q), lambda);
        }
        if (l2.is_zero()) continue;
        UniPoly g = g_poly(ctx, wc.P_faces.poset, pkey, q, wc.P_faces.top);
        int dQ1 = wc.P_faces.faces[q].dim + 1;
        for (int k = 0; k <= g.degree(); ++k) {
            if (g.coeff(k) == 0) continue;
            for (const auto& [m, v] : l2.c)
                acc.add({m[0] + k, m[1] + k, dQ1 + 2 * k}, v * g.coeff(k));
        }
    }
    if (!acc.nonnegative_exponents())
        throw calc_error("hstar3: negative exponent survives the face sum");
    return acc;
}

std::pair<Laurent3, Laurent2> simplex_box_oracle(const LatticePolytope& poly,
                                                 const AffineForm& nu,
                                                 const RotationNumber& lambda) {
    if (poly.empty()) throw user_error("simplex_box_oracle: empty polytope");
    const int d = poly.dim;
    if (static_cast<int>(poly.vertices.size()) != d + 1)
        throw user_error("simplex_box_oracle: polytope is not a simplex");
    const int n = poly.ambient;

    std::vector<IntVec> rays;  // lifted generators (vertex, 1)
    for (const auto& v : poly.vertices) {
        IntVec r = v;
        r.push_back(1);
        rays.push_back(r);
    }

    // half-open parallelepiped scan
    IntVec lo(n + 1, 0), hi(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        for (const auto& r : rays) {
            if (r[j] < 0) lo[j] += r[j];
            if (r[j] > 0) hi[j] += r[j];
        }
    }
    Laurent3 h3;
    Laurent2 l2;
    IntVec z = lo;
    for (;;) {
        auto a = solve_combination(rays, z);
        if (a) {
            bool box = true;
            std::vector<int> support;
            for (size_t i = 0; i < a->size(); ++i) {
                if ((*a)[i] < 0 || (*a)[i] >= 1) {
                    box = false;
                    break;
                }
                if ((*a)[i] > 0) support.push_back(static_cast<int>(i));
            }
            if (box) {
                long m = to_long(z[n]);
                IntVec x(z.begin(), z.end() - 1);
                Rat residue = (m == 0) ? Rat(0) : mod1(nu.eval_scaled(x, m));
                if (residue == lambda.theta) {
                    int dQ1 = static_cast<int>(support.size());  // dim Q + 1
                    h3.add({m, dQ1 - static_cast<int>(m), dQ1}, 1);
                    if (dQ1 == d + 1) l2.add({m, dQ1 - static_cast<int>(m)}, 1);
                }
            }
        }
        int j = n;
        while (j >= 0) {
            if (z[j] < hi[j]) {
                ++z[j];
                break;
            }
            z[j] = lo[j];
            --j;
        }
        if (j < 0) break;
    }
    return {h3, l2};
}

}  // namespace nmil
