#include "nmil/newton.hpp"

#include <algorithm>
#include <sstream>

namespace nmil {

Support Support::make(int n, std::vector<IntVec> monomials) {
    if (n < 2) throw user_error("support: need at least two variables");
    if (monomials.empty()) throw user_error("support: empty monomial set");
    for (const auto& m : monomials) {
        if (static_cast<int>(m.size()) != n) throw user_error("support: wrong exponent length");
        bool zero = true;
        for (const auto& e : m) {
            if (e < 0) throw user_error("support: negative exponent");
            if (e != 0) zero = false;
        }
        if (zero) throw user_error("support: constant term not allowed (f(0) = 0 is required)");
    }
    std::sort(monomials.begin(), monomials.end(), vec_less);
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    Support s;
    s.n = n;
    s.monomials = std::move(monomials);
    return s;
}

std::string ZetaFactors::str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (const auto& [d, e] : factors) {
        os << "(1-t^" << d << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

const CompactFace* NewtonPolyhedron::find_face(const LatticePolytope& p) const {
    for (const auto& f : compact_faces)
        if (f.poly.vertices == p.vertices) return &f;
    return nullptr;
}

NewtonPolyhedron build_newton_margin(const Support& support, const Int& extra) {
    NewtonPolyhedron np;
    np.support = support;
    np.n = support.n;
    const int n = np.n;

    Int maxc = 0;
    for (const auto& m : support.monomials)
        for (const auto& e : m) maxc = std::max(maxc, e, [](const Int& a, const Int& b) { return a < b; });
    np.M = maxc + 1 + extra;

    // model polytope: conv of all box corners of (alpha + R^n_{>=0}) cap [0,M]^n
    std::vector<IntVec> candidates;
    for (const auto& alpha : support.monomials) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            IntVec p = alpha;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) p[i] = np.M;
            candidates.push_back(p);
        }
    }
    np.model = convex_hull(n, candidates);
    if (np.model.dim != n)
        throw calc_error("newton polyhedron model is not full-dimensional");

    // genuine facets: all but the truncation facets {x_i = M} (normal -e_i)
    for (const auto& [a, c] : np.model.halfspaces) {
        bool truncation = false;
        for (int i = 0; i < n; ++i) {
            IntVec neg(n, 0);
            neg[i] = -1;
            if (a == neg && c == -np.M) truncation = true;
        }
        if (!truncation) np.facet_inequalities.emplace_back(a, c);
    }

    FaceLattice L = face_lattice(np.model);

    // classify the faces of the model
    auto touches_truncation = [&](const FaceLattice::Face& f) {
        for (int vi : f.verts)
            for (int i = 0; i < n; ++i)
                if (np.model.vertices[vi][i] == np.M) return true;
        return false;
    };
    auto inside_truncation_facet = [&](const FaceLattice::Face& f) {
        for (int i = 0; i < n; ++i) {
            bool all = !f.verts.empty();
            for (int vi : f.verts)
                if (np.model.vertices[vi][i] != np.M) all = false;
            if (all) return true;
        }
        return false;
    };

    std::vector<int> compact_ids;
    for (size_t fi = 0; fi < L.faces.size(); ++fi) {
        const auto& f = L.faces[fi];
        if (f.verts.empty()) continue;
        if (f.dim == n) continue;  // the model itself is not a face of Gamma_+(f)
        if (!touches_truncation(f)) {
            compact_ids.push_back(static_cast<int>(fi));
            continue;
        }
        if (inside_truncation_facet(f)) continue;  // truncation artifact
        NoncompactFace nc;
        IntVec usum(n, 0);
        for (int vi : f.verts) {
            nc.model_vertices.push_back(np.model.vertices[vi]);
            bool genuine = true;
            for (int i = 0; i < n; ++i)
                if (np.model.vertices[vi][i] == np.M) genuine = false;
            if (genuine) nc.generating_vertices.push_back(np.model.vertices[vi]);
        }
        for (const auto& [a, c] : np.facet_inequalities) {
            bool active = true;
            for (const auto& v : nc.model_vertices)
                if (dot(a, v) != c) active = false;
            if (active) usum = vec_add(usum, a);
        }
        for (int i = 0; i < n; ++i)
            if (usum[i] == 0) nc.recession.push_back(i);
        for (int i = 0; i < n; ++i) {
            bool all_zero = true;
            for (const auto& v : nc.model_vertices)
                if (v[i] != 0) all_zero = false;
            if (all_zero) {
                nc.in_coordinate_boundary = true;
                break;
            }
        }
        np.noncompact_proper_faces.push_back(std::move(nc));
    }

    // compact faces with their lattice data and supporting forms
    for (int fi : compact_ids) {
        const auto& f = L.faces[fi];
        CompactFace cf;
        std::vector<IntVec> verts;
        for (int vi : f.verts) verts.push_back(np.model.vertices[vi]);
        cf.poly = convex_hull(n, verts);

        // proof obligation for the truncation: every vertex of a compact face
        // of Gamma_+(f) is a support point, so its coordinates are <= M - 1
        for (const auto& v : cf.poly.vertices) {
            if (std::find(support.monomials.begin(), support.monomials.end(), v) ==
                support.monomials.end())
                throw calc_error("compact face vertex " + vec_str(v) + " is not a support point");
        }

        cf.d = lattice_distance(cf.poly);
        IntVec usum(n, 0);
        for (const auto& [a, c] : np.facet_inequalities) {
            bool active = true;
            for (const auto& v : cf.poly.vertices)
                if (dot(a, v) != c) active = false;
            if (active) usum = vec_add(usum, a);
        }
        for (int i = 0; i < n; ++i)
            if (usum[i] <= 0) throw calc_error("compact face without strictly positive normal");
        cf.u = primitive(usum);
        cf.c = dot(cf.u, cf.poly.vertices[0]);
        for (const auto& v : cf.poly.vertices)
            if (dot(cf.u, v) != cf.c) throw calc_error("supporting form not constant on face");

        for (int i = 0; i < n; ++i) {
            bool nonzero = false;
            for (const auto& v : cf.poly.vertices)
                if (v[i] != 0) nonzero = true;
            if (nonzero) cf.I.push_back(i);
        }
        cf.s = static_cast<int>(cf.I.size());

        // extremal: lies under a noncompact proper face not inside the boundary
        for (const auto& nc : np.noncompact_proper_faces) {
            if (nc.in_coordinate_boundary) continue;
            bool sub = true;
            for (const auto& v : cf.poly.vertices) {
                if (std::find(nc.model_vertices.begin(), nc.model_vertices.end(), v) ==
                    nc.model_vertices.end())
                    sub = false;
            }
            if (sub) {
                cf.extremal = true;
                break;
            }
        }
        np.compact_faces.push_back(std::move(cf));
    }
    std::sort(np.compact_faces.begin(), np.compact_faces.end(),
              [](const CompactFace& a, const CompactFace& b) {
                  if (a.poly.dim != b.poly.dim) return a.poly.dim < b.poly.dim;
                  return std::lexicographical_compare(a.poly.vertices.begin(), a.poly.vertices.end(),
                                                      b.poly.vertices.begin(), b.poly.vertices.end(),
                                                      vec_less);
              });
    for (auto& f : np.compact_faces) {
        f.maximal = true;
        for (const auto& g : np.compact_faces) {
            if (&f == &g || g.poly.dim <= f.poly.dim) continue;
            bool sub = true;
            for (const auto& v : f.poly.vertices)
                if (std::find(g.poly.vertices.begin(), g.poly.vertices.end(), v) ==
                    g.poly.vertices.end())
                    sub = false;
            if (sub) {
                f.maximal = false;
                break;
            }
        }
    }

    // convenient: a pure power of every variable appears
    np.convenient = true;
    for (int i = 0; i < n; ++i) {
        bool axis = false;
        for (const auto& m : support.monomials) {
            bool pure = m[i] > 0;
            for (int j = 0; j < n && pure; ++j)
                if (j != i && m[j] != 0) pure = false;
            if (pure) axis = true;
        }
        if (!axis) np.convenient = false;
    }

    // dim of P = conv(Gamma_f cup {0}) = rank of the span of the vertices
    std::vector<IntVec> vert_rows;
    for (const auto& f : np.compact_faces)
        if (f.poly.dim == 0) vert_rows.push_back(f.poly.vertices[0]);
    np.dimP = rank_of(vert_rows);
    return np;
}

NewtonPolyhedron build_newton(const Support& support) { return build_newton_margin(support, 0); }

std::vector<const CompactFace*> zeta_contributors(const NewtonPolyhedron& np) {
    std::vector<const CompactFace*> out;
    for (const auto& f : np.compact_faces)
        if (f.poly.dim == f.s - 1) out.push_back(&f);
    return out;
}

std::vector<RotationNumber> bad_eigenvalues(const NewtonPolyhedron& np) {
    std::set<RotationNumber> out;
    for (const auto& f : np.compact_faces) {
        if (!f.extremal) continue;
        long d = to_long(f.d);
        for (long k = 0; k < d; ++k) out.insert(RotationNumber(Rat(k, d)));
    }
    return {out.begin(), out.end()};
}

bool in_bad_set(const NewtonPolyhedron& np, const RotationNumber& lambda) {
    for (const auto& f : np.compact_faces)
        if (f.extremal && f.d % lambda.order() == 0) return true;
    return false;
}

ZetaFactors zeta(const NewtonPolyhedron& np) {
    ZetaFactors z;
    const int n = np.n;
    // literal loop over nonempty I: the (|I|-1)-dimensional compact faces of
    // R^I cap Gamma_+(f) are the compact faces F with I_F inside I
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        for (const auto& f : np.compact_faces) {
            if (f.poly.dim != size - 1) continue;
            bool inside = true;
            for (int i : f.I)
                if (!(mask & (1u << i))) inside = false;
            if (!inside) continue;
            Int vol = normalized_volume(f.poly);
            Int expo = (size % 2 == 1) ? vol : -vol;
            z.factors[f.d] += expo;
        }
    }
    for (auto it = z.factors.begin(); it != z.factors.end();)
        it = (it->second == 0) ? z.factors.erase(it) : std::next(it);
    return z;
}

Int multiplicity(const NewtonPolyhedron& np, const RotationNumber& lambda) {
    if (in_bad_set(np, lambda))
        throw user_error("multiplicity formula is not licensed for lambda in R_f");
    if (np.dimP != np.n)
        throw user_error("multiplicity requires dim P = n");
    Int mult = 0;
    for (const auto* f : zeta_contributors(np)) {
        if (f->d % lambda.order() != 0) continue;
        Int vol = normalized_volume(f->poly);
        mult += ((np.n - f->s) % 2 == 0) ? vol : -vol;
    }
    return mult;
}

std::vector<RotationNumber> good_eigenvalues(const NewtonPolyhedron& np) {
    std::set<RotationNumber> out;
    for (const auto* f : zeta_contributors(np)) {
        long d = to_long(f->d);
        for (long k = 0; k < d; ++k) {
            RotationNumber r{Rat(k, d)};
            if (!in_bad_set(np, r)) out.insert(r);
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace nmil
