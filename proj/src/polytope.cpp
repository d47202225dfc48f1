#include "nmil/polytope.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nmil {

bool LatticePolytope::contains(const RatVec& x) const {
    if (empty()) return false;
    for (const auto& [e, c] : equations)
        if (dot_rat(e, x) != Rat(c)) return false;
    for (const auto& [a, c] : halfspaces)
        if (dot_rat(a, x) < Rat(c)) return false;
    if (dim == 0) {
        for (int i = 0; i < ambient; ++i)
            if (x[i] != Rat(vertices[0][i])) return false;
    }
    return true;
}

bool LatticePolytope::contains_int(const IntVec& x) const { return contains(to_rat(x)); }

std::string LatticePolytope::key() const {
    std::ostringstream os;
    os << ambient << "|";
    for (const auto& v : vertices) os << vec_str(v);
    return os.str();
}

std::vector<IntVec> cone_rays(std::vector<IntVec> constraints, int k) {
    // drop zero rows, dedupe
    {
        std::vector<IntVec> tmp;
        std::set<IntVec> seen;
        for (auto& c : constraints) {
            if (vec_is_zero(c)) continue;
            IntVec p = primitive(c);
            if (seen.insert(p).second) tmp.push_back(p);
        }
        constraints = std::move(tmp);
    }
    if (rank_of(constraints) != k) throw calc_error("cone_rays: cone is not pointed");

    // initial simplicial subcone from k independent constraints
    std::vector<int> init;
    std::vector<IntVec> picked;
    for (int i = 0; i < static_cast<int>(constraints.size()) && static_cast<int>(init.size()) < k;
         ++i) {
        picked.push_back(constraints[i]);
        if (rank_of(picked) == static_cast<int>(picked.size()))
            init.push_back(i);
        else
            picked.pop_back();
    }

    // rays r_j with <c_i, r_j> = delta_ij: columns of the inverse, cleared to integers
    std::vector<IntVec> rays;
    {
        std::vector<RatVec> M(k, RatVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) M[i][j] = Rat(constraints[init[i]][j]);
        for (int j = 0; j < k; ++j) {
            RatVec e(k, Rat(0));
            e[j] = 1;
            RatVec sol = solve_square(M, e);
            Int lcm = 1;
            for (const auto& q : sol) lcm = lcm / int_gcd(lcm, rat_den(q)) * rat_den(q);
            IntVec r(k);
            for (int i = 0; i < k; ++i) r[i] = rat_num(sol[i]) * (lcm / rat_den(sol[i]));
            rays.push_back(primitive(r));
        }
    }

    std::vector<int> processed = init;
    auto active_set = [&](const IntVec& ray) {
        std::vector<char> act(processed.size());
        for (size_t i = 0; i < processed.size(); ++i)
            act[i] = (dot(constraints[processed[i]], ray) == 0) ? 1 : 0;
        return act;
    };

    for (int ci = 0; ci < static_cast<int>(constraints.size()); ++ci) {
        if (std::find(init.begin(), init.end(), ci) != init.end()) continue;
        const IntVec& c = constraints[ci];
        std::vector<Int> val(rays.size());
        bool has_neg = false;
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(c, rays[i]);
            if (val[i] < 0) has_neg = true;
        }
        if (has_neg) {
            std::vector<std::vector<char>> act;
            act.reserve(rays.size());
            for (const auto& r : rays) act.push_back(active_set(r));

            std::vector<IntVec> next;
            for (size_t i = 0; i < rays.size(); ++i)
                if (val[i] >= 0) next.push_back(rays[i]);
            std::set<IntVec> fresh;
            for (size_t p = 0; p < rays.size(); ++p) {
                if (val[p] <= 0) continue;
                for (size_t q = 0; q < rays.size(); ++q) {
                    if (val[q] >= 0) continue;
                    // adjacency: common active constraints have rank k-2
                    std::vector<IntVec> common;
                    for (size_t t = 0; t < processed.size(); ++t)
                        if (act[p][t] && act[q][t]) common.push_back(constraints[processed[t]]);
                    if (rank_of(common) != k - 2) continue;
                    IntVec nr = vec_sub(vec_scale(rays[q], val[p]), vec_scale(rays[p], val[q]));
                    fresh.insert(primitive(nr));
                }
            }
            for (const auto& r : fresh) next.push_back(r);
            rays = std::move(next);
        }
        processed.push_back(ci);
    }
    std::sort(rays.begin(), rays.end(), vec_less);
    return rays;
}

LatticePolytope convex_hull(int ambient, std::vector<IntVec> pts) {
    LatticePolytope P;
    P.ambient = ambient;
    std::sort(pts.begin(), pts.end(), vec_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return P;

    P.base = pts[0];
    std::vector<IntVec> dirs;
    for (const auto& p : pts) dirs.push_back(vec_sub(p, P.base));
    P.lattice_basis = hermite_basis(dirs, ambient);
    P.dim = static_cast<int>(P.lattice_basis.size());
    for (const auto& e : integer_kernel(dirs, ambient))
        P.equations.emplace_back(e, dot(e, P.base));

    if (P.dim == 0) {
        P.vertices = {pts[0]};
        P.vertex_coords = {IntVec{}};
        return P;
    }
    const int d = P.dim;

    // hull coordinates of every candidate point
    std::vector<IntVec> coords;
    for (const auto& p : pts) {
        auto sol = solve_combination(P.lattice_basis, vec_sub(p, P.base));
        if (!sol) throw calc_error("convex_hull: point outside affine hull");
        IntVec y(d);
        for (int i = 0; i < d; ++i) {
            if (rat_den((*sol)[i]) != 1) throw calc_error("convex_hull: non-integral coordinate");
            y[i] = rat_num((*sol)[i]);
        }
        coords.push_back(y);
    }

    // facets of conv(coords): extreme rays of the dual cone {(a,b): a.y + b >= 0}
    std::vector<IntVec> dual;
    for (const auto& y : coords) {
        IntVec c = y;
        c.push_back(1);
        dual.push_back(c);
    }
    std::vector<IntVec> facet_rays = cone_rays(dual, d + 1);

    // facets in hull coordinates: <a,y> >= -b
    for (const auto& r : facet_rays) {
        IntVec a(r.begin(), r.end() - 1);
        P.coord_halfspaces.emplace_back(a, -r.back());
    }

    // vertex test: active facet normals span R^d
    std::vector<int> vert_ids;
    for (size_t i = 0; i < coords.size(); ++i) {
        std::vector<IntVec> act;
        for (const auto& [a, b] : P.coord_halfspaces)
            if (dot(a, coords[i]) == b) act.push_back(a);
        if (rank_of(act) == d) vert_ids.push_back(static_cast<int>(i));
    }
    for (int id : vert_ids) {
        P.vertices.push_back(pts[id]);
        P.vertex_coords.push_back(coords[id]);
    }

    // lift facet normals to primitive ambient functionals
    std::vector<IntVec> basis_cols;  // columns of the basis matrix, length d each
    for (int j = 0; j < ambient; ++j) {
        IntVec col(d);
        for (int i = 0; i < d; ++i) col[i] = P.lattice_basis[i][j];
        basis_cols.push_back(col);
    }
    for (const auto& [a, b] : P.coord_halfspaces) {
        auto sol = solve_combination(basis_cols, a);
        if (!sol) throw calc_error("convex_hull: cannot lift facet normal");
        Int lcm = 1;
        for (const auto& q : *sol) lcm = lcm / int_gcd(lcm, rat_den(q)) * rat_den(q);
        IntVec A(ambient);
        for (int j = 0; j < ambient; ++j) A[j] = rat_num((*sol)[j]) * (lcm / rat_den((*sol)[j]));
        A = primitive(A);
        Int c = dot(A, P.vertices[0]);
        for (const auto& v : P.vertices) c = std::min(c, dot(A, v), [](const Int& x, const Int& y) {
            return x < y;
        });
        // orientation: <A,.> must agree with <a,.> up to positive scale on the hull
        Int lo = dot(a, P.vertex_coords[0]), hi = lo;
        int lo_at = 0;
        for (size_t i = 1; i < P.vertex_coords.size(); ++i) {
            Int t = dot(a, P.vertex_coords[i]);
            if (t < lo) {
                lo = t;
                lo_at = static_cast<int>(i);
            }
            if (t > hi) hi = t;
        }
        if (dot(A, P.vertices[lo_at]) != c) A = primitive(vec_scale(A, -1));
        c = dot(A, P.vertices[0]);
        for (const auto& v : P.vertices)
            if (dot(A, v) < c) c = dot(A, v);
        P.halfspaces.emplace_back(A, c);
    }
    std::sort(P.halfspaces.begin(), P.halfspaces.end());
    std::sort(P.coord_halfspaces.begin(), P.coord_halfspaces.end());

    // re-sort vertices lex together with their coordinates
    std::vector<int> order(P.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return vec_less(P.vertices[x], P.vertices[y]); });
    std::vector<IntVec> vs, cs;
    for (int i : order) {
        vs.push_back(P.vertices[i]);
        cs.push_back(P.vertex_coords[i]);
    }
    P.vertices = std::move(vs);
    P.vertex_coords = std::move(cs);
    return P;
}

std::vector<RatVec> enumerate_vertices(int ambient,
                                       const std::vector<std::pair<IntVec, Int>>& equations,
                                       const std::vector<std::pair<IntVec, Int>>& inequalities) {
    // homogenize: rays of {(x,t): Ex = ct, Ax >= ct, t >= 0}
    std::vector<IntVec> cons;
    auto push = [&](const IntVec& a, const Int& c, bool both) {
        IntVec v = a;
        v.push_back(-c);
        cons.push_back(v);
        if (both) {
            IntVec w(v.size());
            for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
            cons.push_back(w);
        }
    };
    for (const auto& [e, c] : equations) push(e, c, true);
    for (const auto& [a, c] : inequalities) push(a, c, false);
    {
        IntVec t(ambient + 1, 0);
        t[ambient] = 1;
        cons.push_back(t);
    }
    auto rays = cone_rays(cons, ambient + 1);
    std::vector<RatVec> verts;
    for (const auto& r : rays) {
        if (r[ambient] == 0) {
            if (vec_is_zero(r)) continue;
            throw calc_error("enumerate_vertices: unbounded constraint system");
        }
        RatVec x(ambient);
        for (int i = 0; i < ambient; ++i) x[i] = Rat(r[i], r[ambient]);
        verts.push_back(x);
    }
    return verts;
}

std::vector<IntVec> lattice_points(const LatticePolytope& poly, long m) {
    if (m < 0) throw user_error("lattice_points: negative dilate");
    if (m == 0) return {IntVec(poly.ambient, 0)};
    if (poly.empty()) return {};
    if (poly.dim == 0) return {vec_scale(poly.vertices[0], m)};

    const int d = poly.dim;
    IntVec lo(d), hi(d);
    for (int r = 0; r < d; ++r) {
        Int mn = poly.vertex_coords[0][r], mx = mn;
        for (const auto& y : poly.vertex_coords) {
            mn = std::min(mn, y[r], [](const Int& a, const Int& b) { return a < b; });
            mx = std::max(mx, y[r], [](const Int& a, const Int& b) { return a < b; });
        }
        lo[r] = mn * m;
        hi[r] = mx * m;
    }

    std::vector<IntVec> out;
    IntVec y = lo;
    IntVec mbase = vec_scale(poly.base, m);
    for (;;) {
        bool inside = true;
        for (const auto& [a, b] : poly.coord_halfspaces) {
            if (dot(a, y) < b * m) {
                inside = false;
                break;
            }
        }
        if (inside) {
            IntVec x = mbase;
            for (int r = 0; r < d; ++r)
                for (int j = 0; j < poly.ambient; ++j) x[j] += y[r] * poly.lattice_basis[r][j];
            out.push_back(x);
        }
        int r = d - 1;
        while (r >= 0) {
            if (y[r] < hi[r]) {
                ++y[r];
                break;
            }
            y[r] = lo[r];
            --r;
        }
        if (r < 0) break;
    }
    std::sort(out.begin(), out.end(), vec_less);
    return out;
}

namespace {

// triangulation by recursive apexing; returns tuples of vertex indices into poly.vertices
void triangulate_rec(const LatticePolytope& poly, const std::vector<int>& global_ids, bool apex_max,
                     std::vector<std::vector<int>>& out) {
    if (poly.dim == 0) {
        out.push_back({global_ids[0]});
        return;
    }
    int apex = 0;
    for (size_t i = 1; i < poly.vertices.size(); ++i) {
        bool better = apex_max ? vec_less(poly.vertices[apex], poly.vertices[i])
                               : vec_less(poly.vertices[i], poly.vertices[apex]);
        if (better) apex = static_cast<int>(i);
    }
    for (const auto& [a, c] : poly.halfspaces) {
        if (dot(a, poly.vertices[apex]) == c) continue;  // facet contains the apex
        std::vector<IntVec> fverts;
        std::vector<int> fids;
        for (size_t i = 0; i < poly.vertices.size(); ++i) {
            if (dot(a, poly.vertices[i]) == c) {
                fverts.push_back(poly.vertices[i]);
                fids.push_back(global_ids[i]);
            }
        }
        LatticePolytope F = convex_hull(poly.ambient, fverts);
        // hull re-sorts vertices; rebuild the id map
        std::vector<int> ids;
        for (const auto& v : F.vertices) {
            for (size_t i = 0; i < fverts.size(); ++i)
                if (fverts[i] == v) {
                    ids.push_back(fids[i]);
                    break;
                }
        }
        std::vector<std::vector<int>> sub;
        triangulate_rec(F, ids, apex_max, sub);
        for (auto& s : sub) {
            s.push_back(global_ids[apex]);
            out.push_back(s);
        }
    }
}

Int volume_from_triangulation(const LatticePolytope& poly, bool apex_max) {
    if (poly.empty()) throw user_error("normalized_volume: empty polytope");
    if (poly.dim == 0) return 1;
    std::vector<int> ids(poly.vertices.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::vector<std::vector<int>> simplices;
    triangulate_rec(poly, ids, apex_max, simplices);
    Int total = 0;
    for (const auto& s : simplices) {
        std::vector<IntVec> rows;
        for (size_t i = 1; i < s.size(); ++i)
            rows.push_back(vec_sub(poly.vertex_coords[s[i]], poly.vertex_coords[s[0]]));
        Int v = det(rows);
        total += v < 0 ? -v : v;
    }
    return total;
}

}  // namespace

Int normalized_volume(const LatticePolytope& poly) { return volume_from_triangulation(poly, false); }
Int normalized_volume_alt(const LatticePolytope& poly) {
    return volume_from_triangulation(poly, true);
}

LevelForm level_form(const LatticePolytope& face) {
    if (face.empty()) throw user_error("level_form: empty face");
    LevelForm lf;
    lf.span_basis = hermite_basis(face.vertices, face.ambient);
    int r = static_cast<int>(lf.span_basis.size());
    if (r != face.dim + 1)
        throw user_error("lattice distance undefined: affine hull contains the origin");
    // integral coordinates of the vertices in the span lattice
    std::vector<IntVec> cvs;
    for (const auto& v : face.vertices) {
        auto sol = solve_combination(lf.span_basis, v);
        if (!sol) throw calc_error("level_form: vertex outside span");
        IntVec c(r);
        for (int i = 0; i < r; ++i) {
            if (rat_den((*sol)[i]) != 1) throw calc_error("level_form: non-integral coordinate");
            c[i] = rat_num((*sol)[i]);
        }
        cvs.push_back(c);
    }
    std::vector<IntVec> diffs;
    for (size_t i = 1; i < cvs.size(); ++i) diffs.push_back(vec_sub(cvs[i], cvs[0]));
    auto ker = integer_kernel(diffs, r);
    if (ker.size() != 1) throw calc_error("level_form: affine hull is not a hyperplane of the span");
    lf.phi = ker[0];
    lf.d = dot(lf.phi, cvs[0]);
    if (lf.d < 0) {
        lf.phi = vec_scale(lf.phi, -1);
        lf.d = -lf.d;
    }
    if (lf.d == 0) throw user_error("lattice distance undefined: affine hull contains the origin");
    return lf;
}

std::optional<Rat> LevelForm::level(const IntVec& v) const {
    auto sol = solve_combination(span_basis, v);
    if (!sol) return std::nullopt;
    Rat s = 0;
    for (size_t i = 0; i < phi.size(); ++i) {
        if (rat_den((*sol)[i]) != 1) return std::nullopt;
        s += Rat(phi[i]) * (*sol)[i];
    }
    return s / Rat(d);
}

Int lattice_distance(const LatticePolytope& face) { return level_form(face).d; }

bool FaceLattice::leq(int a, int b) const { return poset.leq(a, b); }

const LatticePolytope& FaceLattice::face_polytope(int idx) const {
    if (cache_.empty()) cache_.resize(faces.size());
    if (!cache_[idx]) {
        std::vector<IntVec> verts;
        for (int v : faces[idx].verts) verts.push_back(poly.vertices[v]);
        cache_[idx] = std::make_shared<LatticePolytope>(convex_hull(poly.ambient, verts));
    }
    return *cache_[idx];
}

FaceLattice face_lattice(const LatticePolytope& poly) {
    if (poly.empty()) throw user_error("face_lattice: empty polytope");
    FaceLattice L;
    L.poly = poly;

    std::set<std::vector<int>> sets;
    std::vector<int> full(poly.vertices.size());
    for (size_t i = 0; i < full.size(); ++i) full[i] = static_cast<int>(i);
    sets.insert(full);
    sets.insert(std::vector<int>());

    std::vector<std::vector<int>> facets;
    for (const auto& [a, c] : poly.halfspaces) {
        std::vector<int> f;
        for (size_t i = 0; i < poly.vertices.size(); ++i)
            if (dot(a, poly.vertices[i]) == c) f.push_back(static_cast<int>(i));
        facets.push_back(f);
        sets.insert(f);
    }
    // closure under intersections with facets
    std::vector<std::vector<int>> queue(sets.begin(), sets.end());
    while (!queue.empty()) {
        auto s = queue.back();
        queue.pop_back();
        for (const auto& f : facets) {
            std::vector<int> inter;
            std::set_intersection(s.begin(), s.end(), f.begin(), f.end(),
                                  std::back_inserter(inter));
            if (sets.insert(inter).second) queue.push_back(inter);
        }
    }

    for (const auto& s : sets) {
        FaceLattice::Face f;
        f.verts = s;
        if (s.empty()) {
            f.dim = -1;
        } else {
            std::vector<IntVec> dirs;
            for (size_t i = 1; i < s.size(); ++i)
                dirs.push_back(vec_sub(poly.vertices[s[i]], poly.vertices[s[0]]));
            f.dim = rank_of(dirs);
        }
        L.faces.push_back(f);
    }
    std::sort(L.faces.begin(), L.faces.end(), [](const auto& x, const auto& y) {
        if (x.dim != y.dim) return x.dim < y.dim;
        return x.verts < y.verts;
    });
    for (size_t i = 0; i < L.faces.size(); ++i)
        if (L.faces[i].dim == poly.dim) L.top = static_cast<int>(i);

    int n = static_cast<int>(L.faces.size());
    L.poset.rank.resize(n);
    L.poset.leq_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
        L.poset.rank[i] = L.faces[i].dim + 1;
        for (int j = 0; j < n; ++j)
            L.poset.leq_[i][j] = std::includes(L.faces[j].verts.begin(), L.faces[j].verts.end(),
                                               L.faces[i].verts.begin(), L.faces[i].verts.end())
                                     ? 1
                                     : 0;
    }
    return L;
}

}  // namespace nmil
