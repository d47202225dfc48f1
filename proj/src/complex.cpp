#include "nmil/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nmil {

Rat AffineForm::eval(const RatVec& x) const {
    Rat s = cst;
    for (size_t i = 0; i < lin.size(); ++i) s += lin[i] * x[i];
    return s;
}

Rat AffineForm::eval_scaled(const IntVec& v, long m) const {
    if (m == 0) {
        if (!vec_is_zero(v)) throw calc_error("eval_scaled: dilate 0 admits only the origin");
        return Rat(0);
    }
    Rat s = cst * m;
    for (size_t i = 0; i < lin.size(); ++i) s += lin[i] * Rat(v[i]);
    return s;
}

std::string AffineForm::key() const {
    std::ostringstream os;
    for (const auto& q : lin) os << rat_str(q) << ",";
    os << ";" << rat_str(cst);
    return os.str();
}

AffineForm zero_form(int n) { return AffineForm{RatVec(n, Rat(0)), Rat(0)}; }
AffineForm constant_form(int n, const Rat& c) { return AffineForm{RatVec(n, Rat(0)), c}; }

AffineForm linear_form(const IntVec& u, const Int& c) {
    AffineForm f;
    f.cst = 0;
    f.lin.resize(u.size());
    for (size_t i = 0; i < u.size(); ++i) f.lin[i] = Rat(u[i], c);
    return f;
}

Rat WeightedComplex::nu(const RatVec& x) const {
    if (!closed_form) return global_nu.eval(x);
    Rat best = 1;
    for (const auto& [u, c] : forms) best = std::min(best, dot_rat(u, x) / Rat(c));
    return best;
}

Rat WeightedComplex::nu_scaled(const IntVec& v, long m) const {
    if (m == 0) {
        if (!vec_is_zero(v)) throw calc_error("nu_scaled: dilate 0 admits only the origin");
        return Rat(0);
    }
    if (!closed_form) return global_nu.eval_scaled(v, m);
    Rat best = m;
    for (const auto& [u, c] : forms) best = std::min(best, Rat(dot(u, v), c));
    return best;
}

int WeightedComplex::cell_index(const std::string& poly_key) const {
    for (size_t i = 0; i < cells.size(); ++i)
        if (cells[i].poly.key() == poly_key) return static_cast<int>(i);
    return -1;
}

std::vector<int> WeightedComplex::maximal_cells() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
        bool maximal = true;
        for (int j = 0; j < static_cast<int>(cells.size()); ++j)
            if (i != j && poset.leq(i, j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

std::string WeightedComplex::nu_key() const {
    if (!closed_form) return "aff:" + global_nu.key();
    std::ostringstream os;
    os << "min:";
    for (const auto& [u, c] : forms) os << vec_str(u) << "/" << c << ";";
    return os.str();
}

namespace {

void finalize(WeightedComplex& wc) {
    std::sort(wc.cells.begin(), wc.cells.end(), [](const Cell& a, const Cell& b) {
        if (a.poly.dim != b.poly.dim) return a.poly.dim < b.poly.dim;
        return std::lexicographical_compare(a.poly.vertices.begin(), a.poly.vertices.end(),
                                            b.poly.vertices.begin(), b.poly.vertices.end(),
                                            vec_less);
    });
    int m = static_cast<int>(wc.cells.size());
    wc.poset.rank.resize(m);
    wc.poset.leq_.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i) {
        wc.poset.rank[i] = wc.cells[i].poly.dim + 1;
        for (int j = 0; j < m; ++j) {
            if (wc.cells[i].poly.empty()) {
                wc.poset.leq_[i][j] = 1;
                continue;
            }
            if (wc.cells[j].poly.empty()) {
                wc.poset.leq_[i][j] = (i == j) ? 1 : 0;
                continue;
            }
            bool sub = true;
            for (const auto& v : wc.cells[i].poly.vertices)
                if (!wc.cells[j].poly.contains_int(v)) sub = false;
            wc.poset.leq_[i][j] = sub ? 1 : 0;
        }
    }

    // sigma: smallest face of P containing the cell (faces are dim-sorted)
    for (auto& cell : wc.cells) {
        if (cell.poly.empty()) {
            cell.sigma = 0;
            continue;
        }
        cell.sigma = -1;
        for (size_t fi = 0; fi < wc.P_faces.faces.size() && cell.sigma < 0; ++fi) {
            if (wc.P_faces.faces[fi].verts.empty()) continue;
            const auto& fp = wc.P_faces.face_polytope(static_cast<int>(fi));
            bool sub = true;
            for (const auto& v : cell.poly.vertices)
                if (!fp.contains_int(v)) sub = false;
            if (sub) cell.sigma = static_cast<int>(fi);
        }
        if (cell.sigma < 0) throw calc_error("cell not contained in P");
    }

    std::ostringstream os;
    os << wc.P.key() << "#" << wc.nu_key() << "#";
    for (const auto& c : wc.cells) os << c.poly.key() << "!";
    wc.ckey = os.str();
}

void check_nu_affine_on_cells(const WeightedComplex& wc) {
    for (const auto& cell : wc.cells) {
        if (cell.poly.empty()) continue;
        for (const auto& v : cell.poly.vertices) {
            if (wc.nu(to_rat(v)) != cell.nu.eval(to_rat(v)))
                throw calc_error(
                    "nu closed form disagrees with the per-cell affine data (cell " +
                    vec_str(v) + ")");
        }
    }
}

}  // namespace

WeightedComplex trivial_complex(const LatticePolytope& poly, const AffineForm& nu) {
    if (poly.empty()) throw user_error("trivial_complex: empty polytope");
    WeightedComplex wc;
    wc.n = poly.ambient;
    wc.P = poly;
    wc.P_faces = face_lattice(poly);
    wc.closed_form = false;
    wc.global_nu = nu;
    wc.dimP = poly.dim;
    wc.degenerate = false;
    for (const auto& f : wc.P_faces.faces) {
        Cell c;
        if (f.verts.empty()) {
            c.poly = LatticePolytope{};
            c.poly.ambient = poly.ambient;
        } else {
            c.poly = wc.P_faces.face_polytope(
                static_cast<int>(&f - wc.P_faces.faces.data()));
        }
        c.nu = nu;
        wc.cells.push_back(std::move(c));
    }
    finalize(wc);
    return wc;
}

WeightedComplex assemble_complex(int n,
                                 const std::vector<std::pair<LatticePolytope, AffineForm>>& gens,
                                 bool closed_form,
                                 std::vector<std::pair<IntVec, Int>> forms,
                                 AffineForm global_nu, bool check_nu) {
    WeightedComplex wc;
    wc.n = n;
    std::vector<IntVec> pts;
    for (const auto& [g, form] : gens)
        for (const auto& v : g.vertices) pts.push_back(v);
    wc.P = convex_hull(n, pts);
    wc.P_faces = face_lattice(wc.P);
    wc.dimP = wc.P.dim;
    wc.closed_form = closed_form;
    wc.forms = std::move(forms);
    wc.global_nu = global_nu;

    std::map<std::string, Cell> cellmap;
    for (const auto& [g, form] : gens) {
        FaceLattice L = face_lattice(g);
        for (size_t fi = 0; fi < L.faces.size(); ++fi) {
            if (L.faces[fi].verts.empty()) continue;
            LatticePolytope fp = L.face_polytope(static_cast<int>(fi));
            std::string k = fp.key();
            auto it = cellmap.find(k);
            if (it == cellmap.end()) {
                Cell c;
                c.poly = std::move(fp);
                c.nu = form;
                cellmap.emplace(k, std::move(c));
            } else {
                for (const auto& v : it->second.poly.vertices)
                    if (it->second.nu.eval(to_rat(v)) != form.eval(to_rat(v)))
                        throw calc_error("cell carries two inconsistent affine forms");
            }
        }
    }
    {
        Cell empty;
        empty.poly.ambient = n;
        empty.nu = zero_form(n);
        wc.cells.push_back(std::move(empty));
    }
    for (auto& [k, c] : cellmap) wc.cells.push_back(std::move(c));
    finalize(wc);
    if (check_nu) check_nu_affine_on_cells(wc);

    // exact covering bookkeeping
    Int vol = 0;
    for (int mi : wc.maximal_cells()) {
        const auto& c = wc.cells[mi];
        if (c.poly.empty()) continue;
        if (c.poly.dim != wc.dimP)
            throw calc_error("maximal cell of deficient dimension in S_nu");
        vol += normalized_volume(c.poly);
    }
    if (vol != normalized_volume(wc.P))
        throw calc_error("maximal cells do not tile P (volume bookkeeping failed)");
    return wc;
}

WeightedComplex build_complex(const NewtonPolyhedron& np) {
    std::vector<std::pair<LatticePolytope, AffineForm>> gens;
    std::vector<std::pair<IntVec, Int>> forms;
    for (const auto& f : np.compact_faces) {
        if (!f.maximal) continue;
        forms.emplace_back(f.u, f.c);
        std::vector<IntVec> verts = f.poly.vertices;
        verts.push_back(IntVec(np.n, 0));
        gens.emplace_back(convex_hull(np.n, verts), linear_form(f.u, f.c));
    }

    std::vector<IntVec> gverts;
    gverts.push_back(IntVec(np.n, 0));
    for (const auto& f : np.compact_faces)
        if (f.poly.dim == 0) gverts.push_back(f.poly.vertices[0]);
    LatticePolytope P = convex_hull(np.n, gverts);

    // the nu = 1 region P cap Gamma_+(f), by H-representation intersection
    {
        std::vector<std::pair<IntVec, Int>> ineqs = P.halfspaces;
        for (const auto& hc : np.facet_inequalities) ineqs.push_back(hc);
        auto verts = enumerate_vertices(np.n, P.equations, ineqs);
        std::vector<IntVec> ivs;
        for (const auto& v : verts) {
            IntVec iv(np.n);
            for (int i = 0; i < np.n; ++i) {
                if (rat_den(v[i]) != 1)
                    throw calc_error("region P cap Gamma_+(f) has a non-lattice vertex");
                iv[i] = rat_num(v[i]);
            }
            ivs.push_back(iv);
        }
        LatticePolytope X = convex_hull(np.n, ivs);
        if (P.dim == np.n) {
            std::vector<IntVec> xv(gverts.begin() + 1, gverts.end());
            LatticePolytope Xv = convex_hull(np.n, xv);
            if (X.vertices != Xv.vertices)
                throw calc_error("P cap Gamma_+(f) differs from conv(Gamma_f)");
        }
        gens.emplace_back(std::move(X), constant_form(np.n, Rat(1)));
    }

    WeightedComplex wc =
        assemble_complex(np.n, gens, true, std::move(forms), zero_form(np.n), true);
    wc.degenerate = (wc.dimP < np.n);
    if (wc.P.vertices != P.vertices)
        throw calc_error("generators do not span P = conv(Gamma_f cup {0})");
    return wc;
}

Rat nu_value(const WeightedComplex& wc, const RatVec& point) {
    if (!wc.P.contains(point)) throw user_error("nu_value: point outside P");
    return wc.nu(point);
}

WeightedComplex restrict_to_face(const WeightedComplex& wc, int face_idx) {
    const auto& face = wc.P_faces.faces[face_idx];
    if (face.verts.empty()) throw user_error("restrict_to_face: empty face");
    WeightedComplex out;
    out.n = wc.n;
    out.P = wc.P_faces.face_polytope(face_idx);
    out.P_faces = face_lattice(out.P);
    out.closed_form = wc.closed_form;
    out.forms = wc.forms;
    out.global_nu = wc.global_nu;
    out.dimP = out.P.dim;
    for (const auto& c : wc.cells) {
        if (c.poly.empty()) {
            Cell e;
            e.poly.ambient = wc.n;
            e.nu = zero_form(wc.n);
            out.cells.push_back(std::move(e));
            continue;
        }
        bool sub = true;
        for (const auto& v : c.poly.vertices)
            if (!out.P.contains_int(v)) sub = false;
        if (sub) out.cells.push_back(c);
    }
    finalize(out);
    return out;
}

}  // namespace nmil
