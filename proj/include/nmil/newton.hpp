#pragma once

#include <set>

#include "nmil/poly.hpp"
#include "nmil/polytope.hpp"

namespace nmil {

// Exact root of unity lambda = exp(2*pi*i*theta), theta in [0,1).
struct RotationNumber {
    Rat theta;

    explicit RotationNumber(Rat t = Rat(0)) : theta(mod1(t)) {}
    Int order() const { return rat_den(theta); }
    bool is_one() const { return theta == 0; }
    RotationNumber conjugate() const { return RotationNumber(mod1(Rat(1) - theta)); }
    bool operator==(const RotationNumber& o) const { return theta == o.theta; }
    bool operator<(const RotationNumber& o) const {
        if (rat_den(theta) != rat_den(o.theta)) return rat_den(theta) < rat_den(o.theta);
        return rat_num(theta) < rat_num(o.theta);
    }
    std::string str() const { return rat_str(theta); }
};

struct Support {
    int n = 0;
    std::vector<IntVec> monomials;  // sorted, unique, nonzero, nonnegative

    static Support make(int n, std::vector<IntVec> monomials);
};

struct CompactFace {
    LatticePolytope poly;
    Int d = 0;            // lattice distance from the origin
    IntVec u;             // primitive supporting normal realizing the face on Gamma_+(f)
    Int c = 0;            // its offset: <u,x> = c on the face, >= c on Gamma_+(f)
    std::vector<int> I;   // minimal coordinate set with the face inside R^I (0-based)
    int s = 0;            // |I|
    bool extremal = false;
    bool maximal = false;  // maximal among compact faces
    int dim() const { return poly.dim; }
};

struct NoncompactFace {
    std::vector<IntVec> model_vertices;       // vertices of the truncated model face
    std::vector<IntVec> generating_vertices;  // genuine vertices (inside the box)
    std::vector<int> recession;               // coordinate directions of the recession cone
    bool in_coordinate_boundary = false;      // contained in some {x_i = 0}
};

struct ZetaFactors {
    std::map<Int, Int> factors;  // d -> exponent of (1 - t^d), zero exponents absent
    std::string str() const;
};

struct NewtonPolyhedron {
    Support support;
    int n = 0;
    Int M = 0;                  // truncation bound
    LatticePolytope model;      // Gamma_+(f) cap [0,M]^n
    std::vector<std::pair<IntVec, Int>> facet_inequalities;  // genuine facets of Gamma_+(f)
    std::vector<CompactFace> compact_faces;                  // sorted by (dim, vertices)
    std::vector<NoncompactFace> noncompact_proper_faces;
    bool convenient = false;
    int dimP = -1;

    const CompactFace* find_face(const LatticePolytope& p) const;
};

NewtonPolyhedron build_newton(const Support& support);
// variant with explicit truncation margin (M = 1 + max coord + extra); used by
// the truncation-independence tests
NewtonPolyhedron build_newton_margin(const Support& support, const Int& extra);

std::vector<RotationNumber> bad_eigenvalues(const NewtonPolyhedron& np);  // R_f
bool in_bad_set(const NewtonPolyhedron& np, const RotationNumber& lambda);

ZetaFactors zeta(const NewtonPolyhedron& np);

// multiplicity of lambda (not in R_f) as an eigenvalue of the middle monodromy
Int multiplicity(const NewtonPolyhedron& np, const RotationNumber& lambda);

// all lambda with lambda^{d_{I,i}} = 1 for some zeta contributor, minus R_f
std::vector<RotationNumber> good_eigenvalues(const NewtonPolyhedron& np);

// zeta contributors: compact faces with dim F = |I_F| - 1 (one per subset I)
std::vector<const CompactFace*> zeta_contributors(const NewtonPolyhedron& np);

}  // namespace nmil
