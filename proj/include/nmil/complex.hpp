#pragma once

#include "nmil/newton.hpp"

namespace nmil {

struct AffineForm {
    RatVec lin;  // covector, one entry per ambient coordinate
    Rat cst;

    Rat eval(const RatVec& x) const;
    // exact m*nu(v/m) for an integer point v of the m-th dilate; m = 0 forces v = 0
    Rat eval_scaled(const IntVec& v, long m) const;
    std::string key() const;
};

AffineForm zero_form(int n);
AffineForm constant_form(int n, const Rat& c);
// <u,x>/c as an affine form
AffineForm linear_form(const IntVec& u, const Int& c);

struct Cell {
    LatticePolytope poly;
    AffineForm nu;   // restriction of nu to the cell
    int sigma = -1;  // index of the smallest face of P containing the cell
    int dim() const { return poly.dim; }
};

// The pair (P, nu) together with the cell complex S_nu.  Also used for the
// trivial subdivision of a single polytope with an affine weight, so all the
// Katz-Stapledon machinery runs on one structure.
struct WeightedComplex {
    int n = 0;
    LatticePolytope P;
    FaceLattice P_faces;
    bool closed_form = false;  // nu(x) = min(1, min_j <u_j,x>/c_j)
    std::vector<std::pair<IntVec, Int>> forms;  // supporting forms of the maximal compact faces
    AffineForm global_nu;                       // when !closed_form
    std::vector<Cell> cells;                    // cells[0] is the empty cell
    GradedPoset poset;                          // containment order on cells
    bool degenerate = false;                    // dim P < n
    int dimP = -1;
    std::string ckey;  // content identity used for memoization

    Rat nu(const RatVec& x) const;                    // no membership check
    Rat nu_scaled(const IntVec& v, long m) const;     // exact m*nu(v/m)
    int cell_index(const std::string& poly_key) const;
    std::vector<int> maximal_cells() const;
    std::string nu_key() const;
};

WeightedComplex build_complex(const NewtonPolyhedron& np);
WeightedComplex trivial_complex(const LatticePolytope& poly, const AffineForm& nu);

// Assemble a complex from maximal-cell generators (each with the affine form
// of nu on it); P is the hull of their union.  check_nu verifies the closed
// form against the per-cell data.
WeightedComplex assemble_complex(int n,
                                 const std::vector<std::pair<LatticePolytope, AffineForm>>& gens,
                                 bool closed_form,
                                 std::vector<std::pair<IntVec, Int>> forms,
                                 AffineForm global_nu, bool check_nu);

// exact nu at a rational point; rejects points outside P
Rat nu_value(const WeightedComplex& wc, const RatVec& point);

// restriction of the complex to a nonempty face of P
WeightedComplex restrict_to_face(const WeightedComplex& wc, int face_idx);

}  // namespace nmil
