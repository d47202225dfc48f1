#pragma once

#include "nmil/complex.hpp"

namespace nmil {

// Memoization scope for one evaluation session.  Not shared between threads;
// concurrent sessions over the same immutable inputs are safe.
struct EvalContext {
    std::map<std::string, UniPoly> g_memo;
    std::map<std::string, UniPoly> hlink_memo;
    std::map<std::string, UniPoly> localh_memo;
    std::map<std::string, WeightedComplex> restriction_memo;
    std::map<std::string, WeightedComplex> trivial_memo;
    std::map<std::string, FaceLattice> facelat_memo;
    std::map<std::string, std::map<Rat, Int>> hist_memo;
    std::map<std::string, UniPoly> hstar1_memo;
    std::map<std::string, UniPoly> lstar1_memo;
};

// Toric g-polynomial of the interval [a,b] (resp. of the opposite interval
// [a,b]^*) in a ranked Eulerian poset.  poset_key must identify the poset.
UniPoly g_poly(EvalContext& ctx, const GradedPoset& poset, const std::string& poset_key, int a,
               int b);
UniPoly g_poly_dual(EvalContext& ctx, const GradedPoset& poset, const std::string& poset_key,
                    int a, int b);

// h-polynomial of the link of a cell inside the complex (the complex plays
// the role of S_nu restricted to its own ambient polytope).
UniPoly h_link(EvalContext& ctx, const WeightedComplex& view, int cell);

// local h-polynomial l_P(S_nu, F; t) of a cell relative to the complex's
// ambient polytope P.
UniPoly local_h(EvalContext& ctx, const WeightedComplex& wc, int cell);

// wedge decomposition of a symmetric unimodal polynomial with a_i = a_{D-i};
// rejects asymmetric or non-unimodal input.
UniPoly tilde_l(const UniPoly& lp, int D);

// memoized restriction of the complex to a face of its ambient polytope
const WeightedComplex& restricted(EvalContext& ctx, const WeightedComplex& wc, int face_idx);

// memoized trivial complex over (poly, nu)
const WeightedComplex& trivial(EvalContext& ctx, const LatticePolytope& poly,
                               const AffineForm& nu);

const FaceLattice& faces_of(EvalContext& ctx, const LatticePolytope& poly);

}  // namespace nmil
