#pragma once

#include "nmil/poset_poly.hpp"

namespace nmil {

// nu as seen by the weighted counts: either a single affine form or the
// piecewise function of a complex (evaluated through its closed form)
struct NuFn {
    const AffineForm* affine = nullptr;
    const WeightedComplex* piecewise = nullptr;

    Rat eval_scaled(const IntVec& v, long m) const;  // exact m * nu(v/m)
    std::string key() const;
};
inline NuFn nu_of(const AffineForm& f) { return NuFn{&f, nullptr}; }
inline NuFn nu_of(const WeightedComplex& wc) { return NuFn{nullptr, &wc}; }

// one-hot weight of a lattice point of the m-th dilate
int weight(const LatticePolytope& poly, const NuFn& nu, const IntVec& v, long m,
           const RotationNumber& lambda);

// weighted lattice point count f_lambda(P, nu; m)
Int f_lambda(EvalContext& ctx, const LatticePolytope& poly, const NuFn& nu, long m,
             const RotationNumber& lambda);

// lambda-weighted h*-polynomial (one variable), with the polynomiality of
// f_lambda enforced by validation counts at m = dim+1 .. 2 dim+2
UniPoly hstar1(EvalContext& ctx, const LatticePolytope& poly, const NuFn& nu,
               const RotationNumber& lambda);

// lambda-local weighted h*-polynomial (one variable)
UniPoly lstar1(EvalContext& ctx, const LatticePolytope& poly, const NuFn& nu,
               const RotationNumber& lambda);

inline UniPoly hstar1(EvalContext& ctx, const LatticePolytope& poly, const AffineForm& nu,
                      const RotationNumber& lambda) {
    return hstar1(ctx, poly, nu_of(nu), lambda);
}
inline UniPoly lstar1(EvalContext& ctx, const LatticePolytope& poly, const AffineForm& nu,
                      const RotationNumber& lambda) {
    return lstar1(ctx, poly, nu_of(nu), lambda);
}

// two- and three-variable tower over a subdivision (trivial or S_nu)
Laurent2 hstar2(EvalContext& ctx, const WeightedComplex& wc, const RotationNumber& lambda);
Laurent2 lstar2(EvalContext& ctx, const WeightedComplex& wc, const RotationNumber& lambda);
Laurent3 hstar3(EvalContext& ctx, const WeightedComplex& wc, const RotationNumber& lambda);

// Box-point formula for a simplex with affine nu: (h*(u,v,w), l*(u,v))
std::pair<Laurent3, Laurent2> simplex_box_oracle(const LatticePolytope& poly,
                                                 const AffineForm& nu,
                                                 const RotationNumber& lambda);

}  // namespace nmil
