#pragma once

#include "nmil/ehrhart.hpp"

namespace nmil {

struct EPolynomial {
    RotationNumber lambda;
    Laurent2 coeffs;  // E_lambda(F_{f,0}; u, v)

    Int eval_11() const;  // E(1,1)
    UniPoly at_v1() const;  // E(u,1)
};

struct JordanTable {
    RotationNumber lambda;
    std::map<long, Int> counts;  // block size k >= 1 -> J_{k,lambda}, zeros absent

    Int weighted_total() const;  // sum k * J_k
};

// Hodge realization of the motivic Milnor fiber, summed over compact faces.
// Valid for every lambda (including the bad set).
EPolynomial e_poly(EvalContext& ctx, const NewtonPolyhedron& np, const RotationNumber& lambda);

// Same polynomial through l*(P, nu; u, v); hypotheses: lambda not in R_f,
// f not convenient, dim P = n.
EPolynomial e_poly_via_lstar(EvalContext& ctx, const NewtonPolyhedron& np,
                             const WeightedComplex& wc, const RotationNumber& lambda);

// Jordan block counts of the middle monodromy for a good eigenvalue.
JordanTable jordan_blocks(EvalContext& ctx, const NewtonPolyhedron& np, const WeightedComplex& wc,
                          const RotationNumber& lambda);

// Sp^lambda_{f,0}(t) for lambda = exp(2 pi i beta), beta in (0,1), lambda
// not in R_f, f not convenient, dim P = n.
PuiseuxPoly spectrum_lambda(EvalContext& ctx, const NewtonPolyhedron& np,
                            const WeightedComplex& wc, const Rat& beta);

// the full Hodge spectrum sp_{f,0}(t), assembled from E_lambda(u,1)
PuiseuxPoly full_spectrum(EvalContext& ctx, const NewtonPolyhedron& np);

// all rotation numbers k/d_F over nonempty compact faces (candidate eigenvalues)
std::vector<RotationNumber> candidate_eigenvalues(const NewtonPolyhedron& np);

}  // namespace nmil
