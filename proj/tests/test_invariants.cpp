#include <doctest.h>

#include "test_util.hpp"

using namespace nmil;
using namespace nmil::test;

namespace {

PuiseuxPoly puiseux(std::initializer_list<std::pair<Rat, long>> terms) {
    PuiseuxPoly p;
    for (const auto& [e, c] : terms) p.add(e, Int(c));
    return p;
}

}  // namespace

TEST_SUITE("milnor_invariants") {

TEST_CASE("E-polynomial of the running example") {
    EvalContext ctx;
    auto np = build_newton(example_support());

    CHECK(e_poly(ctx, np, rot(1, 4)).coeffs.is_zero());

    auto E = e_poly(ctx, np, rot(1, 10));
    REQUIRE(E.coeffs.c.size() == 1);
    // n = 2: a single Hodge class on H^1 with p + q = n - 1 = 1, so
    // (-1)^{n-1} E = -E is the nonnegative Hodge-number polynomial
    auto [mono, coeff] = *E.coeffs.c.begin();
    CHECK(mono[0] + mono[1] == 1);
    CHECK(coeff == -1);
    CHECK(-E.eval_11() == 1);
}

TEST_CASE("concentration bookkeeping (-1)^{n-1} E(1,1) = multiplicity") {
    EvalContext ctx;
    auto np = build_newton(example_support());
    for (const auto& r : good_eigenvalues(np)) {
        Int mass = e_poly(ctx, np, r).eval_11();
        if ((np.n - 1) % 2 != 0) mass = -mass;
        CHECK(mass == multiplicity(np, r));
    }
}

TEST_CASE("cusp: good sixth roots carry one class each") {
    EvalContext ctx;
    auto np = build_newton(cusp_support());
    auto E = e_poly(ctx, np, rot(1, 6));
    Int mass = -E.eval_11();  // (-1)^{n-1} with n = 2
    CHECK(mass == 1);
    CHECK(e_poly(ctx, np, rot(1, 6)).coeffs.c.size() == 1);
    // E_1 of the cusp is the unit class alone
    auto E1 = e_poly(ctx, np, rot(0, 1));
    REQUIRE(E1.coeffs.c.size() == 1);
    CHECK(E1.coeffs.c.begin()->first == Mono2{0, 0});
    CHECK(E1.coeffs.c.begin()->second == 1);
}

TEST_CASE("smooth point: E_1 = 1, all other eigenvalues vanish") {
    EvalContext ctx;
    auto np = build_newton(smooth_support());
    auto E1 = e_poly(ctx, np, rot(0, 1));
    REQUIRE(E1.coeffs.c.size() == 1);
    CHECK(E1.coeffs.c.begin()->second == 1);
    CHECK(e_poly(ctx, np, rot(1, 2)).coeffs.is_zero());
}

TEST_CASE("route equality through l*") {
    EvalContext ctx;
    auto np = build_newton(example_support());
    auto wc = build_complex(np);
    for (const auto& r : good_eigenvalues(np)) {
        auto a = e_poly(ctx, np, r);
        auto b = e_poly_via_lstar(ctx, np, wc, r);
        CHECK(a.coeffs == b.coeffs);
    }
}

TEST_CASE("Hodge symmetry for good eigenvalues") {
    EvalContext ctx;
    auto np = build_newton(example_support());
    for (const auto& r : good_eigenvalues(np)) {
        auto E = e_poly(ctx, np, r).coeffs;
        CHECK(E.inv_swap().shift(np.n - 1, np.n - 1) == E);
        // E_lambda(u,1) = u^{n-1} E_conj(1/u, 1)
        auto Ec = e_poly(ctx, np, r.conjugate()).coeffs;
        UniPoly left = e_poly(ctx, np, r).at_v1();
        UniPoly right = Ec.specialize_v1();
        if (!right.is_zero()) right = right.reversed(np.n - 1);
        CHECK(left == right);
    }
}

TEST_CASE("e_poly_via_lstar rejects out-of-hypothesis inputs") {
    EvalContext ctx;
    auto np = build_newton(example_support());
    auto wc = build_complex(np);
    CHECK_THROWS_AS(e_poly_via_lstar(ctx, np, wc, rot(1, 2)), user_error);  // in R_f
    auto npc = build_newton(cusp_support());
    auto wcc = build_complex(npc);
    CHECK_THROWS_AS(e_poly_via_lstar(ctx, npc, wcc, rot(1, 6)), user_error);  // convenient
}

TEST_CASE("jordan blocks of the running example") {
    EvalContext ctx;
    auto np = build_newton(example_support());
    auto wc = build_complex(np);
    auto jt = jordan_blocks(ctx, np, wc, rot(1, 10));
    CHECK(jt.counts == std::map<long, Int>{{1, 1}});
    CHECK(jordan_blocks(ctx, np, wc, rot(1, 4)).counts.empty());
    CHECK_THROWS_AS(jordan_blocks(ctx, np, wc, rot(1, 2)), user_error);

    for (const auto& r : good_eigenvalues(np)) {
        auto t = jordan_blocks(ctx, np, wc, r);
        CHECK(t.weighted_total() == multiplicity(np, r));
        // conjugation symmetry
        CHECK(jordan_blocks(ctx, np, wc, r.conjugate()).counts == t.counts);
    }
}

TEST_CASE("jordan blocks refuse convenient input") {
    EvalContext ctx;
    auto np = build_newton(cusp_support());
    auto wc = build_complex(np);
    CHECK_THROWS_AS(jordan_blocks(ctx, np, wc, rot(1, 6)), user_error);
}

TEST_CASE("spectrum of the running example") {
    EvalContext ctx;
    auto np = build_newton(example_support());
    auto wc = build_complex(np);
    auto sp = spectrum_lambda(ctx, np, wc, Rat(1, 10));
    CHECK(sp == puiseux({{Rat(11, 10), 1}}));
    CHECK(sp.total_mass() == multiplicity(np, rot(1, 10)));
    CHECK(spectrum_lambda(ctx, np, wc, Rat(1, 4)).is_zero());
    CHECK_THROWS_AS(spectrum_lambda(ctx, np, wc, Rat(1, 2)), user_error);
    CHECK_THROWS_AS(spectrum_lambda(ctx, np, wc, Rat(0, 1)), user_error);
}

TEST_CASE("spectrum cross-route: Sp = t^{beta-1} l*(P, nu; t)") {
    EvalContext ctx;
    auto np = build_newton(example_support());
    auto wc = build_complex(np);
    for (const auto& r : good_eigenvalues(np)) {
        if (r.is_one()) continue;
        auto sp = spectrum_lambda(ctx, np, wc, r.theta);
        UniPoly l1 = lstar1(ctx, wc.P, nu_of(wc), r);
        auto expect = puiseux_from_uni(l1, r.theta - 1);
        CHECK(sp == expect);
    }
}

TEST_CASE("full spectrum of the cusp is the classical one") {
    EvalContext ctx;
    auto np = build_newton(cusp_support());
    CHECK(full_spectrum(ctx, np) == puiseux({{Rat(5, 6), 1}, {Rat(7, 6), 1}}));
}

TEST_CASE("full spectrum of a smooth point vanishes") {
    EvalContext ctx;
    auto np = build_newton(smooth_support());
    CHECK(full_spectrum(ctx, np).is_zero());
}

TEST_CASE("full spectrum of the running example") {
    EvalContext ctx;
    auto np = build_newton(example_support());
    auto sp = full_spectrum(ctx, np);
    // the eight tenth-root classes (orders 5 and 10) carry total mass 8
    Int tenth_mass = 0;
    for (const auto& [e, c] : sp.c) {
        Int den = rat_den(mod1(e));
        if (den == 5 || den == 10) tenth_mass += c;
    }
    CHECK(tenth_mass == 8);
    for (const auto& [e, c] : sp.c) {
        CHECK(e > 0);
        CHECK(e <= np.n);
    }
}

TEST_CASE("jordan data for a degenerate input is refused") {
    EvalContext ctx;
    auto np = build_newton(sup(2, {{1, 1}}));
    auto wc = build_complex(np);
    CHECK_THROWS_AS(jordan_blocks(ctx, np, wc, rot(1, 3)), user_error);
}

}  // TEST_SUITE
