#include <doctest.h>

#include "test_util.hpp"

using namespace nmil;
using namespace nmil::test;

namespace {

const CompactFace& face_of(const NewtonPolyhedron& np,
                           std::initializer_list<std::initializer_list<long>> verts) {
    auto p = hull(np.n, verts);
    const CompactFace* f = np.find_face(p);
    REQUIRE(f != nullptr);
    return *f;
}

}  // namespace

TEST_SUITE("newton_polyhedron") {

TEST_CASE("running example: faces, distances, classification") {
    auto np = build_newton(example_support());
    CHECK(np.n == 2);
    CHECK_FALSE(np.convenient);
    CHECK(np.dimP == 2);
    CHECK(np.compact_faces.size() == 5);  // 3 vertices + 2 edges

    CHECK(face_of(np, {{7, 0}}).d == 7);
    CHECK(face_of(np, {{3, 1}}).d == 1);
    CHECK(face_of(np, {{2, 4}}).d == 2);
    CHECK(face_of(np, {{7, 0}, {3, 1}}).d == 7);
    CHECK(face_of(np, {{3, 1}, {2, 4}}).d == 10);

    for (const auto& f : np.compact_faces) {
        bool is_24 = f.poly.vertices == std::vector<IntVec>{iv({2, 4})};
        CHECK(f.extremal == is_24);
    }

    // I_F bookkeeping
    CHECK(face_of(np, {{7, 0}}).s == 1);
    CHECK(face_of(np, {{3, 1}}).s == 2);
    CHECK(face_of(np, {{7, 0}, {3, 1}}).s == 2);
}

TEST_CASE("running example: R_f = {1, -1}") {
    auto np = build_newton(example_support());
    auto rf = bad_eigenvalues(np);
    REQUIRE(rf.size() == 2);
    CHECK(rf[0] == rot(0, 1));
    CHECK(rf[1] == rot(1, 2));
    CHECK(in_bad_set(np, rot(1, 2)));
    CHECK_FALSE(in_bad_set(np, rot(1, 10)));
}

TEST_CASE("running example: zeta = (1-t^10)^-1 after cancellation") {
    auto z = zeta(build_newton(example_support()));
    REQUIRE(z.factors.size() == 1);
    CHECK(z.factors.at(10) == -1);
}

TEST_CASE("cusp and smooth zeta functions") {
    auto zc = zeta(build_newton(cusp_support()));
    CHECK(zc.factors == std::map<Int, Int>{{2, 1}, {3, 1}, {6, -1}});

    auto zs = zeta(build_newton(smooth_support()));
    CHECK(zs.factors == std::map<Int, Int>{{1, 1}});
}

TEST_CASE("convenient input has no extremal faces") {
    auto np = build_newton(cusp_support());
    CHECK(np.convenient);
    for (const auto& f : np.compact_faces) CHECK_FALSE(f.extremal);
    CHECK(bad_eigenvalues(np).empty());
}

TEST_CASE("multiplicities from the running example") {
    auto np = build_newton(example_support());
    CHECK(multiplicity(np, rot(1, 10)) == 1);
    CHECK(multiplicity(np, rot(3, 10)) == 1);
    CHECK(multiplicity(np, rot(1, 4)) == 0);
    CHECK(multiplicity(np, rot(1, 7)) == 0);
    CHECK_THROWS_AS(multiplicity(np, rot(1, 2)), user_error);  // in R_f
    CHECK_THROWS_AS(multiplicity(np, rot(0, 1)), user_error);
}

TEST_CASE("good eigenvalues of the running example") {
    auto np = build_newton(example_support());
    auto good = good_eigenvalues(np);
    CHECK(good.size() == 14);  // k/7 for k=1..6 plus k/10, k in {1,2,3,4,6,7,8,9}
    int tenth = 0;
    for (const auto& r : good) {
        CHECK_FALSE(in_bad_set(np, r));
        if (10 % to_long(r.order()) == 0) ++tenth;  // lambda^10 = 1
    }
    CHECK(tenth == 8);
}

TEST_CASE("vertex soundness and the halfspace model") {
    for (const auto& s :
         {example_support(), cusp_support(), sup(3, {{3, 0, 0}, {0, 3, 0}, {1, 1, 1}})}) {
        auto np = build_newton(s);
        for (const auto& f : np.compact_faces) {
            if (f.poly.dim != 0) continue;
            CHECK(std::find(s.monomials.begin(), s.monomials.end(), f.poly.vertices[0]) !=
                  s.monomials.end());
        }
        for (const auto& m : s.monomials)
            for (const auto& [a, c] : np.facet_inequalities) CHECK(dot(a, m) >= c);
    }
}

TEST_CASE("truncation independence") {
    for (const auto& s :
         {example_support(), cusp_support(), sup(3, {{3, 0, 0}, {0, 3, 0}, {1, 1, 1}})}) {
        auto a = build_newton(s);
        auto b = build_newton_margin(s, 5);
        REQUIRE(a.compact_faces.size() == b.compact_faces.size());
        for (size_t i = 0; i < a.compact_faces.size(); ++i) {
            CHECK(a.compact_faces[i].poly.vertices == b.compact_faces[i].poly.vertices);
            CHECK(a.compact_faces[i].d == b.compact_faces[i].d);
            CHECK(a.compact_faces[i].extremal == b.compact_faces[i].extremal);
            CHECK(a.compact_faces[i].I == b.compact_faces[i].I);
        }
        CHECK(zeta(a).factors == zeta(b).factors);
    }
}

TEST_CASE("degenerate single monomial: dim P < n") {
    auto np = build_newton(sup(2, {{1, 1}}));
    CHECK(np.dimP == 1);
    CHECK(np.compact_faces.size() == 1);
    CHECK_THROWS_AS(multiplicity(np, rot(1, 3)), user_error);
}

TEST_CASE("support validation") {
    CHECK_THROWS_AS(Support::make(2, {}), user_error);
    CHECK_THROWS_AS(Support::make(2, {iv({0, 0})}), user_error);
    CHECK_THROWS_AS(Support::make(1, {iv({1})}), user_error);
    CHECK_THROWS_AS(Support::make(2, {iv({-1, 2})}), user_error);
}

TEST_CASE("a 3-variable non-convenient example") {
    auto np = build_newton(sup(3, {{3, 0, 0}, {0, 3, 0}, {1, 1, 1}}));
    CHECK_FALSE(np.convenient);
    CHECK(np.dimP == 3);
    CHECK(face_of(np, {{3, 0, 0}, {0, 3, 0}, {1, 1, 1}}).d == 3);
    // (1,1,1) sits under the vertical ray at (1,1,1); (3,0,0) sits under the
    // noncompact 2-face spanned by {(3,0,0),(1,1,1)} and e3 (not in the
    // coordinate boundary since it contains (1,1,1))
    CHECK(face_of(np, {{1, 1, 1}}).extremal);
    CHECK(face_of(np, {{3, 0, 0}}).extremal);
    CHECK(face_of(np, {{3, 0, 0}, {1, 1, 1}}).extremal);
    // the facet and the edge between the two axis vertices stay admissible
    CHECK_FALSE(face_of(np, {{3, 0, 0}, {0, 3, 0}, {1, 1, 1}}).extremal);
    CHECK_FALSE(face_of(np, {{3, 0, 0}, {0, 3, 0}}).extremal);
    CHECK(zeta(np).factors == std::map<Int, Int>{{3, 2}});
    // every candidate eigenvalue is bad here: R_f = {1, thirds}
    CHECK(bad_eigenvalues(np).size() == 3);
    CHECK(good_eigenvalues(np).empty());
}

TEST_CASE("conjugation symmetry of multiplicities") {
    auto np = build_newton(example_support());
    for (const auto& r : good_eigenvalues(np))
        CHECK(multiplicity(np, r) == multiplicity(np, r.conjugate()));
}

}  // TEST_SUITE
