#include <doctest.h>

#include "nmil/poset_poly.hpp"
#include "test_util.hpp"

using namespace nmil;
using namespace nmil::test;

TEST_SUITE("subdivision_complex") {

TEST_CASE("running example: cells of S_nu") {
    auto np = build_newton(example_support());
    auto wc = build_complex(np);
    CHECK(wc.dimP == 2);
    CHECK_FALSE(wc.degenerate);

    // maximal cells: the two cones over the Newton boundary edges plus the
    // nu = 1 triangle conv{(7,0),(3,1),(2,4)}
    auto maximal = wc.maximal_cells();
    REQUIRE(maximal.size() == 3);
    std::set<std::string> keys;
    for (int m : maximal) keys.insert(wc.cells[m].poly.key());
    CHECK(keys.count(hull(2, {{0, 0}, {7, 0}, {3, 1}}).key()) == 1);
    CHECK(keys.count(hull(2, {{0, 0}, {3, 1}, {2, 4}}).key()) == 1);
    CHECK(keys.count(hull(2, {{7, 0}, {3, 1}, {2, 4}}).key()) == 1);

    // cell census: (3,1) subdivides the triangle P, so V=4, E=6, F=3 by Euler
    int verts = 0, edges = 0, twos = 0;
    for (const auto& c : wc.cells) {
        if (c.poly.dim == 0) ++verts;
        if (c.poly.dim == 1) ++edges;
        if (c.poly.dim == 2) ++twos;
    }
    CHECK(verts == 4);
    CHECK(edges == 6);
    CHECK(twos == 3);
    CHECK(wc.cells.size() == 14);  // with the empty cell
}

TEST_CASE("every compact face and every Delta_F appears as a cell") {
    for (const auto& s : {example_support(), cusp_support(),
                          sup(3, {{3, 0, 0}, {0, 3, 0}, {1, 1, 1}})}) {
        auto np = build_newton(s);
        auto wc = build_complex(np);
        for (const auto& f : np.compact_faces) {
            CHECK(wc.cell_index(f.poly.key()) >= 0);
            std::vector<IntVec> verts = f.poly.vertices;
            verts.push_back(IntVec(np.n, 0));
            CHECK(wc.cell_index(convex_hull(np.n, verts).key()) >= 0);
        }
    }
}

TEST_CASE("nu values on the running example") {
    auto np = build_newton(example_support());
    auto wc = build_complex(np);
    CHECK(nu_value(wc, rv({Rat(0), Rat(0)})) == 0);
    for (const auto& f : np.compact_faces)
        for (const auto& v : f.poly.vertices) CHECK(nu_value(wc, to_rat(v)) == 1);
    CHECK(nu_value(wc, rv({Rat(3, 2), Rat(1, 2)})) == Rat(1, 2));
    CHECK_THROWS_AS(nu_value(wc, rv({Rat(-1), Rat(0)})), user_error);
    CHECK_THROWS_AS(nu_value(wc, rv({Rat(7), Rat(4)})), user_error);
}

TEST_CASE("nu stays within [0,1] on P") {
    auto np = build_newton(example_support());
    auto wc = build_complex(np);
    for (long m = 1; m <= 3; ++m) {
        for (const auto& v : lattice_points(wc.P, m)) {
            RatVec q(wc.n);
            for (int i = 0; i < wc.n; ++i) q[i] = Rat(v[i], m);
            Rat val = nu_value(wc, q);
            CHECK(val >= 0);
            CHECK(val <= 1);
        }
    }
}

TEST_CASE("cusp: S_nu is the trivial subdivision of the triangle") {
    auto np = build_newton(cusp_support());
    auto wc = build_complex(np);
    CHECK(wc.cells.size() == 8);
    CHECK(wc.maximal_cells().size() == 1);
    CHECK(wc.cells[wc.maximal_cells()[0]].poly.key() ==
          hull(2, {{0, 0}, {2, 0}, {0, 3}}).key());
    // nu is the linear interpolation: value 1/2 at the midpoint towards (2,0)
    CHECK(nu_value(wc, rv({Rat(1), Rat(0)})) == Rat(1, 2));
}

TEST_CASE("restriction to a face of P") {
    auto np = build_newton(example_support());
    auto wc = build_complex(np);
    // Q = the edge conv{0,(7,0)} of P
    int q = -1;
    auto edge = hull(2, {{0, 0}, {7, 0}});
    for (int i = 0; i < static_cast<int>(wc.P_faces.faces.size()); ++i) {
        if (wc.P_faces.faces[i].verts.empty()) continue;
        if (wc.P_faces.face_polytope(i).key() == edge.key()) q = i;
    }
    REQUIRE(q >= 0);
    auto rc = restrict_to_face(wc, q);
    CHECK(rc.cells.size() == 4);  // empty, two vertices, the edge itself
    CHECK(rc.dimP == 1);

    // restriction to P is the whole complex
    auto full = restrict_to_face(wc, wc.P_faces.top);
    CHECK(full.cells.size() == wc.cells.size());

    // restriction to a vertex of P
    int v0 = -1;
    for (int i = 0; i < static_cast<int>(wc.P_faces.faces.size()); ++i)
        if (wc.P_faces.faces[i].dim == 0 &&
            wc.P_faces.face_polytope(i).vertices[0] == iv({0, 0}))
            v0 = i;
    REQUIRE(v0 >= 0);
    CHECK(restrict_to_face(wc, v0).cells.size() == 2);
}

TEST_CASE("maximal cells are pairwise separated by walls") {
    for (const auto& s : {example_support(), sup(3, {{3, 0, 0}, {0, 3, 0}, {1, 1, 1}})}) {
        auto wc = build_complex(build_newton(s));
        auto maximal = wc.maximal_cells();
        for (size_t i = 0; i < maximal.size(); ++i) {
            for (size_t j = 0; j < maximal.size(); ++j) {
                if (i == j) continue;
                const auto& A = wc.cells[maximal[i]].poly;
                const auto& B = wc.cells[maximal[j]].poly;
                bool wall = false;
                for (const auto& [a, c] : A.halfspaces) {
                    bool other_side = true;
                    for (const auto& v : B.vertices)
                        if (dot(a, v) > c) other_side = false;
                    if (other_side) wall = true;
                }
                CHECK(wall);
            }
        }
    }
}

TEST_CASE("face closure: every face of a cell is a cell") {
    auto wc = build_complex(build_newton(example_support()));
    for (const auto& c : wc.cells) {
        if (c.poly.empty()) continue;
        auto L = face_lattice(c.poly);
        for (int i = 0; i < static_cast<int>(L.faces.size()); ++i) {
            if (L.faces[i].verts.empty()) continue;
            CHECK(wc.cell_index(L.face_polytope(i).key()) >= 0);
        }
    }
}

TEST_CASE("sigma is the unique minimal containing face") {
    auto wc = build_complex(build_newton(example_support()));
    for (const auto& c : wc.cells) {
        if (c.poly.empty()) continue;
        const auto& sp = wc.P_faces.face_polytope(c.sigma);
        for (const auto& v : c.poly.vertices) CHECK(sp.contains_int(v));
        for (int q = 0; q < static_cast<int>(wc.P_faces.faces.size()); ++q) {
            if (q == c.sigma || wc.P_faces.faces[q].verts.empty()) continue;
            if (wc.P_faces.faces[q].dim >= wc.P_faces.faces[c.sigma].dim) continue;
            bool contains = true;
            for (const auto& v : c.poly.vertices)
                if (!wc.P_faces.face_polytope(q).contains_int(v)) contains = false;
            CHECK_FALSE(contains);
        }
    }
}

TEST_CASE("degenerate input is built but flagged") {
    auto np = build_newton(sup(2, {{1, 1}}));
    auto wc = build_complex(np);
    CHECK(wc.degenerate);
    CHECK(wc.dimP == 1);
}

}  // TEST_SUITE
