#pragma once

#include <map>
#include <memory>

#include "nmil/linalg.hpp"
#include "nmil/poset.hpp"

namespace nmil {

// A (possibly lower-dimensional, possibly empty) lattice polytope with both
// descriptions: extreme points, and facet halfspaces valid inside the affine
// hull.  dim == -1 encodes the empty polytope.
struct LatticePolytope {
    int ambient = 0;
    int dim = -1;
    std::vector<IntVec> vertices;  // extreme points, lex sorted
    // <normal, offset>: <a,x> >= c for x in the polytope, a primitive,
    // each tight on a facet (non-redundant within the affine hull)
    std::vector<std::pair<IntVec, Int>> halfspaces;
    // <e,x> = c cutting out the affine hull
    std::vector<std::pair<IntVec, Int>> equations;
    IntVec base;                         // base point of the affine hull
    std::vector<IntVec> lattice_basis;   // Z-basis of the saturated direction lattice, dim rows
    std::vector<IntVec> vertex_coords;   // per-vertex coordinates in lattice_basis
    // halfspaces transported to hull coordinates: <a,y> >= b
    std::vector<std::pair<IntVec, Int>> coord_halfspaces;

    bool empty() const { return dim < 0; }
    bool contains(const RatVec& x) const;
    bool contains_int(const IntVec& x) const;
    std::string key() const;  // canonical identity (ambient + sorted vertices)
};

LatticePolytope convex_hull(int ambient, std::vector<IntVec> pts);

// Vertices of {x : eqs hold, ineqs hold}; throws if unbounded or if the
// constraint system is not pointed after homogenization.  Vertices may be
// rational.
std::vector<RatVec> enumerate_vertices(int ambient,
                                       const std::vector<std::pair<IntVec, Int>>& equations,
                                       const std::vector<std::pair<IntVec, Int>>& inequalities);

// Extreme rays of {y in R^k : <c,y> >= 0 for all c}, which must be pointed.
std::vector<IntVec> cone_rays(std::vector<IntVec> constraints, int k);

// All integer points of m*poly (m >= 0); m == 0 gives the ambient origin.
std::vector<IntVec> lattice_points(const LatticePolytope& poly, long m);

// dim! * euclidean volume in the saturated lattice of the affine hull;
// a point has normalized volume 1.
Int normalized_volume(const LatticePolytope& poly);
// test helper: same quantity from a triangulation apexed at the lex-max vertex
Int normalized_volume_alt(const LatticePolytope& poly);

// Lattice distance of a face from the origin (Newton-polyhedron sense):
// the constant value on Aff(face) of the primitive functional on the lattice
// of span(face) that is positive there.  Rejects 0 in Aff(face).
Int lattice_distance(const LatticePolytope& face);

// Exact evaluation of the distance-normalized level h_F: h_F(v) = phi(v)/d
// for v in span(face) cap Z^n, where phi is the primitive functional above.
struct LevelForm {
    std::vector<IntVec> span_basis;  // basis of span(face) cap Z^n
    IntVec phi;                      // functional in basis coordinates
    Int d;                           // lattice distance
    // level of a lattice point of the span; nullopt if v is outside the span lattice
    std::optional<Rat> level(const IntVec& v) const;
};
LevelForm level_form(const LatticePolytope& face);

// Combinatorial face lattice; element 0 is the empty face, top is the
// polytope itself.  Faces are identified by their vertex-index sets.
struct FaceLattice {
    struct Face {
        std::vector<int> verts;  // indices into poly.vertices, sorted
        int dim;
    };
    LatticePolytope poly;
    std::vector<Face> faces;  // sorted by (dim, verts); faces[0] is empty face
    int top = -1;
    GradedPoset poset;  // rank = dim + 1

    bool leq(int a, int b) const;  // subset test via sorted vertex lists
    const LatticePolytope& face_polytope(int idx) const;  // built lazily

  private:
    mutable std::vector<std::shared_ptr<LatticePolytope>> cache_;
    friend FaceLattice face_lattice(const LatticePolytope&);
};

FaceLattice face_lattice(const LatticePolytope& poly);

}  // namespace nmil
