#ifndef CSTRI_CONSTRUCTIONS_HPP
#define CSTRI_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>

#include "cstri/groups.hpp"

namespace cstri {

/// Boundary complex of the k-dimensional crosspolytope on 2k vertices:
/// facets are the k-subsets containing no antipodal pair {i, k+i}.
SimplicialComplex crosspolytope_boundary(int k);

/// Orbit generators of the 3-sphere series on 4m vertices (m >= 2), the
/// closed form behind the printed table rows: 1234, 124(2m+3), then
/// 12(2m+2j+1)(2m+2j+3) for j=1..m-2 and 13(2j+1)(2j+4) for j=2..m-1,
/// each of orbit size 4m under Z_4m.
std::vector<OrbitGenerator> cs_sphere_4m_orbits(int m);

/// Expands the generators: nearly neighborly centrally symmetric 3-sphere
/// with a transitive cyclic action, (2m-2)*4m facets.
SimplicialComplex cs_sphere_4m(int m);

/// Orbit generators 123 and 13(2m+2) of the 2-torus on 4m vertices.
std::vector<OrbitGenerator> torus_t2_orbits(int m);

/// Vertex-transitive 2-torus on 4m vertices, a subcomplex of cs_sphere_4m(m).
SimplicialComplex torus_t2(int m);

/// The (d-1)-ball inside the crosspolytope boundary on 2d vertices (d even):
/// all facets obtained from {1..d} by replacing j of its vertices by their
/// antipodes, j = 0..(d-2)/2.
SimplicialComplex jockusch_ball(int d);

/// Ridges lying in exactly one facet, as a complex (the boundary of a pure
/// manifold-with-boundary such as a ball).
SimplicialComplex boundary_complex(const SimplicialComplex& c);

struct SurgeryResult {
    SimplicialComplex sphere;
    /// Applied on top of the naive labels (v1 = n+1, v2 = n+2) so the output
    /// follows the standard involution convention on n+2 vertices.
    Permutation relabeling;
};

/// Removes the facets of B and B^I and cones their boundaries from the two
/// fresh vertices. Requires: B, B^I facet-wise subcomplexes of s; no facet in
/// B n B^I; v1 = n+1, v2 = n+2; n even.
SurgeryResult surgery(const SimplicialComplex& s, const SimplicialComplex& ball,
                      Vertex v1, Vertex v2);

/// Surgery on the crosspolytope boundary with the jockusch_ball: the unique
/// nearly neighborly centrally symmetric polytopal sphere on 2d+2 vertices
/// (d even).
SurgeryResult mcmullen_shephard_sphere(int d);

struct BallSearchOptions {
    std::uint64_t seed = 1;
    long long node_budget = 2'000'000;
    /// Require the boundary sphere of the ball to be stacked (the balls in
    /// the inductive 3-sphere construction have stacked boundaries).
    bool stacked_boundary = true;
};

/// Searches for a shellable ball B in a centrally symmetric 3-sphere with:
/// all vertices of s covered, no interior edge, no facet shared between B
/// and B^I. Deterministic given the seed; nullopt when the node budget runs
/// out before a ball is found.
std::optional<SimplicialComplex> find_surgery_ball(const SimplicialComplex& s,
                                                   const BallSearchOptions& opts = {});

struct JockuschStep {
    SimplicialComplex sphere;
    SimplicialComplex ball;  // in the labels of the input sphere
    Permutation relabeling;
};

/// One induction step: finds a ball via find_surgery_ball and applies the
/// surgery, turning a nearly neighborly centrally symmetric 3-sphere on 2k
/// vertices into one on 2k+2 vertices. Throws std::runtime_error when the
/// ball search exhausts its budget.
JockuschStep jockusch_next(const SimplicialComplex& s, const BallSearchOptions& opts = {});

/// Stacked centrally symmetric (d-1)-sphere on 2k vertices: the crosspolytope
/// boundary with k-d successive antipodal facet pairs stellarly subdivided.
/// Attains the lower-bound f-vector with equality.
SimplicialComplex stacked_cs_sphere(int d, int k);

}  // namespace cstri

#endif
