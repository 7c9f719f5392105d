#ifndef CSTRI_RECOGNITION_HPP
#define CSTRI_RECOGNITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cstri/complex.hpp"

namespace cstri {

/// A bistellar move replaces star(face) = face * boundary(co_face) by
/// boundary(face) * co_face. The move index is dim(co_face), so index 0 is
/// the stellar subdivision of a facet and index d removes a vertex.
struct BistellarMove {
    Face face;
    Face co_face;

    BistellarMove reversed() const { return {co_face, face}; }
    friend bool operator==(const BistellarMove&, const BistellarMove&) = default;
};

enum class Verdict {
    sphere,
    manifold_not_certified_sphere,
    not_pseudomanifold,
    not_manifold,
};

const char* to_string(Verdict v);

struct VertexLinkReport {
    Vertex v = 0;
    bool certified = false;
    bool failed = false;  // definitive negative; otherwise inconclusive
    std::string detail;
};

struct RecognitionCertificate {
    Verdict verdict = Verdict::manifold_not_certified_sphere;
    std::vector<BistellarMove> move_log;  // replays input -> boundary of simplex
    std::vector<VertexLinkReport> links_checked;
    std::uint64_t seed = 0;
    long long moves_used = 0;
    bool all_links_certified = false;
    std::string reason;
};

/// Pure, every ridge in exactly two facets, facet adjacency graph connected.
bool is_closed_pseudomanifold(const SimplicialComplex& c);

/// Exact recognition for dim <= 2: two points / a single cycle / a closed
/// connected surface with chi = 2 and cycle links. Throws above dim 2.
bool is_sphere_exact_low_dim(const SimplicialComplex& c);

/// The boundary of a simplex: all (d+1)-subsets of d+2 vertices are facets.
bool is_boundary_of_simplex(const SimplicialComplex& c);

/// Exact test for stacked 2-spheres by backtracking over removals of
/// degree-3 vertices down to the tetrahedron boundary.
bool is_stacked_2sphere(const SimplicialComplex& c);

bool is_valid_move(const SimplicialComplex& c, const BistellarMove& m);

/// Applies a move; throws std::invalid_argument if it is not valid.
SimplicialComplex bistellar_flip(const SimplicialComplex& c, const BistellarMove& m);

/// All valid moves of the given index. Index-0 moves use the fresh label
/// n+1 as the new vertex.
std::vector<BistellarMove> valid_moves(const SimplicialComplex& c, int index);

/// Flip search driving the f-vector down: greedy on reducing moves with
/// random escape moves on plateaus. One-sided: verdict `sphere` is a
/// certificate (the move log replays to the boundary of a simplex), anything
/// else is inconclusive unless the reason states an obstruction.
RecognitionCertificate sphere_heuristic(const SimplicialComplex& c, long long budget,
                                        std::uint64_t seed);

/// Checks that every vertex link is a combinatorial sphere: exact in link
/// dimension <= 2, sphere_heuristic above. When invariance generators are
/// supplied (and verified), only one representative per vertex orbit is
/// checked.
RecognitionCertificate is_combinatorial_manifold(
    const SimplicialComplex& c, const std::vector<Permutation>& invariance_gens = {},
    long long flip_budget = 50'000, std::uint64_t seed = 1);

}  // namespace cstri

#endif
