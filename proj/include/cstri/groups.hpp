#ifndef CSTRI_GROUPS_HPP
#define CSTRI_GROUPS_HPP

#include <vector>

#include "cstri/complex.hpp"
#include "cstri/permutation.hpp"

namespace cstri {

enum class GroupKind { cyclic, dihedral };

/// The standard cyclic or dihedral action on 1..n, generated by
/// a = (1 2 ... n) and, for the dihedral group, b = (1 n)(2 n-1)...
struct GroupSpec {
    GroupKind kind = GroupKind::cyclic;
    int n = 0;

    Permutation rotation() const;
    Permutation reflection() const;
    std::vector<Permutation> elements() const;
    std::size_t order() const { return kind == GroupKind::cyclic ? n : 2 * n; }
};

/// A facet representative together with its declared orbit size (the
/// subscript in the paper's orbit tables).
struct OrbitGenerator {
    Face representative;
    int declared_size = 0;

    friend bool operator==(const OrbitGenerator&, const OrbitGenerator&) = default;
};

/// The orbit {F^g : g in G} of a face, sorted by bit pattern.
std::vector<Face> orbit_of(Face f, const GroupSpec& g);

/// Expands an orbit generator and checks the declared orbit size; a mismatch
/// signals a transcription error in an orbit table and throws.
std::vector<Face> expand_orbit(const OrbitGenerator& gen, const GroupSpec& g);

/// Builds the complex generated by a list of orbit generators.
SimplicialComplex complex_from_orbits(const std::vector<OrbitGenerator>& gens,
                                      const GroupSpec& g);

/// True iff the facet set is mapped onto itself.
bool is_invariant(const SimplicialComplex& c, const Permutation& p);

/// True iff some nonempty face is fixed setwise by the involution. For an
/// involution it is enough to look at fixed vertices and at 2-cycles that
/// appear as edges: any larger fixed face would contain one of those.
bool has_fixed_face(const SimplicialComplex& c, const Permutation& involution);

/// C^I = C and no nonempty face is fixed, for the standard involution on an
/// even number of vertices. Throws on odd n.
bool is_centrally_symmetric(const SimplicialComplex& c);

/// Keeps exactly the orbits in which every member F satisfies F n F^I = 0.
std::vector<OrbitGenerator> prefilter_orbits(const std::vector<OrbitGenerator>& orbits,
                                             const GroupSpec& g);

}  // namespace cstri

#endif
