#ifndef CSTRI_ENUMERATION_HPP
#define CSTRI_ENUMERATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cstri/groups.hpp"
#include "cstri/recognition.hpp"

namespace cstri {

enum class SphereCheckMode {
    exact2d,    // exact recognition, sphere dimension 2 only
    bistellar,  // exact links for d=3, bistellar certificates above
};

struct SearchConfig {
    int d = 3;  // sphere dimension; facets are (d+1)-sets
    int n = 8;  // even vertex count
    GroupKind group = GroupKind::cyclic;
    SphereCheckMode sphere_check = SphereCheckMode::bistellar;
    bool require_nearly_neighborly = true;
    /// Branch-and-bound on missing skeleton faces; switchable so pruned and
    /// unpruned runs can be compared.
    bool nn_pruning = true;
    long long flip_budget = 50'000;
    std::uint64_t seed = 1;
    double time_budget_seconds = 0;  // 0 = unlimited
    int threads = 1;

    GroupSpec group_spec() const { return {group, n}; }
};

struct EnumeratedClass {
    SimplicialComplex complex;
    std::vector<OrbitGenerator> orbit_presentation;
    RecognitionCertificate manifold_certificate;
    RecognitionCertificate sphere_certificate;
    bool certified = false;
    bool dihedral_invariant = false;
    std::string label;  // e.g. 3_nn_10_cy_1
};

struct SearchResult {
    SearchConfig config;
    /// Certified isomorphism classes, dihedral-invariant ones first, then by
    /// canonical form; labels carry the running index.
    std::vector<EnumeratedClass> classes;
    /// Candidates whose sphere certification was inconclusive; kept separate
    /// so a count discrepancy is visible rather than hidden.
    std::vector<EnumeratedClass> uncertified;
    long long nodes = 0;
    long long candidates = 0;  // closed pseudomanifolds evaluated
    bool exhausted = true;
};

/// One canonical representative per orbit of (d+1)-subsets, orbits whose
/// members meet their antipodal image deleted, sorted by representative.
std::vector<OrbitGenerator> candidate_orbits(const SearchConfig& cfg);

/// Backtracking over orbit selections: ridges never exceed two facets, a
/// selection with no open ridge is evaluated (closed pseudomanifold, central
/// symmetry, near-neighborliness, link and sphere certificates) and the
/// survivors are deduplicated up to isomorphism.
SearchResult enumerate_nn_cs_spheres(const SearchConfig& cfg);

}  // namespace cstri

#endif
