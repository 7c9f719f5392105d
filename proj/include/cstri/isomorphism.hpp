#ifndef CSTRI_ISOMORPHISM_HPP
#define CSTRI_ISOMORPHISM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cstri/complex.hpp"

namespace cstri {

/// A vertex bijection with B = A^sigma, or nullopt. Cheap invariants
/// (f-vector, color refinement) reject first; then backtracking over
/// color-compatible vertex maps. Requires a.n() == b.n().
std::optional<Permutation> are_isomorphic(const SimplicialComplex& a,
                                          const SimplicialComplex& b);

/// Canonical form: the lexicographically least sorted facet bitset list over
/// all relabelings that respect the color-refinement classes. Equal lists iff
/// isomorphic. Complexes are normalized to contiguous labels first.
std::vector<std::uint64_t> canonical_facet_list(const SimplicialComplex& c);

/// Color classes from iterated refinement of vertex invariants (degree and
/// facet profiles). Classes are numbered in a label-independent order, so
/// histograms are comparable across isomorphic complexes.
std::vector<int> refinement_colors(const SimplicialComplex& c);

}  // namespace cstri

#endif
