#ifndef CSTRI_HOMOLOGY_HPP
#define CSTRI_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "cstri/complex.hpp"

namespace cstri {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithNormalForm {
    /// Nonzero diagonal entries d_1 | d_2 | ..., all positive.
    std::vector<BigInt> invariant_factors;
    int rank = 0;
};

/// Diagonalization by unimodular row/column operations. Pivot choice is the
/// smallest nonzero absolute value, which keeps entry growth tame on sparse
/// incidence matrices.
SmithNormalForm smith_normal_form(IntMatrix a);

/// Signed boundary matrix from i-faces to (i-1)-faces, faces ordered by bit
/// pattern; i >= 1.
IntMatrix boundary_matrix(const SimplicialComplex& c, int i);

struct HomologyProfile {
    /// betti[i] for i = 0..dim (unreduced integral homology).
    std::vector<long long> betti;
    /// torsion[i]: invariant factors > 1 of the (i+1)-st boundary map.
    std::vector<std::vector<BigInt>> torsion;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Integral simplicial homology via Smith normal forms of the boundary
/// matrices.
HomologyProfile homology(const SimplicialComplex& c);

}  // namespace cstri

#endif
