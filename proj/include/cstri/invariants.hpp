#ifndef CSTRI_INVARIANTS_HPP
#define CSTRI_INVARIANTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "cstri/complex.hpp"

namespace cstri {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// h-vector (h_0..h_d) of an f-vector with d = dim+1; h_0 = 1 and the sum of
/// entries equals the facet count.
std::vector<long long> h_vector(const FVector& f, int d);

/// Inverse transform: f from h.
FVector f_from_h(const std::vector<long long>& h, int d);

/// Completes a prefix f_0..f_{d/2-1} to the full f-vector of a (d-1)-sphere
/// by imposing h_i = h_{d-i}. Even d only; throws when no symmetric
/// completion matches the prefix.
FVector ds_complete(const std::vector<long long>& prefix, int d);

/// Largest l such that the complex contains the (l-1)-skeleton of the
/// crosspolytope boundary on its 2k vertices. Requires central symmetry.
int central_neighborliness_degree(const SimplicialComplex& c);

/// Centrally floor(d/2)-neighborly for d = dim+1.
bool is_nearly_neighborly(const SimplicialComplex& c);

/// Lower-bound f-vector for centrally symmetric (d-1)-spheres on 2k
/// vertices: f_i >= 2^{i+1} C(d,i+1) + 2(k-d) C(d,i) and
/// f_{d-1} >= 2^d + 2(k-d)(d-1).
FVector stanley_lower_bound_vector(int d, int k);

/// Coordinatewise f >= stanley_lower_bound_vector for the complex's own
/// (d, k).
bool meets_stanley_bound(const SimplicialComplex& c);

/// f-vector of a nearly neighborly centrally symmetric (d-1)-sphere on 2k
/// vertices: crosspolytope skeleton counts up to d/2-1, completed by the
/// Dehn-Sommerville relations. Even d only.
FVector nearly_neighborly_fvector(int d, int k);

/// f_i(c) <= f_i of the nearly neighborly profile, coordinatewise.
bool cs_upper_bound_check(const SimplicialComplex& c);

/// Solutions (n, q) of (6-q) n = 12 with q >= 3: the vertex counts and
/// vertex degrees of the vertex-transitive triangulated 2-spheres.
std::vector<std::pair<int, int>> vertex_transitive_2sphere_classification();

/// Binomial coefficient with rational (possibly half-integer) upper entry:
/// x(x-1)...(x-r+1) / r!.
Rational generalized_binomial(const Rational& x, int r);

enum class BoundStatus { violated, strict, equality };

const char* to_string(BoundStatus s);

/// Evaluates (-1)^r C(2r+1, r+1) (chi - 2) against 4^{r+1} C((k-1)/2, r+1)
/// in exact rational arithmetic and classifies the comparison.
BoundStatus kuehnel_sparla_check(int r, int k, long long chi);

/// Convenience wrapper for a centrally symmetric 2r-manifold: extracts
/// r = dim/2, k = n/2 and the Euler characteristic. Even dimension only.
BoundStatus kuehnel_sparla_check(const SimplicialComplex& c);

}  // namespace cstri

#endif
