#ifndef CSTRI_COMPLEX_HPP
#define CSTRI_COMPLEX_HPP

#include <optional>
#include <vector>

#include "cstri/face.hpp"
#include "cstri/permutation.hpp"

namespace cstri {

/// f-vector: entries[i] counts the i-dimensional faces, i = 0..dim.
using FVector = std::vector<long long>;

/// An immutable simplicial complex given by its inclusion-maximal faces.
/// Vertex labels live in 1..n; the label space n may exceed the set of
/// labels actually used (links inherit the ambient labels). Facets are kept
/// sorted by bit pattern and contain no nested pair.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds a complex from arbitrary nonempty faces: deduplicates and
    /// drops faces contained in another. With n = 0 the label space is the
    /// largest label present.
    static SimplicialComplex from_facets(std::vector<Face> faces, int n = 0);

    static SimplicialComplex empty_complex(int n) {
        SimplicialComplex c;
        c.n_ = n;
        return c;
    }

    int n() const { return n_; }
    int dim() const { return dim_; }
    bool is_empty() const { return facets_.empty(); }
    bool pure() const { return pure_; }
    const std::vector<Face>& facets() const { return facets_; }
    long long facet_count() const { return static_cast<long long>(facets_.size()); }

    /// Union of all facets (the vertices actually used).
    Face support() const;

    bool has_facet(Face f) const;
    bool has_face(Face f) const;

    /// All i-dimensional faces, sorted by bit pattern.
    std::vector<Face> faces(int i) const;

    /// All faces grouped by dimension (index = dimension).
    std::vector<std::vector<Face>> faces_by_dim() const;

    FVector f_vector() const;
    long long euler_characteristic() const;

    /// Faces G disjoint from f with G u f a face; throws if f is not a face.
    SimplicialComplex link(Face f) const;

    /// Closed star: all facets containing f; throws if f is not a face.
    SimplicialComplex star(Face f) const;

    /// All faces of dimension <= l.
    SimplicialComplex skeleton(int l) const;

    /// Relabels vertices; the permutation must cover 1..n.
    SimplicialComplex relabeled(const Permutation& p) const;

    /// Complex on contiguous labels 1..m (m = #used vertices) plus the
    /// relabeling old -> new that produced it. Never applied implicitly.
    std::pair<SimplicialComplex, Permutation> normalized() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int n_ = 0;
    int dim_ = -1;
    bool pure_ = true;
    std::vector<Face> facets_;
};

/// Join: facets are unions F_A u F_B with B's labels shifted above A's.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

struct SuspensionResult {
    SimplicialComplex complex;
    /// Relabeling applied on top of the naive labeling (old labels kept,
    /// poles at n+1 and n+2) so that the poles form the antipodal pair of
    /// the standard involution on n+2 vertices.
    Permutation relabeling;
};

/// Join with S^0. The two new vertices are placed so that central_involution(n+2)
/// exchanges them and restricts to the old involution on the old vertices.
SuspensionResult suspension(const SimplicialComplex& c);

}  // namespace cstri

#endif
