#ifndef CSTRI_PERMUTATION_HPP
#define CSTRI_PERMUTATION_HPP

#include <vector>

#include "cstri/face.hpp"

namespace cstri {

/// A bijection of the vertex labels 1..n.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n);

    /// images[i-1] is the image of vertex i; validates bijectivity.
    static Permutation from_images(std::vector<Vertex> images);

    /// Builds the permutation on 1..n that is the given product of cycles,
    /// e.g. cycles {{1,5},{2,6}} on n=8.
    static Permutation from_cycles(int n, const std::vector<std::vector<Vertex>>& cycles);

    int n() const { return static_cast<int>(images_.size()); }

    Vertex operator()(Vertex v) const { return images_[v - 1]; }

    Face operator()(Face f) const {
        Face out;
        for (std::uint64_t b = f.bits(); b != 0; b &= b - 1)
            out = out.with(images_[std::countr_zero(b)]);
        return out;
    }

    /// (p.after(q))(v) = p(q(v))
    Permutation after(const Permutation& q) const;

    Permutation inverse() const;

    Permutation power(long long e) const;

    bool is_identity() const;

    int order() const;

    const std::vector<Vertex>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<Vertex> images_;
};

/// The standard fixed-point-free involution (1 k+1)(2 k+2)...(k 2k) on n=2k
/// vertices. Throws on odd n.
Permutation central_involution(int n);

}  // namespace cstri

#endif
