#ifndef CSTRI_FACE_HPP
#define CSTRI_FACE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cstri {

/// 1-based vertex label. Labels live in 1..n with n <= 64.
using Vertex = int;

constexpr int kMaxVertices = 64;

/// A face of a simplicial complex, stored as a bitset over vertex labels.
/// Bit (v-1) is set iff vertex v belongs to the face. All subset/superset
/// tests are single word operations.
class Face {
public:
    constexpr Face() = default;

    static constexpr Face from_bits(std::uint64_t bits) {
        Face f;
        f.bits_ = bits;
        return f;
    }

    static Face of(std::initializer_list<Vertex> vs) {
        Face f;
        for (Vertex v : vs) f = f.with(v);
        return f;
    }

    template <typename Range>
    static Face from_vertices(const Range& vs) {
        Face f;
        for (Vertex v : vs) {
            if (f.contains(v)) throw std::invalid_argument("Face: repeated vertex " + std::to_string(v));
            f = f.with(v);
        }
        return f;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int dim() const { return size() - 1; }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(Vertex v) const { return (bits_ >> (v - 1)) & 1u; }
    constexpr bool contains(Face f) const { return (bits_ & f.bits_) == f.bits_; }
    constexpr bool intersects(Face f) const { return (bits_ & f.bits_) != 0; }

    constexpr Face unite(Face f) const { return from_bits(bits_ | f.bits_); }
    constexpr Face intersect(Face f) const { return from_bits(bits_ & f.bits_); }
    constexpr Face minus(Face f) const { return from_bits(bits_ & ~f.bits_); }

    Face with(Vertex v) const {
        check_label(v);
        return from_bits(bits_ | (std::uint64_t{1} << (v - 1)));
    }
    Face without(Vertex v) const {
        check_label(v);
        return from_bits(bits_ & ~(std::uint64_t{1} << (v - 1)));
    }

    Vertex min_vertex() const { return std::countr_zero(bits_) + 1; }
    Vertex max_vertex() const { return kMaxVertices - std::countl_zero(bits_); }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend constexpr auto operator<=>(const Face&, const Face&) = default;

private:
    static void check_label(Vertex v) {
        if (v < 1 || v > kMaxVertices)
            throw std::invalid_argument("Face: vertex label out of range: " + std::to_string(v));
    }

    std::uint64_t bits_ = 0;
};

inline std::string to_string(Face f) {
    std::string s;
    for (Vertex v : f.vertices()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s.empty() ? "{}" : s;
}

}  // namespace cstri

#endif
