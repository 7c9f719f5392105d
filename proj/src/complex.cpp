#include "cstri/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cstri {

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces, int n) {
    for (Face f : faces) {
        if (f.empty()) throw std::invalid_argument("from_facets: empty face");
    }
    if (faces.empty() && n == 0) throw std::invalid_argument("from_facets: no facets");

    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    // Drop faces contained in another. Sorting by size keeps this O(m^2)
    // with the cheap word-subset test, fine at this scale.
    std::vector<Face> maximal;
    std::stable_sort(faces.begin(), faces.end(),
                     [](Face a, Face b) { return a.size() > b.size(); });
    for (Face f : faces) {
        bool nested = false;
        for (Face g : maximal) {
            if (g.contains(f)) {
                nested = true;
                break;
            }
        }
        if (!nested) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());

    SimplicialComplex c;
    c.facets_ = std::move(maximal);
    int max_label = 0;
    int dmin = kMaxVertices, dmax = -1;
    for (Face f : c.facets_) {
        max_label = std::max(max_label, f.max_vertex());
        dmin = std::min(dmin, f.dim());
        dmax = std::max(dmax, f.dim());
    }
    if (n != 0 && n < max_label)
        throw std::invalid_argument("from_facets: vertex label exceeds n=" + std::to_string(n));
    c.n_ = (n != 0) ? n : max_label;
    if (c.n_ > kMaxVertices) throw std::invalid_argument("from_facets: more than 64 vertices");
    c.dim_ = dmax;
    c.pure_ = c.facets_.empty() || dmin == dmax;
    return c;
}

Face SimplicialComplex::support() const {
    std::uint64_t bits = 0;
    for (Face f : facets_) bits |= f.bits();
    return Face::from_bits(bits);
}

bool SimplicialComplex::has_facet(Face f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
}

bool SimplicialComplex::has_face(Face f) const {
    if (f.empty()) return true;
    for (Face g : facets_)
        if (g.contains(f)) return true;
    return false;
}

namespace {

// Appends all s-subsets of the set bits of `from` to `out`.
void subsets_of_size(std::uint64_t from, int s, std::uint64_t prefix, int picked,
                     std::vector<Face>& out) {
    if (picked == s) {
        out.push_back(Face::from_bits(prefix));
        return;
    }
    while (from != 0) {
        std::uint64_t low = from & (~from + 1);
        from ^= low;
        if (std::popcount(from) + 1 < s - picked) return;
        subsets_of_size(from, s, prefix | low, picked + 1, out);
    }
}

}  // namespace

std::vector<Face> SimplicialComplex::faces(int i) const {
    if (i < 0 || i > dim_) throw std::invalid_argument("faces: dimension out of range");
    std::vector<Face> out;
    for (Face f : facets_) {
        if (f.dim() < i) continue;
        subsets_of_size(f.bits(), i + 1, 0, 0, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_dim() const {
    std::vector<std::vector<Face>> out(dim_ + 1);
    for (int i = 0; i <= dim_; ++i) out[i] = faces(i);
    return out;
}

FVector SimplicialComplex::f_vector() const {
    FVector f(dim_ + 1, 0);
    for (int i = 0; i <= dim_; ++i) f[i] = static_cast<long long>(faces(i).size());
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    FVector f = f_vector();
    for (int i = 0; i <= dim_; ++i) chi += (i % 2 == 0) ? f[i] : -f[i];
    return chi;
}

SimplicialComplex SimplicialComplex::link(Face f) const {
    if (!has_face(f)) throw std::invalid_argument("link: not a face: " + to_string(f));
    std::vector<Face> out;
    for (Face g : facets_) {
        if (g.contains(f)) {
            Face rest = g.minus(f);
            if (!rest.empty()) out.push_back(rest);
        }
    }
    if (out.empty()) return empty_complex(n_);
    return from_facets(std::move(out), n_);
}

SimplicialComplex SimplicialComplex::star(Face f) const {
    if (!has_face(f)) throw std::invalid_argument("star: not a face: " + to_string(f));
    std::vector<Face> out;
    for (Face g : facets_)
        if (g.contains(f)) out.push_back(g);
    return from_facets(std::move(out), n_);
}

SimplicialComplex SimplicialComplex::skeleton(int l) const {
    if (l < 0 || l > dim_) throw std::invalid_argument("skeleton: dimension out of range");
    std::vector<Face> out;
    for (Face f : facets_) {
        if (f.dim() <= l) {
            out.push_back(f);
        } else {
            subsets_of_size(f.bits(), l + 1, 0, 0, out);
        }
    }
    return from_facets(std::move(out), n_);
}

SimplicialComplex SimplicialComplex::relabeled(const Permutation& p) const {
    if (p.n() < n_) throw std::invalid_argument("relabeled: permutation too small");
    std::vector<Face> out;
    out.reserve(facets_.size());
    for (Face f : facets_) out.push_back(p(f));
    return from_facets(std::move(out), p.n());
}

std::pair<SimplicialComplex, Permutation> SimplicialComplex::normalized() const {
    const Face supp = support();
    std::vector<Vertex> used = supp.vertices();
    std::vector<Vertex> img(n_);
    // Used vertices become 1..m in label order; unused ones fill the tail so
    // the map stays a bijection on 1..n.
    int next = 1;
    for (Vertex v : used) img[v - 1] = next++;
    for (int v = 1; v <= n_; ++v)
        if (!supp.contains(v)) img[v - 1] = next++;
    Permutation p = Permutation::from_images(std::move(img));
    std::vector<Face> out;
    out.reserve(facets_.size());
    for (Face f : facets_) out.push_back(p(f));
    return {from_facets(std::move(out), static_cast<int>(used.size())), p};
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.n() + b.n() > kMaxVertices) throw std::invalid_argument("join: more than 64 vertices");
    std::vector<Face> out;
    for (Face fa : a.facets())
        for (Face fb : b.facets())
            out.push_back(fa.unite(Face::from_bits(fb.bits() << a.n())));
    if (a.is_empty())
        for (Face fb : b.facets()) out.push_back(Face::from_bits(fb.bits() << a.n()));
    if (b.is_empty())
        for (Face fa : a.facets()) out.push_back(fa);
    return SimplicialComplex::from_facets(std::move(out), a.n() + b.n());
}

SuspensionResult suspension(const SimplicialComplex& c) {
    const int n = c.n();
    SimplicialComplex poles = SimplicialComplex::from_facets(
        {Face::of({1}), Face::of({2})}, 2);
    SimplicialComplex naive = join(c, poles);  // poles at n+1, n+2

    // For even n the old labels follow the standard involution convention;
    // shift i -> i+1 for i > k so that (k+1, 2k+2) is the fresh antipodal
    // pair. For odd n there is no convention to maintain.
    Permutation relab = Permutation::identity(n + 2);
    if (n % 2 == 0) {
        const int k = n / 2;
        std::vector<Vertex> img(n + 2);
        for (int i = 1; i <= k; ++i) img[i - 1] = i;
        for (int i = k + 1; i <= n; ++i) img[i - 1] = i + 1;
        img[n] = k + 1;      // first pole
        img[n + 1] = n + 2;  // second pole
        relab = Permutation::from_images(std::move(img));
    }
    return {naive.relabeled(relab), relab};
}

}  // namespace cstri
