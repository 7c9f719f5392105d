#include "cstri/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace cstri {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), 1);
    return p;
}

Permutation Permutation::from_images(std::vector<Vertex> images) {
    const int n = static_cast<int>(images.size());
    if (n > kMaxVertices) throw std::invalid_argument("Permutation: n > 64");
    std::vector<char> seen(n, 0);
    for (Vertex v : images) {
        if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("Permutation: not a bijection on 1..n");
        seen[v - 1] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<Vertex>>& cycles) {
    Permutation p = identity(n);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Vertex from = cyc[i];
            Vertex to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > n) throw std::invalid_argument("Permutation: cycle entry out of range");
            p.images_[from - 1] = to;
        }
    }
    return from_images(std::move(p.images_));  // re-validate
}

Permutation Permutation::after(const Permutation& q) const {
    if (n() != q.n()) throw std::invalid_argument("Permutation: size mismatch");
    Permutation r;
    r.images_.resize(images_.size());
    for (int v = 1; v <= n(); ++v) r.images_[v - 1] = images_[q(v) - 1];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (int v = 1; v <= n(); ++v) r.images_[images_[v - 1] - 1] = v;
    return r;
}

Permutation Permutation::power(long long e) const {
    if (e < 0) return inverse().power(-e);
    Permutation acc = identity(n());
    Permutation base = *this;
    while (e > 0) {
        if (e & 1) acc = acc.after(base);
        base = base.after(base);
        e >>= 1;
    }
    return acc;
}

bool Permutation::is_identity() const {
    for (int v = 1; v <= n(); ++v)
        if (images_[v - 1] != v) return false;
    return true;
}

int Permutation::order() const {
    int ord = 1;
    std::vector<char> done(images_.size(), 0);
    for (int v = 1; v <= n(); ++v) {
        if (done[v - 1]) continue;
        int len = 0;
        for (int u = v; !done[u - 1]; u = images_[u - 1]) {
            done[u - 1] = 1;
            ++len;
        }
        ord = static_cast<int>(std::lcm(ord, len));
    }
    return ord;
}

Permutation central_involution(int n) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("central_involution: n must be positive and even");
    const int k = n / 2;
    std::vector<Vertex> img(n);
    for (int i = 1; i <= k; ++i) {
        img[i - 1] = k + i;
        img[k + i - 1] = i;
    }
    return Permutation::from_images(std::move(img));
}

}  // namespace cstri
