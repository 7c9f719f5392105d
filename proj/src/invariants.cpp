#include "cstri/invariants.hpp"

#include <stdexcept>

#include "cstri/groups.hpp"

namespace cstri {

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<long long> h_vector(const FVector& f, int d) {
    if (static_cast<int>(f.size()) != d)
        throw std::invalid_argument("h_vector: expected d entries f_0..f_{d-1}");
    std::vector<long long> h(d + 1, 0);
    for (int j = 0; j <= d; ++j) {
        long long sum = 0;
        for (int i = 0; i <= j; ++i) {
            const long long fi = (i == 0) ? 1 : f[i - 1];
            const long long term = binom(d - i, j - i) * fi;
            sum += ((j - i) % 2 == 0) ? term : -term;
        }
        h[j] = sum;
    }
    return h;
}

FVector f_from_h(const std::vector<long long>& h, int d) {
    if (static_cast<int>(h.size()) != d + 1)
        throw std::invalid_argument("f_from_h: expected d+1 entries");
    FVector f(d, 0);
    for (int j = 1; j <= d; ++j) {
        long long sum = 0;
        for (int i = 0; i <= j; ++i) sum += binom(d - i, j - i) * h[i];
        f[j - 1] = sum;
    }
    return f;
}

FVector ds_complete(const std::vector<long long>& prefix, int d) {
    if (d % 2 != 0 || d < 2)
        throw std::invalid_argument("ds_complete: even d required");
    if (static_cast<int>(prefix.size()) != d / 2)
        throw std::invalid_argument("ds_complete: prefix must have d/2 entries");
    // h_0..h_{d/2} are determined by f_{-1}..f_{d/2-1}; mirror the rest.
    std::vector<long long> h(d + 1, 0);
    for (int j = 0; j <= d / 2; ++j) {
        long long sum = 0;
        for (int i = 0; i <= j; ++i) {
            const long long fi = (i == 0) ? 1 : prefix[i - 1];
            const long long term = binom(d - i, j - i) * fi;
            sum += ((j - i) % 2 == 0) ? term : -term;
        }
        h[j] = sum;
    }
    for (int j = d / 2 + 1; j <= d; ++j) h[j] = h[d - j];
    FVector f = f_from_h(h, d);
    for (int i = 0; i < d / 2; ++i)
        if (f[i] != prefix[i])
            throw std::invalid_argument("ds_complete: prefix admits no symmetric completion");
    return f;
}

int central_neighborliness_degree(const SimplicialComplex& c) {
    if (!is_centrally_symmetric(c))
        throw std::invalid_argument("central_neighborliness_degree: not centrally symmetric");
    const int k = c.n() / 2;
    const FVector f = c.f_vector();
    // A centrally symmetric complex is a subcomplex of the crosspolytope
    // boundary, so matching the skeleton is a pure counting condition.
    int l = 0;
    for (int i = 0; i <= c.dim() && i < k; ++i) {
        const long long want = (1LL << (i + 1)) * binom(k, i + 1);
        if (f[i] != want) break;
        l = i + 1;
    }
    return l;
}

bool is_nearly_neighborly(const SimplicialComplex& c) {
    const int d = c.dim() + 1;
    return central_neighborliness_degree(c) >= d / 2;
}

FVector stanley_lower_bound_vector(int d, int k) {
    if (d < 1 || k < d) throw std::invalid_argument("stanley_lower_bound_vector: need k >= d >= 1");
    FVector f(d, 0);
    for (int i = 0; i <= d - 2; ++i)
        f[i] = (1LL << (i + 1)) * binom(d, i + 1) + 2LL * (k - d) * binom(d, i);
    f[d - 1] = (1LL << d) + 2LL * (k - d) * (d - 1);
    return f;
}

bool meets_stanley_bound(const SimplicialComplex& c) {
    if (c.n() % 2 != 0) throw std::invalid_argument("meets_stanley_bound: even vertex count required");
    const int d = c.dim() + 1;
    const FVector bound = stanley_lower_bound_vector(d, c.n() / 2);
    const FVector f = c.f_vector();
    for (int i = 0; i < d; ++i)
        if (f[i] < bound[i]) return false;
    return true;
}

FVector nearly_neighborly_fvector(int d, int k) {
    if (d % 2 != 0) throw std::invalid_argument("nearly_neighborly_fvector: even d required");
    if (k < d) throw std::invalid_argument("nearly_neighborly_fvector: need k >= d");
    std::vector<long long> prefix(d / 2);
    for (int i = 0; i < d / 2; ++i) prefix[i] = (1LL << (i + 1)) * binom(k, i + 1);
    return ds_complete(prefix, d);
}

bool cs_upper_bound_check(const SimplicialComplex& c) {
    const int d = c.dim() + 1;
    const FVector profile = nearly_neighborly_fvector(d, c.n() / 2);
    const FVector f = c.f_vector();
    for (int i = 0; i < d; ++i)
        if (f[i] > profile[i]) return false;
    return true;
}

std::vector<std::pair<int, int>> vertex_transitive_2sphere_classification() {
    // (6-q) n = 12 over positive integers; vertex degrees in a simplicial
    // closed surface are at least 3.
    std::vector<std::pair<int, int>> out;
    for (int q = 3; q <= 5; ++q) {
        if (12 % (6 - q) != 0) continue;
        const int n = 12 / (6 - q);
        if (n >= q + 1) out.push_back({n, q});
    }
    return out;
}

Rational generalized_binomial(const Rational& x, int r) {
    if (r < 0) throw std::invalid_argument("generalized_binomial: r >= 0 required");
    Rational num = 1;
    BigInt den = 1;
    for (int i = 0; i < r; ++i) {
        num *= x - i;
        den *= i + 1;
    }
    return num / Rational(den);
}

const char* to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::violated: return "violated";
        case BoundStatus::strict: return "strict";
        case BoundStatus::equality: return "equality";
    }
    return "?";
}

BoundStatus kuehnel_sparla_check(int r, int k, long long chi) {
    if (r < 1) throw std::invalid_argument("kuehnel_sparla_check: r >= 1 required");
    if (k < 2 * r + 1) throw std::invalid_argument("kuehnel_sparla_check: k >= 2r+1 required");
    Rational lhs = Rational(binom(2 * r + 1, r + 1)) * (chi - 2);
    if (r % 2 != 0) lhs = -lhs;
    Rational rhs = generalized_binomial(Rational(k - 1, 2), r + 1);
    for (int i = 0; i < r + 1; ++i) rhs *= 4;
    if (lhs > rhs) return BoundStatus::violated;
    return lhs == rhs ? BoundStatus::equality : BoundStatus::strict;
}

BoundStatus kuehnel_sparla_check(const SimplicialComplex& c) {
    if (c.dim() % 2 != 0 || c.dim() < 2)
        throw std::invalid_argument("kuehnel_sparla_check: even-dimensional manifold required");
    if (c.n() % 2 != 0)
        throw std::invalid_argument("kuehnel_sparla_check: even vertex count required");
    return kuehnel_sparla_check(c.dim() / 2, c.n() / 2, c.euler_characteristic());
}

}  // namespace cstri
