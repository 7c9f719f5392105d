#include "cstri/recognition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cstri/groups.hpp"

namespace cstri {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::sphere: return "sphere";
        case Verdict::manifold_not_certified_sphere: return "manifold-not-certified-sphere";
        case Verdict::not_pseudomanifold: return "not-pseudomanifold";
        case Verdict::not_manifold: return "not-manifold";
    }
    return "?";
}

namespace {

// ridge mask -> indices of facets containing it
std::map<std::uint64_t, std::vector<int>> ridge_incidences(const SimplicialComplex& c) {
    std::map<std::uint64_t, std::vector<int>> out;
    const auto& facets = c.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (Vertex v : facets[i].vertices())
            out[facets[i].without(v).bits()].push_back(static_cast<int>(i));
    }
    return out;
}

void subsets_of_size(std::uint64_t from, int s, std::uint64_t prefix,
                     std::vector<std::uint64_t>& out) {
    if (s == 0) {
        out.push_back(prefix);
        return;
    }
    while (from != 0) {
        std::uint64_t low = from & (~from + 1);
        from ^= low;
        if (std::popcount(from) + 1 < s) return;
        subsets_of_size(from, s - 1, prefix | low, out);
    }
}

}  // namespace

bool is_closed_pseudomanifold(const SimplicialComplex& c) {
    if (c.is_empty() || !c.pure()) return false;
    if (c.dim() == 0) return c.facet_count() == 2;

    auto ridges = ridge_incidences(c);
    for (const auto& [mask, fs] : ridges)
        if (fs.size() != 2) return false;

    // Facet adjacency connectivity via union-find over shared ridges.
    std::vector<int> parent(c.facets().size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [mask, fs] : ridges) parent[find(fs[0])] = find(fs[1]);
    const int root = find(0);
    for (std::size_t i = 1; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

bool is_sphere_exact_low_dim(const SimplicialComplex& c) {
    if (c.dim() > 2) throw std::invalid_argument("is_sphere_exact_low_dim: dim > 2");
    if (c.is_empty() || !c.pure()) return false;
    switch (c.dim()) {
        case 0:
            return c.facet_count() == 2;
        case 1:
            // single cycle: degrees 2 and connected (pseudomanifold), chi 0
            return is_closed_pseudomanifold(c) && c.euler_characteristic() == 0;
        default: {
            if (!is_closed_pseudomanifold(c)) return false;
            if (c.euler_characteristic() != 2) return false;
            for (Vertex v : c.support().vertices()) {
                SimplicialComplex lk = c.link(Face::of({v}));
                if (lk.dim() != 1 || !is_closed_pseudomanifold(lk) ||
                    lk.euler_characteristic() != 0)
                    return false;
            }
            return true;
        }
    }
}

bool is_boundary_of_simplex(const SimplicialComplex& c) {
    if (c.is_empty() || !c.pure()) return false;
    const Face supp = c.support();
    if (supp.size() != c.dim() + 2) return false;
    if (c.facet_count() != c.dim() + 2) return false;
    for (Vertex v : supp.vertices())
        if (!c.has_facet(supp.without(v))) return false;
    return true;
}

bool is_stacked_2sphere(const SimplicialComplex& c) {
    if (c.dim() != 2 || !is_sphere_exact_low_dim(c)) return false;

    std::function<bool(std::vector<Face>)> reduce = [&](std::vector<Face> facets) -> bool {
        SimplicialComplex cur = SimplicialComplex::from_facets(std::move(facets));
        const Face supp = cur.support();
        if (supp.size() == 4) return cur.facet_count() == 4;
        for (Vertex v : supp.vertices()) {
            std::vector<Face> at_v, rest;
            for (Face f : cur.facets())
                (f.contains(v) ? at_v : rest).push_back(f);
            if (at_v.size() != 3) continue;
            Face tri;
            for (Face f : at_v) tri = tri.unite(f.without(v));
            if (tri.size() != 3 || cur.has_facet(tri)) continue;
            rest.push_back(tri);
            if (reduce(std::move(rest))) return true;
        }
        return false;
    };
    return reduce(c.facets());
}

bool is_valid_move(const SimplicialComplex& c, const BistellarMove& m) {
    const Face a = m.face, b = m.co_face;
    if (a.empty() || b.empty() || a.intersects(b)) return false;
    if (!c.pure() || c.is_empty()) return false;
    const int d = c.dim();
    if (a.size() + b.size() != d + 2) return false;
    if (!c.has_face(a)) return false;
    if (c.has_face(b)) return false;

    // link(a) must be the boundary of the simplex on b.
    int count = 0;
    std::uint64_t uni = 0;
    for (Face f : c.facets()) {
        if (!f.contains(a)) continue;
        ++count;
        uni |= f.minus(a).bits();
    }
    return count == b.size() && uni == b.bits();
}

SimplicialComplex bistellar_flip(const SimplicialComplex& c, const BistellarMove& m) {
    if (!is_valid_move(c, m))
        throw std::invalid_argument("bistellar_flip: invalid move (" + to_string(m.face) +
                                    " ; " + to_string(m.co_face) + ")");
    std::vector<Face> out;
    for (Face f : c.facets())
        if (!f.contains(m.face)) out.push_back(f);
    for (Vertex v : m.face.vertices()) out.push_back(m.face.without(v).unite(m.co_face));
    const int n = std::max(c.n(), m.co_face.max_vertex());
    return SimplicialComplex::from_facets(std::move(out), n);
}

std::vector<BistellarMove> valid_moves(const SimplicialComplex& c, int index) {
    std::vector<BistellarMove> out;
    if (c.is_empty() || !c.pure()) return out;
    const int d = c.dim();
    if (index < 0 || index > d) return out;

    if (index == 0) {
        if (c.n() + 1 <= kMaxVertices) {
            const Face fresh = Face::of({c.n() + 1});
            for (Face f : c.facets()) out.push_back({f, fresh});
        }
        return out;
    }

    // candidate faces a of size d+1-index together with (count, union) over
    // the facets containing them
    std::map<std::uint64_t, std::pair<int, std::uint64_t>> at;
    std::vector<std::uint64_t> subs;
    for (Face f : c.facets()) {
        subs.clear();
        subsets_of_size(f.bits(), d + 1 - index, 0, subs);
        for (std::uint64_t abits : subs) {
            auto& [cnt, uni] = at[abits];
            ++cnt;
            uni |= f.bits() & ~abits;
        }
    }
    for (const auto& [abits, cu] : at) {
        const auto& [cnt, uni] = cu;
        if (cnt != index + 1 || std::popcount(uni) != index + 1) continue;
        const Face b = Face::from_bits(uni);
        if (c.has_face(b)) continue;
        out.push_back({Face::from_bits(abits), b});
    }
    return out;
}

RecognitionCertificate sphere_heuristic(const SimplicialComplex& c, long long budget,
                                        std::uint64_t seed) {
    RecognitionCertificate cert;
    cert.seed = seed;
    if (!is_closed_pseudomanifold(c)) {
        cert.verdict = Verdict::not_pseudomanifold;
        cert.reason = "not a closed pseudomanifold";
        return cert;
    }
    const int d = c.dim();
    const long long target_chi = (d % 2 == 0) ? 2 : 0;
    if (c.euler_characteristic() != target_chi) {
        cert.verdict = Verdict::manifold_not_certified_sphere;
        cert.reason = "euler characteristic " + std::to_string(c.euler_characteristic()) +
                      " differs from sphere value " + std::to_string(target_chi);
        return cert;
    }

    std::mt19937_64 rng(seed);
    SimplicialComplex cur = c;
    BistellarMove last{{}, {}};
    while (true) {
        if (is_boundary_of_simplex(cur)) {
            cert.verdict = Verdict::sphere;
            return cert;
        }
        if (cert.moves_used >= budget) {
            cert.verdict = Verdict::manifold_not_certified_sphere;
            cert.reason = "flip budget exhausted";
            return cert;
        }
        BistellarMove chosen{{}, {}};
        bool found = false;
        for (int i = d; i > d / 2 && !found; --i) {
            auto ms = valid_moves(cur, i);
            if (!ms.empty()) {
                chosen = ms[rng() % ms.size()];
                found = true;
            }
        }
        if (!found) {
            // plateau: neutral or mildly increasing moves, avoiding the
            // immediate inverse of the previous move when possible
            for (int i = d / 2; i >= 0 && !found; --i) {
                auto ms = valid_moves(cur, i);
                if (ms.empty()) continue;
                auto pool = ms;
                std::erase_if(pool, [&](const BistellarMove& m) { return m == last.reversed(); });
                const auto& src = pool.empty() ? ms : pool;
                chosen = src[rng() % src.size()];
                found = true;
            }
        }
        if (!found) {
            cert.verdict = Verdict::manifold_not_certified_sphere;
            cert.reason = "no valid moves";
            return cert;
        }
        cur = bistellar_flip(cur, chosen);
        cert.move_log.push_back(chosen);
        last = chosen;
        ++cert.moves_used;
    }
}

RecognitionCertificate is_combinatorial_manifold(const SimplicialComplex& c,
                                                 const std::vector<Permutation>& invariance_gens,
                                                 long long flip_budget, std::uint64_t seed) {
    RecognitionCertificate cert;
    cert.seed = seed;
    if (c.is_empty() || !c.pure()) {
        cert.verdict = Verdict::not_manifold;
        cert.reason = "not a pure complex";
        return cert;
    }

    // Vertex orbits under the supplied invariance generators.
    std::vector<int> parent(c.n() + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Permutation& g : invariance_gens) {
        if (!is_invariant(c, g))
            throw std::invalid_argument(
                "is_combinatorial_manifold: generator does not preserve the complex");
        for (int v = 1; v <= c.n(); ++v) parent[find(v)] = find(g(v));
    }

    std::vector<int> orbit_size(c.n() + 1, 0);
    for (Vertex v : c.support().vertices()) ++orbit_size[find(v)];

    bool any_failed = false, all_certified = true;
    for (Vertex v : c.support().vertices()) {
        if (find(v) != v) continue;  // one representative per orbit
        VertexLinkReport rep;
        rep.v = v;
        SimplicialComplex lk = c.link(Face::of({v}));
        if (lk.dim() <= 2) {
            bool ok = !lk.is_empty() && is_sphere_exact_low_dim(lk);
            rep.certified = ok;
            rep.failed = !ok;
            rep.detail = ok ? "exact" : "link is not a sphere (exact check)";
        } else {
            RecognitionCertificate sub = sphere_heuristic(lk, flip_budget, seed + v);
            if (sub.verdict == Verdict::sphere) {
                rep.certified = true;
                rep.detail = "bistellar certificate, " + std::to_string(sub.moves_used) + " moves";
            } else if (sub.verdict == Verdict::not_pseudomanifold ||
                       sub.reason.starts_with("euler")) {
                rep.failed = true;
                rep.detail = sub.reason;
            } else {
                rep.detail = "uncertified: " + sub.reason;
            }
        }
        if (orbit_size[find(v)] > 1)
            rep.detail += " (orbit of " + std::to_string(orbit_size[find(v)]) + " vertices)";
        any_failed = any_failed || rep.failed;
        all_certified = all_certified && rep.certified;
        cert.links_checked.push_back(std::move(rep));
    }

    cert.all_links_certified = all_certified;
    if (any_failed) {
        cert.verdict = Verdict::not_manifold;
        cert.reason = "a vertex link is not a sphere";
    } else {
        cert.verdict = Verdict::manifold_not_certified_sphere;
        cert.reason = all_certified ? "all vertex links are spheres"
                                    : "some vertex links uncertified";
    }
    return cert;
}

}  // namespace cstri
