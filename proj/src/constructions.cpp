#include "cstri/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "cstri/recognition.hpp"

namespace cstri {

SimplicialComplex crosspolytope_boundary(int k) {
    if (k < 1) throw std::invalid_argument("crosspolytope_boundary: k must be >= 1");
    if (2 * k > kMaxVertices) throw std::invalid_argument("crosspolytope_boundary: 2k > 64");
    std::vector<Face> facets;
    facets.reserve(std::size_t{1} << k);
    for (std::uint64_t sign = 0; sign < (std::uint64_t{1} << k); ++sign) {
        Face f;
        for (int i = 1; i <= k; ++i) f = f.with(((sign >> (i - 1)) & 1) ? k + i : i);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(facets), 2 * k);
}

std::vector<OrbitGenerator> cs_sphere_4m_orbits(int m) {
    if (m < 2) throw std::invalid_argument("cs_sphere_4m: m must be >= 2");
    if (4 * m > kMaxVertices) throw std::invalid_argument("cs_sphere_4m: 4m > 64");
    const int size = 4 * m;
    std::vector<OrbitGenerator> gens;
    gens.push_back({Face::of({1, 2, 3, 4}), size});
    gens.push_back({Face::of({1, 2, 4, 2 * m + 3}), size});
    for (int j = 1; j <= m - 2; ++j)
        gens.push_back({Face::of({1, 2, 2 * m + 2 * j + 1, 2 * m + 2 * j + 3}), size});
    for (int j = 2; j <= m - 1; ++j)
        gens.push_back({Face::of({1, 3, 2 * j + 1, 2 * j + 4}), size});
    return gens;
}

SimplicialComplex cs_sphere_4m(int m) {
    return complex_from_orbits(cs_sphere_4m_orbits(m), {GroupKind::cyclic, 4 * m});
}

std::vector<OrbitGenerator> torus_t2_orbits(int m) {
    if (m < 2) throw std::invalid_argument("torus_t2: m must be >= 2");
    if (4 * m > kMaxVertices) throw std::invalid_argument("torus_t2: 4m > 64");
    return {{Face::of({1, 2, 3}), 4 * m}, {Face::of({1, 3, 2 * m + 2}), 4 * m}};
}

SimplicialComplex torus_t2(int m) {
    return complex_from_orbits(torus_t2_orbits(m), {GroupKind::cyclic, 4 * m});
}

SimplicialComplex jockusch_ball(int d) {
    if (d % 2 != 0) throw std::invalid_argument("jockusch_ball: d must be even");
    if (d < 4) throw std::invalid_argument("jockusch_ball: d must be >= 4");
    if (2 * d > kMaxVertices) throw std::invalid_argument("jockusch_ball: 2d > 64");
    Face base;
    for (int i = 1; i <= d; ++i) base = base.with(i);
    std::vector<Face> facets;
    // all facets obtained from 1..d by replacing j vertices by their
    // antipodes, j = 0..(d-2)/2
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << d); ++sub) {
        if (std::popcount(sub) > (d - 2) / 2) continue;
        Face f = base;
        for (int i = 1; i <= d; ++i) {
            if ((sub >> (i - 1)) & 1) f = f.without(i).with(d + i);
        }
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(facets), 2 * d);
}

SimplicialComplex boundary_complex(const SimplicialComplex& c) {
    if (!c.pure() || c.is_empty())
        throw std::invalid_argument("boundary_complex: pure nonempty complex required");
    std::unordered_map<std::uint64_t, int> count;
    for (Face f : c.facets())
        for (Vertex v : f.vertices()) ++count[f.without(v).bits()];
    std::vector<Face> out;
    for (const auto& [mask, cnt] : count)
        if (cnt == 1) out.push_back(Face::from_bits(mask));
    if (out.empty()) return SimplicialComplex::empty_complex(c.n());
    return SimplicialComplex::from_facets(std::move(out), c.n());
}

namespace {

Permutation surgery_relabeling(int n) {
    const int k = n / 2;
    std::vector<Vertex> img(n + 2);
    for (int i = 1; i <= k; ++i) img[i - 1] = i;
    for (int i = k + 1; i <= n; ++i) img[i - 1] = i + 1;
    img[n] = k + 1;
    img[n + 1] = n + 2;
    return Permutation::from_images(std::move(img));
}

}  // namespace

SurgeryResult surgery(const SimplicialComplex& s, const SimplicialComplex& ball,
                      Vertex v1, Vertex v2) {
    const int n = s.n();
    if (n % 2 != 0) throw std::invalid_argument("surgery: even vertex count required");
    if (v1 != n + 1 || v2 != n + 2)
        throw std::invalid_argument("surgery: fresh vertices must be n+1 and n+2");
    if (n + 2 > kMaxVertices) throw std::invalid_argument("surgery: more than 64 vertices");
    if (ball.is_empty() || !ball.pure() || ball.dim() != s.dim())
        throw std::invalid_argument("surgery: ball must be pure of the sphere's dimension");

    const Permutation inv = central_involution(n);
    for (Face f : ball.facets()) {
        if (!s.has_facet(f))
            throw std::invalid_argument("surgery: ball facet " + to_string(f) + " not in sphere");
        if (!s.has_facet(inv(f)))
            throw std::invalid_argument("surgery: mirrored facet missing from sphere");
        if (ball.has_facet(inv(f)))
            throw std::invalid_argument("surgery: ball and its mirror share facet " + to_string(f));
    }

    const SimplicialComplex bd = boundary_complex(ball);
    std::vector<Face> out;
    for (Face f : s.facets())
        if (!ball.has_facet(f) && !ball.has_facet(inv(f))) out.push_back(f);
    for (Face r : bd.facets()) {
        out.push_back(r.with(v1));
        out.push_back(inv(r).with(v2));
    }
    SimplicialComplex naive = SimplicialComplex::from_facets(std::move(out), n + 2);
    Permutation relab = surgery_relabeling(n);
    return {naive.relabeled(relab), relab};
}

SurgeryResult mcmullen_shephard_sphere(int d) {
    SimplicialComplex cp = crosspolytope_boundary(d);
    return surgery(cp, jockusch_ball(d), 2 * d + 1, 2 * d + 2);
}

namespace {

struct BallSearch {
    const SimplicialComplex& s;
    const BallSearchOptions& opts;
    std::vector<Face> facets;
    std::vector<int> antipode;  // facet index of F^I
    std::unordered_map<std::uint64_t, int> edge_total;    // edge -> #facets in s
    std::unordered_map<std::uint64_t, int> edge_in_ball;  // edge -> #facets in ball
    std::unordered_map<std::uint64_t, int> tri_in_ball;   // triangle -> #facets in ball
    std::vector<char> in_ball;
    std::vector<int> ball;  // facet indices
    std::uint64_t covered = 0, full = 0;
    std::vector<std::uint64_t> prio;                    // seed-controlled tie break
    std::pair<std::uint64_t, std::uint64_t> state_hash{0, 0};
    std::vector<std::pair<std::uint64_t, std::uint64_t>> keys;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> visited;
    long long nodes = 0;
    std::optional<SimplicialComplex> result;

    explicit BallSearch(const SimplicialComplex& sphere, const BallSearchOptions& o)
        : s(sphere), opts(o), facets(sphere.facets()) {
        const Permutation inv = central_involution(s.n());
        std::unordered_map<std::uint64_t, int> index;
        for (std::size_t i = 0; i < facets.size(); ++i) index[facets[i].bits()] = static_cast<int>(i);
        antipode.resize(facets.size());
        for (std::size_t i = 0; i < facets.size(); ++i) {
            auto it = index.find(inv(facets[i]).bits());
            if (it == index.end())
                throw std::invalid_argument("find_surgery_ball: sphere is not centrally symmetric");
            antipode[i] = it->second;
            if (it->second == static_cast<int>(i))
                throw std::invalid_argument("find_surgery_ball: facet fixed by the involution");
        }
        for (Face f : facets)
            for (Vertex u : f.vertices())
                for (Vertex w : f.vertices())
                    if (u < w) ++edge_total[Face::of({u, w}).bits()];
        in_ball.assign(facets.size(), 0);
        full = s.support().bits();

        std::mt19937_64 order_rng(opts.seed);
        prio.resize(facets.size());
        for (auto& p : prio) p = order_rng();
        std::mt19937_64 key_rng(0x9e3779b97f4a7c15ULL);  // fixed: keys are not policy
        keys.resize(facets.size());
        for (auto& k : keys) k = {key_rng(), key_rng()};
    }

    bool goal() {
        if (covered != full) return false;
        if (!opts.stacked_boundary) return true;
        std::vector<Face> bf;
        for (int i : ball) bf.push_back(facets[i]);
        SimplicialComplex b = SimplicialComplex::from_facets(std::move(bf), s.n());
        return is_stacked_2sphere(boundary_complex(b));
    }

    // The new facet must meet the ball in a nonempty union of at most three
    // of its triangles, must not complete any edge star, and must not mirror
    // a facet already in the ball.
    bool addable(int fi) {
        if (in_ball[fi] || in_ball[antipode[fi]]) return false;
        const Face f = facets[fi];
        std::vector<std::uint64_t> tris;
        for (Vertex v : f.vertices()) {
            std::uint64_t t = f.without(v).bits();
            auto it = tri_in_ball.find(t);
            if (it != tri_in_ball.end() && it->second >= 1) tris.push_back(t);
        }
        if (tris.empty() || tris.size() == f.vertices().size()) return false;
        for (int gi : ball) {
            const std::uint64_t shared = facets[gi].bits() & f.bits();
            bool inside = false;
            for (std::uint64_t t : tris)
                if ((t & shared) == shared) {
                    inside = true;
                    break;
                }
            if (!inside) return false;
        }
        // no interior edges: adding f must not absorb the whole star of an edge
        for (Vertex u : f.vertices())
            for (Vertex w : f.vertices()) {
                if (u >= w) continue;
                const std::uint64_t e = Face::of({u, w}).bits();
                auto it = edge_in_ball.find(e);
                const int have = it == edge_in_ball.end() ? 0 : it->second;
                if (have + 1 == edge_total[e]) return false;
            }
        return true;
    }

    void apply(int fi) {
        in_ball[fi] = 1;
        ball.push_back(fi);
        const Face f = facets[fi];
        covered |= f.bits();
        for (Vertex v : f.vertices()) ++tri_in_ball[f.without(v).bits()];
        for (Vertex u : f.vertices())
            for (Vertex w : f.vertices())
                if (u < w) ++edge_in_ball[Face::of({u, w}).bits()];
        state_hash.first ^= keys[fi].first;
        state_hash.second ^= keys[fi].second;
    }

    void undo(int fi) {
        in_ball[fi] = 0;
        ball.pop_back();
        const Face f = facets[fi];
        covered = 0;
        for (int i : ball) covered |= facets[i].bits();
        for (Vertex v : f.vertices()) --tri_in_ball[f.without(v).bits()];
        for (Vertex u : f.vertices())
            for (Vertex w : f.vertices())
                if (u < w) --edge_in_ball[Face::of({u, w}).bits()];
        state_hash.first ^= keys[fi].first;
        state_hash.second ^= keys[fi].second;
    }

    bool seen() {
        auto& bucket = visited[state_hash.first];
        if (std::find(bucket.begin(), bucket.end(), state_hash.second) != bucket.end())
            return true;
        bucket.push_back(state_hash.second);
        return false;
    }

    bool dfs() {
        if (++nodes > opts.node_budget) return false;
        if (goal()) {
            std::vector<Face> bf;
            for (int i : ball) bf.push_back(facets[i]);
            result = SimplicialComplex::from_facets(std::move(bf), s.n());
            return true;
        }
        std::vector<std::pair<std::pair<int, std::uint64_t>, int>> cand;
        for (std::size_t fi = 0; fi < facets.size(); ++fi) {
            if (!addable(static_cast<int>(fi))) continue;
            const int fresh = std::popcount(facets[fi].bits() & ~covered);
            cand.push_back({{-fresh, prio[fi]}, static_cast<int>(fi)});
        }
        std::sort(cand.begin(), cand.end());
        for (const auto& entry : cand) {
            const int fi = entry.second;
            apply(fi);
            bool skip = seen();
            if (!skip && dfs()) return true;
            undo(fi);
            if (nodes > opts.node_budget) return false;
        }
        return false;
    }

    std::optional<SimplicialComplex> run() {
        std::vector<std::pair<std::uint64_t, int>> starts;
        for (std::size_t i = 0; i < facets.size(); ++i)
            starts.push_back({prio[i], static_cast<int>(i)});
        std::sort(starts.begin(), starts.end());
        for (const auto& start : starts) {
            const int fi = start.second;
            apply(fi);
            if (!seen() && dfs()) return result;
            undo(fi);
            if (nodes > opts.node_budget) break;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<SimplicialComplex> find_surgery_ball(const SimplicialComplex& s,
                                                   const BallSearchOptions& opts) {
    if (!s.pure() || s.dim() != 3)
        throw std::invalid_argument("find_surgery_ball: pure 3-dimensional complex required");
    if (s.n() % 2 != 0) throw std::invalid_argument("find_surgery_ball: even vertex count required");
    BallSearch search(s, opts);
    return search.run();
}

JockuschStep jockusch_next(const SimplicialComplex& s, const BallSearchOptions& opts) {
    std::optional<SimplicialComplex> ball = find_surgery_ball(s, opts);
    if (!ball)
        throw std::runtime_error(
            "jockusch_next: no ball found within the node budget; increase the budget");
    SurgeryResult res = surgery(s, *ball, s.n() + 1, s.n() + 2);
    return {std::move(res.sphere), std::move(*ball), std::move(res.relabeling)};
}

namespace {

bool lex_less(Face a, Face b) {
    return a.vertices() < b.vertices();
}

}  // namespace

SimplicialComplex stacked_cs_sphere(int d, int k) {
    if (d < 1 || k < d) throw std::invalid_argument("stacked_cs_sphere: need k >= d >= 1");
    if (2 * k > kMaxVertices) throw std::invalid_argument("stacked_cs_sphere: 2k > 64");
    SimplicialComplex x = crosspolytope_boundary(d);
    Vertex last_new = 0;
    for (int step = 0; step < k - d; ++step) {
        Face pick;
        bool first = true;
        for (Face f : x.facets()) {
            if (last_new != 0 && !f.contains(last_new)) continue;
            if (first || lex_less(f, pick)) {
                pick = f;
                first = false;
            }
        }
        SimplicialComplex ball = SimplicialComplex::from_facets({pick}, x.n());
        SurgeryResult res = surgery(x, ball, x.n() + 1, x.n() + 2);
        last_new = x.n() / 2 + 1;  // the first fresh vertex after relabeling
        x = std::move(res.sphere);
    }
    return x;
}

}  // namespace cstri
