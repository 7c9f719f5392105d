#include "cstri/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "cstri/invariants.hpp"
#include "cstri/isomorphism.hpp"

namespace cstri {

namespace {

void check_config(const SearchConfig& cfg) {
    if (cfg.n % 2 != 0) throw std::invalid_argument("SearchConfig: n must be even");
    if (cfg.n < 2 * (cfg.d + 1))
        throw std::invalid_argument("SearchConfig: n >= 2(d+1) required");
    if (cfg.n > kMaxVertices) throw std::invalid_argument("SearchConfig: n > 64");
    if (cfg.sphere_check == SphereCheckMode::exact2d && cfg.d != 2)
        throw std::invalid_argument("SearchConfig: exact2d applies to d = 2 only");
}

// all k-subsets of 1..n as bit masks (Gosper's hack)
std::vector<std::uint64_t> all_subsets(int n, int k) {
    std::vector<std::uint64_t> out;
    if (k > n) return out;
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (v < limit) {
        out.push_back(v);
        std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

}  // namespace

std::vector<OrbitGenerator> candidate_orbits(const SearchConfig& cfg) {
    check_config(cfg);
    const GroupSpec g = cfg.group_spec();
    const Permutation inv = central_involution(cfg.n);
    const std::vector<Permutation> elements = g.elements();

    std::unordered_set<std::uint64_t> seen;
    std::vector<OrbitGenerator> out;
    for (std::uint64_t mask : all_subsets(cfg.n, cfg.d + 1)) {
        if (seen.count(mask)) continue;
        const Face rep0 = Face::from_bits(mask);
        std::vector<std::uint64_t> orbit;
        for (const Permutation& p : elements) orbit.push_back(p(rep0).bits());
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        bool clean = true;
        for (std::uint64_t m : orbit) {
            seen.insert(m);
            if (Face::from_bits(m).intersects(inv(Face::from_bits(m)))) clean = false;
        }
        if (clean) out.push_back({Face::from_bits(orbit.front()), static_cast<int>(orbit.size())});
    }
    std::sort(out.begin(), out.end(), [](const OrbitGenerator& a, const OrbitGenerator& b) {
        return a.representative < b.representative;
    });
    return out;
}

namespace {

struct OrbitData {
    std::uint64_t rep = 0;
    int size = 0;
    std::vector<std::uint64_t> facets;
    std::vector<std::pair<int, int>> ridges;  // (ridge id, multiplicity)
    std::vector<int> req;                     // required-face ids covered
};

struct SearchTables {
    std::vector<OrbitData> orbits;
    std::vector<std::vector<std::pair<int, int>>> ridge_orbits;  // ridge -> (orbit, mult)
    int num_ridges = 0;
    int num_req = 0;
    std::vector<int> req_avail0;  // initial availability per required face
};

SearchTables build_tables(const SearchConfig& cfg, const std::vector<OrbitGenerator>& gens) {
    SearchTables t;
    const GroupSpec g = cfg.group_spec();
    std::unordered_map<std::uint64_t, int> ridge_id;
    std::unordered_map<std::uint64_t, int> req_id;

    const int l = (cfg.d + 1) / 2;  // skeleton faces a nearly neighborly sphere must contain
    if (cfg.require_nearly_neighborly) {
        const Permutation inv = central_involution(cfg.n);
        for (std::uint64_t m : all_subsets(cfg.n, l)) {
            const Face f = Face::from_bits(m);
            if (!f.intersects(inv(f))) req_id.emplace(m, static_cast<int>(req_id.size()));
        }
    }

    for (const OrbitGenerator& gen : gens) {
        OrbitData od;
        od.rep = gen.representative.bits();
        std::vector<Face> orbit = expand_orbit(gen, g);
        od.size = static_cast<int>(orbit.size());
        std::unordered_map<int, int> ridge_mult;
        std::unordered_set<int> reqs;
        for (Face f : orbit) {
            od.facets.push_back(f.bits());
            for (Vertex v : f.vertices()) {
                const std::uint64_t r = f.without(v).bits();
                auto [it, fresh] = ridge_id.emplace(r, static_cast<int>(ridge_id.size()));
                ++ridge_mult[it->second];
            }
            if (cfg.require_nearly_neighborly) {
                std::vector<std::uint64_t> subs = all_subsets(cfg.d + 1, l);
                // map the positional subsets onto the facet's vertices
                const std::vector<Vertex> vs = f.vertices();
                for (std::uint64_t pos : subs) {
                    Face sf;
                    for (std::uint64_t b = pos; b != 0; b &= b - 1) sf = sf.with(vs[std::countr_zero(b)]);
                    auto it = req_id.find(sf.bits());
                    if (it != req_id.end()) reqs.insert(it->second);
                }
            }
        }
        bool feasible = true;
        for (const auto& [rid, mult] : ridge_mult) {
            if (mult > 2) feasible = false;
            od.ridges.push_back({rid, mult});
        }
        if (!feasible) continue;  // can never sit inside a pseudomanifold
        std::sort(od.ridges.begin(), od.ridges.end());
        od.req.assign(reqs.begin(), reqs.end());
        std::sort(od.req.begin(), od.req.end());
        t.orbits.push_back(std::move(od));
    }

    t.num_ridges = static_cast<int>(ridge_id.size());
    t.num_req = static_cast<int>(req_id.size());
    t.ridge_orbits.resize(t.num_ridges);
    for (std::size_t oi = 0; oi < t.orbits.size(); ++oi)
        for (const auto& [rid, mult] : t.orbits[oi].ridges)
            t.ridge_orbits[rid].push_back({static_cast<int>(oi), mult});
    t.req_avail0.assign(t.num_req, 0);
    for (const OrbitData& od : t.orbits)
        for (int id : od.req) ++t.req_avail0[id];
    return t;
}

enum class St : char { free_, included_, dead_ };

struct Searcher {
    const SearchConfig& cfg;
    const SearchTables& t;
    std::vector<St> status;
    std::vector<int> ridge_deg;
    std::vector<int> req_avail, req_covered;
    std::vector<int> included;
    struct Op {
        char type;  // 'i' include, 'k' kill
        int orbit;
    };
    std::vector<Op> trail;
    std::vector<std::vector<int>> results;
    long long nodes = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    bool timed_out = false;

    Searcher(const SearchConfig& c, const SearchTables& tables) : cfg(c), t(tables) {
        status.assign(t.orbits.size(), St::free_);
        ridge_deg.assign(t.num_ridges, 0);
        req_avail = t.req_avail0;
        req_covered.assign(t.num_req, 0);
    }

    bool prune_nn() const { return cfg.require_nearly_neighborly && cfg.nn_pruning; }

    bool kill(int o) {
        status[o] = St::dead_;
        trail.push_back({'k', o});
        bool ok = true;
        if (prune_nn())
            for (int id : t.orbits[o].req)
                if (--req_avail[id] == 0 && req_covered[id] == 0) ok = false;
        return ok;
    }

    bool include(int o) {
        status[o] = St::included_;
        included.push_back(o);
        trail.push_back({'i', o});
        bool ok = true;
        for (const auto& [rid, mult] : t.orbits[o].ridges) {
            ridge_deg[rid] += mult;
            if (ridge_deg[rid] > 2) ok = false;
        }
        if (prune_nn())
            for (int id : t.orbits[o].req) ++req_covered[id];
        if (!ok) return false;
        // retire orbits that would now overflow one of the touched ridges
        for (const auto& [rid, mult] : t.orbits[o].ridges) {
            for (const auto& [o2, mult2] : t.ridge_orbits[rid]) {
                if (status[o2] != St::free_) continue;
                if (ridge_deg[rid] + mult2 > 2) {
                    if (!kill(o2)) return false;
                }
            }
        }
        return true;
    }

    void rollback(std::size_t mark) {
        while (trail.size() > mark) {
            const Op op = trail.back();
            trail.pop_back();
            if (op.type == 'i') {
                status[op.orbit] = St::free_;
                included.pop_back();
                for (const auto& [rid, mult] : t.orbits[op.orbit].ridges) ridge_deg[rid] -= mult;
                if (prune_nn())
                    for (int id : t.orbits[op.orbit].req) --req_covered[id];
            } else {
                status[op.orbit] = St::free_;
                if (prune_nn())
                    for (int id : t.orbits[op.orbit].req) ++req_avail[id];
            }
        }
    }

    // Open ridge (degree one) with the fewest free closers; -1 when none.
    int pick_ridge(std::vector<int>* closers) const {
        int best = -1;
        std::size_t best_cnt = 0;
        for (int r = 0; r < t.num_ridges; ++r) {
            if (ridge_deg[r] != 1) continue;
            std::size_t cnt = 0;
            for (const auto& [o2, m2] : t.ridge_orbits[r])
                if (status[o2] == St::free_) ++cnt;
            if (best == -1 || cnt < best_cnt) {
                best = r;
                best_cnt = cnt;
                if (cnt == 0) break;
            }
        }
        if (best != -1 && closers) {
            for (const auto& [o2, m2] : t.ridge_orbits[best])
                if (status[o2] == St::free_) closers->push_back(o2);
            std::sort(closers->begin(), closers->end());
        }
        return best;
    }

    void dfs() {
        ++nodes;
        if (has_deadline && (nodes & 255) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
        }
        if (timed_out) return;

        std::vector<int> closers;
        const int r = pick_ridge(&closers);
        if (r == -1) {
            if (!included.empty()) {
                std::vector<int> sel = included;
                std::sort(sel.begin(), sel.end());
                results.push_back(std::move(sel));
            }
            return;
        }
        for (int o2 : closers) {
            if (status[o2] != St::free_) continue;  // killed by an earlier sibling branch
            const std::size_t mark = trail.size();
            if (include(o2)) dfs();
            rollback(mark);
            if (timed_out) return;
        }
    }

    // Anchor branch: orbit `anchor` is the least included orbit.
    void run_anchor(int anchor) {
        const std::size_t mark = trail.size();
        bool ok = true;
        for (int j = 0; j < anchor; ++j)
            if (status[j] == St::free_) ok = kill(j) && ok;
        if (ok && include(anchor)) dfs();
        rollback(mark);
    }
};

SimplicialComplex selection_complex(const SearchConfig& cfg, const SearchTables& t,
                                    const std::vector<int>& sel) {
    std::vector<Face> facets;
    for (int oi : sel)
        for (std::uint64_t m : t.orbits[oi].facets) facets.push_back(Face::from_bits(m));
    return SimplicialComplex::from_facets(std::move(facets), cfg.n);
}

bool admits_standard_dihedral(const SimplicialComplex& c, const GroupSpec& g) {
    const Permutation b = g.reflection();
    Permutation a = g.rotation();
    Permutation shift = Permutation::identity(g.n);
    for (int j = 0; j < g.n; ++j) {
        if (is_invariant(c, shift.after(b))) return true;
        shift = a.after(shift);
    }
    return false;
}

}  // namespace

SearchResult enumerate_nn_cs_spheres(const SearchConfig& cfg) {
    check_config(cfg);
    SearchResult out;
    out.config = cfg;

    const std::vector<OrbitGenerator> gens = candidate_orbits(cfg);
    const SearchTables tables = build_tables(cfg, gens);
    const int num_orbits = static_cast<int>(tables.orbits.size());

    const auto start = std::chrono::steady_clock::now();
    const bool has_deadline = cfg.time_budget_seconds > 0;
    const auto deadline =
        start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(cfg.time_budget_seconds));

    // Anchor branches are independent; run them across threads and merge in
    // anchor order so the outcome is schedule independent.
    const int threads = std::max(1, cfg.threads);
    std::vector<std::vector<std::vector<int>>> per_anchor(num_orbits);
    std::vector<long long> per_anchor_nodes(num_orbits, 0);
    std::vector<char> per_anchor_timeout(num_orbits, 0);
    std::atomic<int> next_anchor{0};

    auto worker = [&]() {
        while (true) {
            const int anchor = next_anchor.fetch_add(1);
            if (anchor >= num_orbits) return;
            Searcher s(cfg, tables);
            s.has_deadline = has_deadline;
            s.deadline = deadline;
            s.run_anchor(anchor);
            per_anchor[anchor] = std::move(s.results);
            per_anchor_nodes[anchor] = s.nodes;
            per_anchor_timeout[anchor] = s.timed_out ? 1 : 0;
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<std::vector<int>> selections;
    for (int i = 0; i < num_orbits; ++i) {
        out.nodes += per_anchor_nodes[i];
        if (per_anchor_timeout[i]) out.exhausted = false;
        for (auto& sel : per_anchor[i]) selections.push_back(std::move(sel));
    }

    // Keep candidates passing the exact structural checks, deduplicated up
    // to isomorphism via the canonical form; certify once per class.
    const GroupSpec g = cfg.group_spec();
    struct Candidate {
        SimplicialComplex complex;
        std::vector<int> sel;
    };
    std::map<std::vector<std::uint64_t>, Candidate> unique;
    for (const std::vector<int>& sel : selections) {
        ++out.candidates;
        SimplicialComplex c = selection_complex(cfg, tables, sel);
        if (!is_closed_pseudomanifold(c)) continue;
        if (!is_centrally_symmetric(c)) continue;
        if (cfg.require_nearly_neighborly && !is_nearly_neighborly(c)) continue;
        auto key = canonical_facet_list(c);
        if (!unique.count(key)) unique.emplace(std::move(key), Candidate{std::move(c), sel});
    }

    for (auto& [key, cand] : unique) {
        EnumeratedClass cls;
        const SimplicialComplex& c = cand.complex;
        bool definitive_reject = false;
        if (cfg.sphere_check == SphereCheckMode::exact2d || cfg.d == 2) {
            if (!is_sphere_exact_low_dim(c)) continue;
            cls.certified = true;
            cls.sphere_certificate.verdict = Verdict::sphere;
            cls.sphere_certificate.reason = "exact recognition (dim 2)";
            cls.manifold_certificate = cls.sphere_certificate;
        } else {
            std::vector<Permutation> invariance{g.rotation()};
            if (cfg.group == GroupKind::dihedral) invariance.push_back(g.reflection());
            cls.manifold_certificate =
                is_combinatorial_manifold(c, invariance, cfg.flip_budget, cfg.seed);
            if (cls.manifold_certificate.verdict == Verdict::not_manifold) continue;
            cls.sphere_certificate = sphere_heuristic(c, cfg.flip_budget, cfg.seed);
            if (cls.sphere_certificate.verdict == Verdict::not_pseudomanifold ||
                cls.sphere_certificate.reason.starts_with("euler"))
                definitive_reject = true;
            cls.certified = cls.manifold_certificate.all_links_certified &&
                            cls.sphere_certificate.verdict == Verdict::sphere;
        }
        if (definitive_reject) continue;

        for (int oi : cand.sel)
            cls.orbit_presentation.push_back(
                {Face::from_bits(tables.orbits[oi].rep), tables.orbits[oi].size});
        cls.dihedral_invariant =
            cfg.group == GroupKind::dihedral || admits_standard_dihedral(c, g);
        cls.complex = std::move(cand.complex);
        (cls.certified ? out.classes : out.uncertified).push_back(std::move(cls));
    }

    // Stable class order and labels: dihedral-invariant classes first, then
    // by canonical form; z is the running index per (d, n).
    auto order = [](const EnumeratedClass& a, const EnumeratedClass& b) {
        if (a.dihedral_invariant != b.dihedral_invariant) return a.dihedral_invariant;
        return canonical_facet_list(a.complex) < canonical_facet_list(b.complex);
    };
    std::sort(out.classes.begin(), out.classes.end(), order);
    std::sort(out.uncertified.begin(), out.uncertified.end(), order);
    int z = 0;
    for (auto& cls : out.classes) {
        cls.label = std::to_string(cfg.d) + "_nn_" + std::to_string(cfg.n) +
                    (cls.dihedral_invariant ? "_di_" : "_cy_") + std::to_string(++z);
    }
    for (auto& cls : out.uncertified) {
        cls.label = std::to_string(cfg.d) + "_nn_" + std::to_string(cfg.n) +
                    (cls.dihedral_invariant ? "_di_" : "_cy_") + "u" + std::to_string(++z);
    }
    return out;
}

}  // namespace cstri
