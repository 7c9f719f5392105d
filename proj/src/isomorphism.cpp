#include "cstri/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cstri {

namespace {

std::vector<std::uint64_t> adjacency_masks(const SimplicialComplex& c) {
    std::vector<std::uint64_t> adj(c.n(), 0);
    for (Face f : c.facets()) {
        for (Vertex v : f.vertices()) adj[v - 1] |= f.bits();
    }
    for (int v = 1; v <= c.n(); ++v) adj[v - 1] &= ~(std::uint64_t{1} << (v - 1));
    return adj;
}

std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sigs) {
    std::map<std::vector<int>, int> order;
    for (const auto& s : sigs) order.emplace(s, 0);
    int next = 0;
    for (auto& [key, idx] : order) idx = next++;
    std::vector<int> colors(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i) colors[i] = order[sigs[i]];
    return colors;
}

}  // namespace

std::vector<int> refinement_colors(const SimplicialComplex& c) {
    const int n = c.n();
    const auto& facets = c.facets();
    std::vector<std::uint64_t> adj = adjacency_masks(c);

    // Initial signature: (degree, sorted facet sizes at v).
    std::vector<std::vector<int>> sig(n);
    for (int v = 1; v <= n; ++v) {
        sig[v - 1].push_back(std::popcount(adj[v - 1]));
        std::vector<int> sizes;
        for (Face f : facets)
            if (f.contains(v)) sizes.push_back(f.size());
        std::sort(sizes.begin(), sizes.end());
        sig[v - 1].insert(sig[v - 1].end(), sizes.begin(), sizes.end());
    }
    std::vector<int> colors = rank_signatures(sig);
    int classes = n == 0 ? 0 : 1 + *std::max_element(colors.begin(), colors.end());

    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> profiles(facets.size());
        for (std::size_t i = 0; i < facets.size(); ++i) {
            for (Vertex v : facets[i].vertices()) profiles[i].push_back(colors[v - 1]);
            std::sort(profiles[i].begin(), profiles[i].end());
        }
        std::vector<std::vector<int>> next_sig(n);
        for (int v = 1; v <= n; ++v) {
            std::vector<std::vector<int>> mine;
            for (std::size_t i = 0; i < facets.size(); ++i)
                if (facets[i].contains(v)) mine.push_back(profiles[i]);
            std::sort(mine.begin(), mine.end());
            auto& s = next_sig[v - 1];
            s.push_back(colors[v - 1]);
            for (const auto& p : mine) {
                s.push_back(-1);  // separator
                s.insert(s.end(), p.begin(), p.end());
            }
        }
        std::vector<int> next_colors = rank_signatures(next_sig);
        int next_classes = 1 + *std::max_element(next_colors.begin(), next_colors.end());
        // Refinement only ever splits classes; equal count means stable.
        if (next_classes == classes) break;
        colors = std::move(next_colors);
        classes = next_classes;
    }
    return colors;
}

namespace {

struct IsoContext {
    std::vector<std::uint64_t> adj_a, adj_b;
    std::vector<std::uint64_t> facets_b;        // sorted
    std::vector<std::vector<int>> facets_at_a;  // vertex (0-based) -> facet indices
    std::vector<std::uint64_t> facet_masks_a;
    std::vector<int> unmapped_count;  // per A-facet
    std::vector<int> colors_a;
    std::vector<std::vector<Vertex>> candidates;  // color -> B vertices
    std::vector<Vertex> order;                    // A vertices, mapping order
    std::vector<Vertex> image;                    // 1-based, 0 = unmapped
    std::uint64_t mapped_a = 0, used_b = 0;

    bool search(std::size_t idx) {
        if (idx == order.size()) return true;
        const Vertex u = order[idx];
        for (Vertex w : candidates[colors_a[u - 1]]) {
            if ((used_b >> (w - 1)) & 1u) continue;

            // Mapped neighbours of u must land exactly on mapped neighbours of w.
            std::uint64_t have = 0;
            for (std::uint64_t b = adj_a[u - 1] & mapped_a; b != 0; b &= b - 1)
                have |= std::uint64_t{1} << (image[std::countr_zero(b)] - 1);
            if (have != (adj_b[w - 1] & used_b)) continue;

            image[u - 1] = w;
            mapped_a |= std::uint64_t{1} << (u - 1);
            used_b |= std::uint64_t{1} << (w - 1);
            for (int fi : facets_at_a[u - 1]) --unmapped_count[fi];

            // Facets completed by this assignment must land on facets of B.
            bool ok = true;
            for (int fi : facets_at_a[u - 1]) {
                if (unmapped_count[fi] != 0) continue;
                std::uint64_t img = 0;
                for (std::uint64_t b = facet_masks_a[fi]; b != 0; b &= b - 1)
                    img |= std::uint64_t{1} << (image[std::countr_zero(b)] - 1);
                if (!std::binary_search(facets_b.begin(), facets_b.end(), img)) {
                    ok = false;
                    break;
                }
            }
            if (ok && search(idx + 1)) return true;

            for (int fi : facets_at_a[u - 1]) ++unmapped_count[fi];
            image[u - 1] = 0;
            mapped_a &= ~(std::uint64_t{1} << (u - 1));
            used_b &= ~(std::uint64_t{1} << (w - 1));
        }
        return false;
    }
};

// Both complexes use all labels 1..n.
std::optional<Permutation> iso_full_support(const SimplicialComplex& a,
                                            const SimplicialComplex& b) {
    const int n = a.n();
    if (a.facets().size() != b.facets().size()) return std::nullopt;
    if (a.f_vector() != b.f_vector()) return std::nullopt;

    std::vector<int> ca = refinement_colors(a);
    std::vector<int> cb = refinement_colors(b);
    {
        std::vector<int> ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return std::nullopt;
    }

    IsoContext ctx;
    ctx.adj_a = adjacency_masks(a);
    ctx.adj_b = adjacency_masks(b);
    for (Face f : b.facets()) ctx.facets_b.push_back(f.bits());
    ctx.colors_a = ca;
    const int classes = 1 + *std::max_element(ca.begin(), ca.end());
    ctx.candidates.resize(classes);
    for (int v = 1; v <= n; ++v) ctx.candidates[cb[v - 1]].push_back(v);

    ctx.facets_at_a.resize(n);
    for (std::size_t i = 0; i < a.facets().size(); ++i) {
        ctx.facet_masks_a.push_back(a.facets()[i].bits());
        ctx.unmapped_count.push_back(a.facets()[i].size());
        for (Vertex v : a.facets()[i].vertices())
            ctx.facets_at_a[v - 1].push_back(static_cast<int>(i));
    }

    // Map order: most already-ordered neighbours first, then rarest color.
    std::vector<int> class_size(classes, 0);
    for (int c : ca) ++class_size[c];
    std::vector<char> chosen(n, 0);
    std::uint64_t chosen_mask = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        std::pair<int, int> best_key{-1, 0};
        for (int v = 1; v <= n; ++v) {
            if (chosen[v - 1]) continue;
            std::pair<int, int> key{std::popcount(ctx.adj_a[v - 1] & chosen_mask),
                                    -class_size[ca[v - 1]]};
            if (best == -1 || key > best_key) {
                best = v;
                best_key = key;
            }
        }
        chosen[best - 1] = 1;
        chosen_mask |= std::uint64_t{1} << (best - 1);
        ctx.order.push_back(best);
    }

    ctx.image.assign(n, 0);
    if (!ctx.search(0)) return std::nullopt;
    return Permutation::from_images(std::vector<Vertex>(ctx.image.begin(), ctx.image.end()));
}

}  // namespace

std::optional<Permutation> are_isomorphic(const SimplicialComplex& a,
                                          const SimplicialComplex& b) {
    if (a.n() != b.n()) return std::nullopt;
    const int n = a.n();
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    if (a.support().bits() == full && b.support().bits() == full)
        return iso_full_support(a, b);

    if (a.support().size() != b.support().size()) return std::nullopt;
    auto [a2, pa] = a.normalized();
    auto [b2, pb] = b.normalized();
    auto sigma2 = iso_full_support(a2, b2);
    if (!sigma2) return std::nullopt;
    std::vector<Vertex> img = sigma2->images();
    for (int v = a2.n() + 1; v <= n; ++v) img.push_back(v);
    Permutation sigma_mid = Permutation::from_images(std::move(img));
    return pb.inverse().after(sigma_mid).after(pa);
}

std::vector<std::uint64_t> canonical_facet_list(const SimplicialComplex& c) {
    SimplicialComplex base = c;
    {
        const std::uint64_t full =
            (c.n() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << c.n()) - 1);
        if (c.n() > 0 && c.support().bits() != full) base = c.normalized().first;
    }
    const int n = base.n();
    if (base.facets().empty()) return {};
    std::vector<int> colors = refinement_colors(base);
    const int classes = 1 + *std::max_element(colors.begin(), colors.end());

    // New labels are handed out class by class (class 0 gets 1..|C0|, ...),
    // which is label-independent because color ids come from sorted
    // signatures. The minimum over these relabelings is the canonical form.
    std::vector<int> class_size(classes, 0);
    for (int col : colors) ++class_size[col];
    std::vector<int> class_of_label(n);
    {
        int t = 0;
        for (int col = 0; col < classes; ++col)
            for (int i = 0; i < class_size[col]; ++i) class_of_label[t++] = col;
    }

    std::vector<std::uint64_t> facet_masks;
    for (Face f : base.facets()) facet_masks.push_back(f.bits());
    std::vector<std::vector<int>> facets_at(n);
    for (std::size_t i = 0; i < facet_masks.size(); ++i)
        for (std::uint64_t b = facet_masks[i]; b != 0; b &= b - 1)
            facets_at[std::countr_zero(b)].push_back(static_cast<int>(i));

    std::vector<Vertex> new_label(n, 0);  // orig (0-based) -> new label
    std::vector<int> unassigned;
    for (std::uint64_t m : facet_masks) unassigned.push_back(std::popcount(m));
    std::vector<std::uint64_t> done;  // sorted masks of fully relabeled facets
    std::vector<std::uint64_t> best;
    bool have_best = false;

    // Every facet with an unassigned vertex ends up with a mask >= 2^t, so
    // `done` is exactly the sub-2^t prefix of any completion. Compare it with
    // the incumbent's sub-2^t prefix: -1 better, 0 tied, +1 prune.
    auto cmp_prefix = [&](int t) -> int {
        if (!have_best) return -1;
        std::size_t nb = 0;
        if (t >= 64) {
            nb = best.size();
        } else {
            const std::uint64_t lim = std::uint64_t{1} << t;
            while (nb < best.size() && best[nb] < lim) ++nb;
        }
        for (std::size_t i = 0; i < std::min(done.size(), nb); ++i) {
            if (done[i] < best[i]) return -1;
            if (done[i] > best[i]) return 1;
        }
        if (done.size() == nb) return 0;
        return done.size() > nb ? -1 : 1;
    };

    std::function<void(int)> dfs = [&](int t) {
        if (t == n) {
            if (!have_best || done < best) {
                best = done;
                have_best = true;
            }
            return;
        }
        const int col = class_of_label[t];
        for (int v0 = 0; v0 < n; ++v0) {
            if (new_label[v0] != 0 || colors[v0] != col) continue;
            new_label[v0] = t + 1;
            std::vector<std::uint64_t> added;
            for (int fi : facets_at[v0]) {
                if (--unassigned[fi] == 0) {
                    std::uint64_t img = 0;
                    for (std::uint64_t b = facet_masks[fi]; b != 0; b &= b - 1)
                        img |= std::uint64_t{1} << (new_label[std::countr_zero(b)] - 1);
                    added.push_back(img);
                }
            }
            for (std::uint64_t m : added)
                done.insert(std::upper_bound(done.begin(), done.end(), m), m);
            if (cmp_prefix(t + 1) <= 0) dfs(t + 1);
            for (std::uint64_t m : added)
                done.erase(std::lower_bound(done.begin(), done.end(), m));
            for (int fi : facets_at[v0]) ++unassigned[fi];
            new_label[v0] = 0;
        }
    };
    dfs(0);
    return best;
}

}  // namespace cstri
