#include "cstri/groups.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cstri {

Permutation GroupSpec::rotation() const {
    std::vector<Vertex> img(n);
    for (int i = 1; i <= n; ++i) img[i - 1] = (i % n) + 1;
    return Permutation::from_images(std::move(img));
}

Permutation GroupSpec::reflection() const {
    std::vector<Vertex> img(n);
    for (int i = 1; i <= n; ++i) img[i - 1] = n + 1 - i;
    return Permutation::from_images(std::move(img));
}

std::vector<Permutation> GroupSpec::elements() const {
    if (n < 1) throw std::invalid_argument("GroupSpec: n must be positive");
    std::vector<Permutation> out;
    out.reserve(order());
    Permutation a = rotation();
    Permutation g = Permutation::identity(n);
    for (int j = 0; j < n; ++j) {
        out.push_back(g);
        g = a.after(g);
    }
    if (kind == GroupKind::dihedral) {
        Permutation b = reflection();
        for (int j = 0; j < n; ++j) out.push_back(out[j].after(b));
    }
    return out;
}

std::vector<Face> orbit_of(Face f, const GroupSpec& g) {
    if (f.empty()) throw std::invalid_argument("orbit_of: empty face");
    if (f.max_vertex() > g.n) throw std::invalid_argument("orbit_of: vertex label exceeds group degree");
    std::vector<Face> out;
    for (const Permutation& p : g.elements()) out.push_back(p(f));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Face> expand_orbit(const OrbitGenerator& gen, const GroupSpec& g) {
    std::vector<Face> orbit = orbit_of(gen.representative, g);
    if (gen.declared_size != 0 && gen.declared_size != static_cast<int>(orbit.size()))
        throw std::invalid_argument("expand_orbit: declared size " + std::to_string(gen.declared_size) +
                                    " but orbit of " + to_string(gen.representative) + " has " +
                                    std::to_string(orbit.size()) + " members");
    return orbit;
}

SimplicialComplex complex_from_orbits(const std::vector<OrbitGenerator>& gens,
                                      const GroupSpec& g) {
    std::vector<Face> facets;
    for (const OrbitGenerator& gen : gens) {
        std::vector<Face> orbit = expand_orbit(gen, g);
        facets.insert(facets.end(), orbit.begin(), orbit.end());
    }
    return SimplicialComplex::from_facets(std::move(facets), g.n);
}

bool is_invariant(const SimplicialComplex& c, const Permutation& p) {
    if (p.n() < c.n()) throw std::invalid_argument("is_invariant: permutation too small");
    for (Face f : c.facets())
        if (!c.has_facet(p(f))) return false;
    return true;
}

bool has_fixed_face(const SimplicialComplex& c, const Permutation& involution) {
    const Permutation& p = involution;
    if (!p.after(p).is_identity()) throw std::invalid_argument("has_fixed_face: not an involution");
    Face supp = c.support();
    for (Vertex v : supp.vertices()) {
        if (p(v) == v) return true;  // fixed vertex, itself a face
        Face pair = Face::of({v, p(v)});
        if (v < p(v) && c.has_face(pair)) return true;  // fixed edge
    }
    return false;
}

bool is_centrally_symmetric(const SimplicialComplex& c) {
    if (c.n() % 2 != 0) throw std::invalid_argument("is_centrally_symmetric: odd vertex count");
    Permutation inv = central_involution(c.n());
    return is_invariant(c, inv) && !has_fixed_face(c, inv);
}

std::vector<OrbitGenerator> prefilter_orbits(const std::vector<OrbitGenerator>& orbits,
                                             const GroupSpec& g) {
    if (g.n % 2 != 0) throw std::invalid_argument("prefilter_orbits: odd vertex count");
    Permutation inv = central_involution(g.n);
    std::vector<OrbitGenerator> kept;
    for (const OrbitGenerator& gen : orbits) {
        bool clean = true;
        for (Face f : expand_orbit(gen, g)) {
            if (f.intersects(inv(f))) {
                clean = false;
                break;
            }
        }
        if (clean) kept.push_back(gen);
    }
    return kept;
}

}  // namespace cstri
