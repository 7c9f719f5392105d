#include "cstri/homology.hpp"

#include <stdexcept>
#include <unordered_map>

namespace cstri {

namespace {

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void swap_rows(IntMatrix& a, int i, int j) { std::swap(a[i], a[j]); }

void swap_cols(IntMatrix& a, int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace

SmithNormalForm smith_normal_form(IntMatrix a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    SmithNormalForm out;

    int t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry of the trailing submatrix becomes the pivot
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (pi == -1 || abs_val(a[i][j]) < abs_val(a[pi][pj])) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == -1) break;
        if (pi != t) swap_rows(a, pi, t);
        if (pj != t) swap_cols(a, pj, t);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const BigInt q = a[i][t] / a[t][t];
                if (q != 0)
                    for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {  // remainder is smaller; promote it
                    swap_rows(a, i, t);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const BigInt q = a[t][j] / a[t][t];
                if (q != 0)
                    for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    swap_cols(a, j, t);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // divisibility of the trailing block by the pivot
            for (int i = t + 1; i < rows && !dirty; ++i)
                for (int j = t + 1; j < cols && !dirty; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                        dirty = true;
                    }
                }
        }
        out.invariant_factors.push_back(abs_val(a[t][t]));
        ++t;
    }
    out.rank = static_cast<int>(out.invariant_factors.size());
    return out;
}

IntMatrix boundary_matrix(const SimplicialComplex& c, int i) {
    if (i < 1 || i > c.dim()) throw std::invalid_argument("boundary_matrix: need 1 <= i <= dim");
    const std::vector<Face> lower = c.faces(i - 1);
    const std::vector<Face> upper = c.faces(i);
    std::unordered_map<std::uint64_t, int> row_of;
    for (std::size_t r = 0; r < lower.size(); ++r) row_of[lower[r].bits()] = static_cast<int>(r);

    IntMatrix m(lower.size(), std::vector<BigInt>(upper.size(), 0));
    for (std::size_t col = 0; col < upper.size(); ++col) {
        const std::vector<Vertex> vs = upper[col].vertices();
        for (std::size_t j = 0; j < vs.size(); ++j) {
            const int row = row_of.at(upper[col].without(vs[j]).bits());
            m[row][col] = (j % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

HomologyProfile homology(const SimplicialComplex& c) {
    HomologyProfile out;
    if (c.is_empty()) return out;
    const int d = c.dim();
    const FVector f = c.f_vector();

    std::vector<int> rank(d + 2, 0);  // rank[i] = rank of the i-th boundary map
    std::vector<std::vector<BigInt>> tors(d + 2);
    for (int i = 1; i <= d; ++i) {
        SmithNormalForm snf = smith_normal_form(boundary_matrix(c, i));
        rank[i] = snf.rank;
        for (const BigInt& x : snf.invariant_factors)
            if (x > 1) tors[i].push_back(x);
    }
    out.betti.resize(d + 1);
    out.torsion.resize(d + 1);
    for (int i = 0; i <= d; ++i) {
        out.betti[i] = f[i] - rank[i] - rank[i + 1];
        out.torsion[i] = tors[i + 1];
    }
    return out;
}

}  // namespace cstri
