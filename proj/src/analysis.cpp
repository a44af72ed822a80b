#include "tonnetz/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tonnetz {

std::vector<LengthVector> enumerate_generic(int n, int k) {
    if (n <= k || k < 2)
        throw TonnetzError("bad parameters", "enumerate_generic needs n > k >= 2");
    std::vector<LengthVector> out;
    std::vector<int> lengths;
    // Genericity forces distinct lengths, so strictly increasing tuples
    // cover every multiset once.
    std::function<void(int, int)> rec = [&](int start, int remaining) {
        int pos = static_cast<int>(lengths.size());
        if (pos == k - 1) {
            if (remaining > (lengths.empty() ? 0 : lengths.back())) {
                lengths.push_back(remaining);
                LengthVector L = LengthVector::validate(n, k, lengths);
                if (L.generic() && L.reduced()) out.push_back(L);
                lengths.pop_back();
            }
            return;
        }
        for (int l = start; l * (k - pos) < remaining; ++l) {
            lengths.push_back(l);
            rec(l + 1, remaining - l);
            lengths.pop_back();
        }
    };
    rec(1, n);
    return out;
}

namespace {

/// Orbit of a sublattice under coordinate permutations and negation, as
/// HNF matrices.
std::vector<std::vector<std::vector<long long>>> point_group_orbit(const SubLattice& sub) {
    const int k = sub.k;
    const int R = k - 1;
    std::vector<LatticeVector> basis;
    for (int j = 0; j < R; ++j) {
        ACoords c(R);
        for (int i = 0; i < R; ++i) c[i] = sub.hnf[i][j];
        basis.push_back(acoords_to_lattice(k, c));
    }

    std::set<std::vector<std::vector<long long>>> orbit;
    std::vector<int> pi(k);
    std::iota(pi.begin(), pi.end(), 0);
    do {
        for (int sign : {1, -1}) {
            std::vector<ACoords> gens;
            for (const auto& x : basis) {
                LatticeVector y(k);
                for (int i = 0; i < k; ++i) y[pi[i]] = sign * x[i];
                gens.push_back(lattice_to_acoords(k, y));
            }
            orbit.insert(hermite_normal_form(k, gens).hnf);
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return {orbit.begin(), orbit.end()};
}

std::set<Simplex> skeleton_edges(const std::set<Simplex>& facets) {
    std::set<Simplex> edges;
    for (const Simplex& f : facets)
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                edges.insert({f[i], f[j]});
    return edges;
}

}  // namespace

InvariantRecord invariants(const LengthVector& L) {
    InvariantRecord rec;
    rec.n = L.n();
    rec.k = L.k();
    rec.f_vector = TonnetzComplex::build(L).f_vector();
    SubLattice sub = lambda_L(L);
    rec.lattice_index = sub.index;
    rec.systole_sq = shortest_vector(sub).normalized_sq;
    auto orbit = point_group_orbit(sub);
    rec.hnf_orbit_canon = *std::min_element(orbit.begin(), orbit.end());
    return rec;
}

std::optional<std::vector<int>> find_complex_isomorphism(const std::set<Simplex>& A,
                                                         const std::set<Simplex>& B, int n) {
    if (A.size() != B.size()) return std::nullopt;
    auto edgesA = skeleton_edges(A);
    auto edgesB = skeleton_edges(B);
    if (edgesA.size() != edgesB.size()) return std::nullopt;

    std::vector<std::vector<char>> adjA(n, std::vector<char>(n, 0)), adjB = adjA;
    std::vector<int> degA(n, 0), degB(n, 0);
    for (const auto& e : edgesA) {
        adjA[e[0]][e[1]] = adjA[e[1]][e[0]] = 1;
        ++degA[e[0]];
        ++degA[e[1]];
    }
    for (const auto& e : edgesB) {
        adjB[e[0]][e[1]] = adjB[e[1]][e[0]] = 1;
        ++degB[e[0]];
        ++degB[e[1]];
    }

    // Assignment order: BFS from vertex 0 so every new vertex (after the
    // first per component) has a mapped neighbor to prune against.
    std::vector<int> order;
    {
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            std::vector<int> queue{s};
            seen[s] = 1;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                int u = queue[h];
                order.push_back(u);
                for (int v = 0; v < n; ++v)
                    if (adjA[u][v] && !seen[v]) {
                        seen[v] = 1;
                        queue.push_back(v);
                    }
            }
        }
    }

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> extend = [&](int idx) -> bool {
        if (idx == n) {
            for (const Simplex& f : A) {
                Simplex img;
                for (int v : f) img.push_back(map[v]);
                std::sort(img.begin(), img.end());
                if (!B.count(img)) return false;
            }
            return true;
        }
        int u = order[idx];
        for (int v = 0; v < n; ++v) {
            if (used[v] || degA[u] != degB[v]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int w = order[j];
                if (adjA[u][w] != adjB[v][map[w]]) ok = false;
            }
            if (!ok) continue;
            map[u] = v;
            used[v] = 1;
            if (extend(idx + 1)) return true;
            map[u] = -1;
            used[v] = 0;
        }
        return false;
    };
    if (extend(0)) return map;
    return std::nullopt;
}

IsoResult is_isomorphic(const LengthVector& L1, const LengthVector& L2) {
    IsoResult res;
    InvariantRecord r1 = invariants(L1), r2 = invariants(L2);
    if (r1.n != r2.n || r1.k != r2.k || r1.f_vector != r2.f_vector ||
        r1.systole_sq != r2.systole_sq) {
        res.isomorphic = false;
        res.method = "invariants";
        return res;
    }

    auto orbit = point_group_orbit(lambda_L(L1));
    auto target = lambda_L(L2).hnf;
    bool lattice_match = std::find(orbit.begin(), orbit.end(), target) != orbit.end();
    res.lattice_witness = lattice_match;
    if (lattice_match) {
        res.isomorphic = true;
        res.method = "lattice";
        return res;
    }

    auto witness = find_complex_isomorphism(TonnetzComplex::build(L1).facets(),
                                            TonnetzComplex::build(L2).facets(), L1.n());
    res.isomorphic = witness.has_value();
    res.vertex_map = witness;
    res.method = "exhaustive";
    return res;
}

std::vector<std::vector<LengthVector>> classify(int n, int k) {
    std::vector<LengthVector> all = enumerate_generic(n, k);
    std::vector<std::vector<LengthVector>> classes;
    for (const LengthVector& L : all) {
        bool placed = false;
        for (auto& cls : classes)
            if (is_isomorphic(cls.front(), L).isomorphic) {
                cls.push_back(L);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({L});
    }
    return classes;
}

}  // namespace tonnetz
