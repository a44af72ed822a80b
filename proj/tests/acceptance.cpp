// End-to-end acceptance suite: one pass/fail line per criterion, nonzero
// exit status if anything fails. Every check is exact (integer) arithmetic.
#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "tonnetz/analysis.hpp"
#include "tonnetz/chains.hpp"
#include "tonnetz/complex.hpp"
#include "tonnetz/homology.hpp"
#include "tonnetz/lattice.hpp"
#include "tonnetz/topology.hpp"

using namespace tonnetz;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what
              << std::endl;
    if (!ok) ++failures;
}

// All generic reduced k=3 vectors with n <= 16, plus the k=4 benchmark.
std::vector<LengthVector> instance_set() {
    std::vector<LengthVector> out;
    for (int n = 6; n <= 16; ++n)
        for (const auto& L : enumerate_generic(n, 3)) out.push_back(L);
    out.push_back(LengthVector::validate(15, 4, {1, 2, 4, 8}));
    return out;
}

}  // namespace

int main() {
    const auto instances = instance_set();

    {  // 1: classical Tonnetz facet set
        auto T = TonnetzComplex::build(LengthVector::validate(12, 3, {3, 4, 5}));
        std::set<Simplex> expected;
        for (int x = 0; x < 12; ++x) {
            expected.insert(make_simplex({x, x + 3, x + 7}, 12));
            expected.insert(make_simplex({x, x + 4, x + 7}, 12));
        }
        report(1, "classical Tonnetz reconstruction (24 triads)", T.facets() == expected);
    }

    {  // 2: f-vector closed form and Euler characteristic
        bool ok = true;
        for (const auto& L : instances) {
            auto T = TonnetzComplex::build(L);
            ok = ok && T.f_vector() == stirling_f_vector(L.n(), L.k());
            ok = ok && T.euler_characteristic() == 0;
        }
        report(2, "f-vector closed form and chi = 0 on the instance set", ok);
    }

    {  // 3: manifold links
        bool ok = true;
        for (const auto& L : instances) {
            auto rep = verify_manifold(TonnetzComplex::build(L));
            ok = ok && rep.pass && rep.sphere_certified && rep.connected;
        }
        report(3, "vertex links are k!-facet spheres on the instance set", ok);
    }

    {  // 4: torus homology
        bool ok = true;
        for (const auto& L : instances) {
            auto h = simplicial_homology(TonnetzComplex::build(L));
            std::vector<long long> expected(L.k(), 0);
            for (int d = 0; d < L.k(); ++d) {
                // binomial(k-1, d)
                long long b = 1;
                for (int i = 0; i < d; ++i) b = b * (L.k() - 1 - i) / (i + 1);
                expected[d] = b;
            }
            ok = ok && h.betti == expected;
            for (const auto& t : h.torsion) ok = ok && t.empty();
        }
        report(4, "integral homology of a (k-1)-torus, torsion-free", ok);
    }

    {  // 5: pairing determinant
        bool ok = true;
        for (const auto& L : {LengthVector::validate(12, 3, {3, 4, 5}),
                              LengthVector::validate(12, 3, {2, 3, 7}),
                              LengthVector::validate(15, 4, {1, 2, 4, 8})}) {
            auto closed_form = pairing_matrix(L.n(), L.k());
            ok = ok && pairing_matrix_direct(L) == closed_form.m;
            ok = ok && integer_determinant(closed_form.m) == closed_form.det;
        }
        ok = ok && pairing_matrix(12, 3).det == 432;
        report(5, "pairing matrix <omega_i, c_j> and det = n(nk)^(k-2)", ok);
    }

    {  // 6: cocycle laws
        bool ok = true;
        for (const auto& L : instances) {
            auto T = TonnetzComplex::build(L);
            for (const Simplex& f : T.facets()) {
                Chain bd;
                for (std::size_t i = 0; i < f.size(); ++i)
                    bd.add({f[i], f[(i + 1) % f.size()]}, 1);
                // delta(theta) on the triangle boundary of each 2-face of f
                // is covered by the k = 3 facets directly; for k = 4 use all
                // triangular 2-faces.
                std::vector<Simplex> tris;
                if (f.size() == 3) {
                    tris.push_back(f);
                } else {
                    for (std::size_t d = 0; d < f.size(); ++d) {
                        Simplex t;
                        for (std::size_t i = 0; i < f.size(); ++i)
                            if (i != d) t.push_back(f[i]);
                        tris.push_back(t);
                    }
                }
                for (const Simplex& t : tris) {
                    Chain tb;
                    tb.add({t[0], t[1]}, 1);
                    tb.add({t[1], t[2]}, 1);
                    tb.add({t[2], t[0]}, 1);
                    for (int i = 0; i < L.k() && ok; ++i)
                        for (int j = 0; j < L.k(); ++j) {
                            if (i == j) continue;
                            if (theta(L, i, j, tb) != 0) {
                                ok = false;
                                break;
                            }
                        }
                }
            }
            for (const Simplex& e : T.faces(1)) {
                auto v = omega(L, atom_decomposition(L, {e[0], e[1]}));
                long long s = 0;
                for (long long x : v) s += x;
                ok = ok && s == 0;
            }
        }
        report(6, "cocycle laws: delta theta = 0 and sum omega_i = 0", ok);
    }

    {  // 7: Lambda_L example
        auto sub = lambda_L(LengthVector::validate(12, 3, {2, 3, 7}));
        auto span = hermite_normal_form(3, {{-3, 2}, {-6, 0}});
        report(7, "Lambda_(2,3,7) = span{-3a1+2a2, -6a1}, index 12",
               sub.hnf == span.hnf && sub.index == 12);
    }

    {  // 8: systoles
        auto s = [](std::vector<int> lv) {
            return shortest_vector(lambda_L(LengthVector::validate(12, 3, lv)))
                .normalized_sq;
        };
        using F = std::pair<long long, long long>;
        report(8, "normalized systole^2: 9 for (3,4,5), 7 for (2,3,7) and (1,2,9)",
               s({3, 4, 5}) == F{9, 1} && s({2, 3, 7}) == F{7, 1} &&
                   s({1, 2, 9}) == F{7, 1});
    }

    {  // 9: main theorem
        bool ok = true;
        for (const auto& L : instances) ok = ok && verify_main_theorem(L);
        report(9, "quotient complex D/Lambda_L equals the direct construction", ok);
    }

    {  // 10: isomorphism classification
        auto classes = classify(12, 3);
        std::set<std::set<std::vector<int>>> got;
        std::set<std::vector<int>> all;
        for (const auto& cls : classes) {
            std::set<std::vector<int>> c;
            for (const auto& L : cls) {
                c.insert(L.lengths());
                all.insert(L.lengths());
            }
            got.insert(c);
        }
        bool ok = all == std::set<std::vector<int>>{
                             {1, 2, 9}, {1, 3, 8}, {1, 4, 7}, {2, 3, 7}, {3, 4, 5}};
        ok = ok && got.count({{1, 2, 9}, {2, 3, 7}}) == 1;
        // (3,4,5) in a class distinct from the (2,3,7) ~ (1,2,9) class
        for (const auto& c : got)
            if (c.count({3, 4, 5})) ok = ok && c.count({2, 3, 7}) == 0;
        // fast lattice path agrees with the exhaustive oracle on all pairs
        auto vecs = enumerate_generic(12, 3);
        for (std::size_t i = 0; i < vecs.size() && ok; ++i)
            for (std::size_t j = i; j < vecs.size(); ++j) {
                auto res = is_isomorphic(vecs[i], vecs[j]);
                auto A = TonnetzComplex::build(vecs[i]).facets();
                auto B = TonnetzComplex::build(vecs[j]).facets();
                bool oracle = find_complex_isomorphism(A, B, 12).has_value();
                if (res.isomorphic != oracle ||
                    (res.lattice_witness && *res.lattice_witness != oracle)) {
                    ok = false;
                    break;
                }
            }
        report(10, "classification of the five n = 12 vectors, oracle-checked", ok);
    }

    {  // 11: reduction to connected components
        auto comps = components_of_scaled(LengthVector::validate(24, 3, {6, 8, 10}));
        auto T = TonnetzComplex::build(LengthVector::validate(12, 3, {3, 4, 5}));
        bool ok = comps.size() == 2;
        for (const auto& c : comps) {
            ok = ok && c.reduced_facets == T.facets();
            // exhaustive isomorphism of the relabeled ambient component
            std::map<int, int> dense;
            for (const Simplex& f : c.ambient_facets)
                for (int v : f) dense.emplace(v, 0);
            int next = 0;
            for (auto& [v, id] : dense) id = next++;
            std::set<Simplex> relabeled;
            for (const Simplex& f : c.ambient_facets) {
                Simplex g;
                for (int v : f) g.push_back(dense[v]);
                std::sort(g.begin(), g.end());
                relabeled.insert(g);
            }
            ok = ok && find_complex_isomorphism(relabeled, T.facets(), 12).has_value();
        }
        report(11, "Tonn(24,3,(6,8,10)) = two copies of the classical Tonnetz", ok);
    }

    {  // 12: generic enumeration vs the published tables
        auto lv = [](const std::vector<LengthVector>& ls) {
            std::vector<std::vector<int>> out;
            for (const auto& L : ls) out.push_back(L.lengths());
            return out;
        };
        using VV = std::vector<std::vector<int>>;
        // n = 9 has three generic vectors: (1,3,5) is easy to overlook,
        // but its eight subset sums 0,1,3,4,5,6,8,9 are all distinct.
        bool ok = lv(enumerate_generic(7, 3)) == VV{{1, 2, 4}} &&
                  lv(enumerate_generic(8, 3)) == VV{{1, 2, 5}} &&
                  lv(enumerate_generic(9, 3)) == VV{{1, 2, 6}, {1, 3, 5}, {2, 3, 4}} &&
                  lv(enumerate_generic(10, 3)) == VV{{1, 2, 7}, {1, 3, 6}} &&
                  lv(enumerate_generic(11, 3)) ==
                      VV{{1, 2, 8}, {1, 3, 7}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}} &&
                  lv(enumerate_generic(12, 3)) ==
                      VV{{1, 2, 9}, {1, 3, 8}, {1, 4, 7}, {2, 3, 7}, {3, 4, 5}};
        // Independent confirmation that (1,3,5) belongs: genericity by
        // direct subset-sum check.
        ok = ok && LengthVector::validate(9, 3, {1, 3, 5}).generic();
        report(12, "generic vector enumeration for n = 7..12, k = 3", ok);
    }

    {  // 13: monomorphism and short-image exclusion
        // Images a_I - a_J = a_I + a_{J^c} over all subset pairs.
        std::set<std::vector<long long>> short_images;
        for (unsigned mi = 0; mi < 8; ++mi)
            for (unsigned mj = 0; mj < 8; ++mj) {
                std::vector<long long> v(3, 0);
                for (int i = 0; i < 3; ++i) {
                    auto ai = a_vector(3, i);
                    for (int c = 0; c < 3; ++c) {
                        if (mi & (1u << i)) v[c] += ai[c];
                        if (mj & (1u << i)) v[c] -= ai[c];
                    }
                }
                if (v != std::vector<long long>{0, 0, 0}) short_images.insert(v);
            }
        bool ok = true;
        for (const auto& L : enumerate_generic(12, 3)) {
            for (long long p1 = 0; p1 <= 4 && ok; ++p1)
                for (long long p2 = 0; p2 <= 4 && ok; ++p2)
                    for (long long p3 = 0; p3 <= 4; ++p3) {
                        EdgeWord w{0, {p1, p2, p3}};
                        if (!w.closed(L)) continue;
                        auto nf = homology_normal_form(L, w);
                        if (nf == std::vector<long long>{0, 0, 0}) continue;
                        auto v = omega(L, w);
                        if (v == std::vector<long long>{0, 0, 0} ||
                            short_images.count(v)) {
                            ok = false;
                            break;
                        }
                    }
        }
        report(13, "nontrivial classes have omega != 0 and never a_I + a_(J^c)", ok);
    }

    {  // 14: irrational patch link census and tiling counts
        bool ok = true;
        for (int r = 1; r <= 4; ++r) {
            auto p = irrational_patch(3, r);
            std::map<int, int> facet_count;
            for (const Simplex& f : p.facets)
                for (int v : f) ++facet_count[v];
            auto interior = irrational_patch(3, r - 1);
            for (const auto& [c, id] : interior.vertex_ids) {
                auto it = p.vertex_ids.find(c);
                if (it == p.vertex_ids.end() || facet_count[it->second] != 6) {
                    ok = false;
                    break;
                }
            }
            // Star tiling: every interior vertex's star is a copy of
            // delone_star, so facets incident to it number k! = 6; the
            // radius-1 patch is exactly one star.
            if (r == 1) ok = ok && p.facets.size() == delone_star(3, {0, 0}).size();
        }
        report(14, "irrational patch: full 6-triangle stars at interior vertices", ok);
    }

    if (failures) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all 14 criteria passed" << std::endl;
    return 0;
}
