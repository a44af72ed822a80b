#pragma once

#include <string>
#include <vector>

#include "tonnetz/complex.hpp"

namespace tonnetz {

/// Link of a face: the facets sigma with sigma ∩ tau = ∅ and sigma ∪ tau
/// a facet of T. Dimension of the link facets is k - 1 - |tau|.
struct LinkComplex {
    Simplex base;
    std::set<Simplex> facets;
    /// Downward closure of the link facets, by dimension.
    std::vector<std::set<Simplex>> closure() const;
};

LinkComplex link(const TonnetzComplex& T, const Simplex& tau);

/// Part sizes (s_0,...,s_t) of the ordered partition encoded by the gap
/// lengths of tau; the link is the join of dual-permutohedron boundaries
/// of these ranks. Sizes sum to k and the count equals |tau|.
std::vector<int> link_join_profile(const TonnetzComplex& T, const Simplex& tau);

/// Connected components under edge adjacency, as sorted vertex sets.
std::vector<std::vector<int>> connected_components(const TonnetzComplex& T);

struct ManifoldReport {
    bool pass = false;
    /// True when sphericity of the links was certified exactly (k <= 4);
    /// for k >= 5 only necessary conditions are checked.
    bool sphere_certified = false;
    bool connected = false;
    int vertices_checked = 0;
    std::vector<std::string> failures;
    std::string to_text() const;
};

/// Checks every vertex link: k! facets, closed pseudomanifold of dimension
/// k-2, connected, chi = chi(S^{k-2}). For k = 3 additionally certifies a
/// single cycle, for k = 4 a 2-sphere.
ManifoldReport verify_manifold(const TonnetzComplex& T);

}  // namespace tonnetz
