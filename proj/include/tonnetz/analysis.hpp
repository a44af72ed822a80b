#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tonnetz/complex.hpp"
#include "tonnetz/lattice.hpp"

namespace tonnetz {

/// All generic reduced length vectors l_1 < l_2 < ... < l_k summing to n,
/// sorted lexicographically.
std::vector<LengthVector> enumerate_generic(int n, int k);

/// Isometry invariants of a Tonnetz: equal records are necessary for
/// combinatorial isomorphism.
struct InvariantRecord {
    int n = 0;
    int k = 0;
    std::vector<long long> f_vector;
    std::pair<long long, long long> systole_sq{0, 1};  // normalized, reduced fraction
    long long lattice_index = 0;
    /// Lexicographically minimal HNF over the Delone point-group orbit
    /// (coordinate permutations composed with global negation).
    std::vector<std::vector<long long>> hnf_orbit_canon;

    bool operator==(const InvariantRecord&) const = default;
};

InvariantRecord invariants(const LengthVector& L);

/// Exhaustive simplicial isomorphism between two complexes on {0..n-1},
/// by vertex-map backtracking with adjacency pruning. Decisive oracle.
std::optional<std::vector<int>> find_complex_isomorphism(const std::set<Simplex>& A,
                                                         const std::set<Simplex>& B, int n);

struct IsoResult {
    bool isomorphic = false;
    /// Verdict of the lattice point-group fast path, when it produced one.
    std::optional<bool> lattice_witness;
    /// Vertex map witness when found by the exhaustive search.
    std::optional<std::vector<int>> vertex_map;
    std::string method;  // "invariants", "lattice", or "exhaustive"
};

/// Decides combinatorial isomorphism of Tonn(L1) and Tonn(L2). Fast paths:
/// invariant mismatch (false), point-group map of the sublattices (true);
/// otherwise the exhaustive search decides.
IsoResult is_isomorphic(const LengthVector& L1, const LengthVector& L2);

/// Isomorphism classes of enumerate_generic(n, k).
std::vector<std::vector<LengthVector>> classify(int n, int k);

}  // namespace tonnetz
