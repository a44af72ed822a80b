#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tonnetz/length_vector.hpp"

namespace tonnetz {

/// Oriented edge of a Tonnetz complex; vertices are residues mod n.
struct OrientedEdge {
    int tail = 0;
    int head = 0;
};

/// L-type of an edge: the 0-based index subset I with
/// (head - tail mod n) = sum_{i in I} l_i, unique when L is generic.
/// Throws NoType when the difference is not a subset sum.
std::vector<int> edge_l_type(const LengthVector& L, const OrientedEdge& X);

/// A based edge word recorded by its net exponent vector over the atomic
/// steps E_1..E_k. Letter order is deliberately forgotten: permuting the
/// letters changes neither the endpoint nor any cocycle value.
struct EdgeWord {
    int base = 0;
    std::vector<long long> exponents;  // size k

    int endpoint(const LengthVector& L) const;
    bool closed(const LengthVector& L) const;
    /// p_0 with p_1 l_1 + ... + p_k l_k = p_0 n + (endpoint - base).
    long long winding(const LengthVector& L) const;
};

/// Word of atomic steps from tail to head, one step per element of the
/// edge's L-type.
EdgeWord atom_decomposition(const LengthVector& L, const OrientedEdge& X);

/// Sparse integer 1-chain keyed by canonical edge (tail < head); an edge
/// stored in the opposite orientation flips the coefficient sign.
class Chain {
public:
    void add(const OrientedEdge& X, long long coeff);
    const std::map<std::pair<int, int>, long long>& terms() const { return terms_; }
    /// Boundary as a vertex -> coefficient map (zero entries dropped).
    std::map<int, long long> boundary() const;

private:
    std::map<std::pair<int, int>, long long> terms_;
};

/// Elementary cocycle theta_{i,j} evaluated on a chain via atom
/// decomposition and linearity. Satisfies theta(-X) = -theta(X).
long long theta(const LengthVector& L, int i, int j, const Chain& chain);
long long theta(const LengthVector& L, int i, int j, const OrientedEdge& X);

/// Vector cocycle omega = (omega_1,...,omega_k); on an atomic step of type
/// i it returns a_i (coordinate k-1 at i, -1 elsewhere). Values lie in the
/// permutohedral lattice: coordinate sum 0, all coordinates congruent mod k.
std::vector<long long> omega(const LengthVector& L, const Chain& chain);
std::vector<long long> omega(const LengthVector& L, const EdgeWord& word);

/// c_i: the sum of all n atomic edges of type i (0-based).
Chain canonical_cycle(const LengthVector& L, int i);

/// Closed-form pairing matrix <omega_i, c_j> (diagonal n(k-1), off-diagonal
/// -n) with its exact determinant n(nk)^{k-2}.
struct PairingMatrix {
    std::vector<std::vector<long long>> m;
    long long det = 0;
};
PairingMatrix pairing_matrix(int n, int k);

/// The same matrix by direct cocycle/cycle evaluation on the complex edges.
std::vector<std::vector<long long>> pairing_matrix_direct(const LengthVector& L);

/// Exact determinant by fraction-free elimination.
long long integer_determinant(std::vector<std::vector<long long>> m);

/// Canonical homology representative of a closed word: exponents shifted
/// so the minimum is 0. Two closed words are homologous iff these agree.
/// Throws NotClosed.
std::vector<long long> homology_normal_form(const LengthVector& L, const EdgeWord& word);

}  // namespace tonnetz
