#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tonnetz/complex.hpp"
#include "tonnetz/length_vector.hpp"

namespace tonnetz {

/// Elements of the permutohedral lattice as integer k-vectors (coordinate
/// sum 0, all coordinates congruent mod k).
using LatticeVector = std::vector<long long>;

/// Coordinates in the basis a_1..a_{k-1} (a_k eliminated via sum a_i = 0).
/// In these coordinates the ambient lattice is all of Z^{k-1}.
using ACoords = std::vector<long long>;

/// a_i = omega(E_i): coordinate k-1 at position i (0-based), -1 elsewhere.
LatticeVector a_vector(int k, int i);

/// a_I = sum of a_i over a 0-based index subset.
LatticeVector a_subset(int k, const std::vector<int>& subset);

LatticeVector acoords_to_lattice(int k, const ACoords& c);
ACoords lattice_to_acoords(int k, const LatticeVector& x);

/// Gram matrix of a_1..a_{k-1}: k(k-1) on the diagonal, -k off it.
std::vector<std::vector<long long>> ambient_gram(int k);

/// Maximal Delone cell: vertices z, z + a_{I_1}, ..., z + a_{I_{k-1}} for a
/// strictly increasing chain of subsets.
struct DeloneCell {
    ACoords base;
    std::vector<std::vector<int>> chain;  // I_1 subset I_2 subset ...
    std::vector<ACoords> vertices(int k) const;
};

/// The k! maximal cells incident to z; their union is the star of z.
std::vector<DeloneCell> delone_star(int k, const ACoords& z);

/// Rank-(k-1) sublattice in a-coordinates, basis stored as column-style
/// Hermite normal form: lower triangular, positive diagonal, off-diagonal
/// entries reduced mod the diagonal of their row.
struct SubLattice {
    int k = 0;
    std::vector<std::vector<long long>> hnf;  // (k-1) x (k-1), columns = generators
    long long index = 0;                      // = |det hnf|
    std::string to_text() const;
};

/// Column HNF of the lattice spanned by the given a-coordinate generators.
/// Throws if the span does not have full rank k-1.
SubLattice hermite_normal_form(int k, const std::vector<ACoords>& generators);

/// Reduces an a-coordinate vector to its canonical residue mod the
/// sublattice (componentwise least nonnegative under the HNF basis).
ACoords reduce_mod(const SubLattice& sub, ACoords v);

/// Lambda_L: image of {p in Z^k : sum p_i l_i = 0 mod n} under
/// p -> sum p_i a_i. Throws NotReduced when gcd(L) > 1.
SubLattice lambda_L(const LengthVector& L);

/// Integer kernel basis of the 1 x k matrix (l_1 ... l_k); rank k-1.
std::vector<std::vector<long long>> h1_lattice(const LengthVector& L);

/// The Delone triangulation modulo Lambda_L, vertices labeled by Z_n via
/// p -> sum p_i l_i mod n.
struct QuotientComplex {
    LengthVector L = LengthVector::validate(2, 2, {1, 1});
    SubLattice sublattice;
    std::map<ACoords, int> labels;  // canonical residue -> Z_n label
    std::set<Simplex> facets;       // label sets
};

/// Throws LabelCollision if the label map (Lambda / Lambda_L) -> Z_n fails
/// to be a bijection.
QuotientComplex quotient_complex(const LengthVector& L);

/// True iff the quotient facet set equals build_complex(L)'s facet set as
/// sets of Z_n labels.
bool verify_main_theorem(const LengthVector& L);

/// Exact shortest nonzero vector of a sublattice in the Gram metric, by
/// bounded integer enumeration. `normalized_sq` = min / (k(k-1)), reduced,
/// so Delone edges have length 1.
struct ShortestVectorResult {
    long long min_sq = 0;                              // Gram-metric squared length
    std::pair<long long, long long> normalized_sq{0, 1};  // reduced fraction
    ACoords witness;
};
ShortestVectorResult shortest_vector(const SubLattice& sub);

/// Finite combinatorial patch of the Delone triangulation: the subcomplex
/// induced on lattice points within edge distance r of the origin. Vertex
/// labels are canonical exponent vectors (min coordinate 0).
struct DelonePatch {
    int k = 0;
    int radius = 0;
    std::vector<ACoords> vertices;                 // index -> a-coords
    std::map<ACoords, int> vertex_ids;
    std::vector<std::vector<long long>> labels;    // index -> exponent vector
    std::set<Simplex> facets;                      // vertex-id sets
    std::string to_text() const;
};
DelonePatch irrational_patch(int k, int radius);

}  // namespace tonnetz
