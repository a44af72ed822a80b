#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "tonnetz/length_vector.hpp"

namespace tonnetz {

/// A simplex is a strictly increasing list of least nonnegative residues
/// mod n. This canonical form gives a total order for dedup and hashing.
using Simplex = std::vector<int>;

Simplex make_simplex(std::vector<int> vertices, int n);

/// Facet Delta(x; sigma) = {x, x+l_{sigma(1)}, x+l_{sigma(1)}+l_{sigma(2)}, ...}
/// reduced mod n. `sigma` is a permutation of {0..k-1}.
Simplex facet(const LengthVector& L, int x, const std::vector<int>& sigma);

/// All ordered partitions of {0..k-1} into m nonempty blocks, each encoded
/// as a block-index assignment per element.
std::vector<std::vector<int>> ordered_partitions(int k, int m);

/// Closed-form f-vector n * m! * S(k,m) / m, Stirling numbers by the
/// recurrence S(k,m) = m S(k-1,m) + S(k-1,m-1).
std::vector<long long> stirling_f_vector(int n, int k);

/// The generalized Tonnetz complex on vertex set Z_n. Immutable after
/// construction; the face index is populated eagerly so instances can be
/// shared across threads freely.
class TonnetzComplex {
public:
    /// Throws NotGeneric unless `permissive`; a permissive build records
    /// the facet set but marks manifold-dependent operations unavailable.
    static TonnetzComplex build(const LengthVector& L, bool permissive = false);

    const LengthVector& lengths() const { return L_; }
    int n() const { return L_.n(); }
    int k() const { return L_.k(); }
    const std::set<Simplex>& facets() const { return facets_; }

    /// All d-faces, 0 <= d <= k-1.
    const std::set<Simplex>& faces(int d) const;

    /// Enumerated f-vector (f_0, ..., f_{k-1}).
    std::vector<long long> f_vector() const;

    long long euler_characteristic() const;

    bool contains(const Simplex& s) const;
    bool permissive() const { return permissive_; }

private:
    TonnetzComplex() = default;
    LengthVector L_ = LengthVector::validate(2, 2, {1, 1});
    std::set<Simplex> facets_;
    std::vector<std::set<Simplex>> face_index_;  // by dimension
    bool permissive_ = false;
};

/// One connected component of a scaled complex Tonn^{pn,k}(pL).
struct ScaledComponent {
    int coset = 0;                        // residue class mod p
    std::set<Simplex> ambient_facets;     // facets in Z_{pn} labels
    std::set<Simplex> reduced_facets;     // relabeled via x -> (x - coset)/p
};

/// Splits Tonn^{pn,k}(pL) into its p components, p = gcd of the input
/// lengths. Each component is vertex-relabel isomorphic to the reduced
/// complex Tonn^{n,k}(L).
std::vector<ScaledComponent> components_of_scaled(const LengthVector& pL);

/// Line-oriented text format: header `tonnetz n k l_1 ... l_k`, then one
/// facet per line, vertices increasing, lines sorted. `header_tag` inserts
/// an extra token after `tonnetz` (used for quotient complexes).
std::string to_text(const LengthVector& L, const std::set<Simplex>& facets,
                    const std::string& header_tag = "");

struct ParsedComplex {
    LengthVector L = LengthVector::validate(2, 2, {1, 1});
    std::set<Simplex> facets;
    std::string header_tag;
};
ParsedComplex from_text(std::istream& in);

}  // namespace tonnetz
