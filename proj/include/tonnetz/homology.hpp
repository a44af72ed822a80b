#pragma once

#include <set>
#include <string>
#include <vector>

#include "tonnetz/complex.hpp"

namespace tonnetz {

/// Betti numbers and invariant factors per dimension, computed over the
/// integers. Torsion factors are > 1 and divisibility-ordered.
struct HomologyProfile {
    std::vector<long long> betti;
    std::vector<std::vector<long long>> torsion;
    std::string to_text() const;
};

/// Nonzero invariant factors of an integer matrix (Smith normal form
/// diagonal, divisibility-ordered). Exact arithmetic with smallest-pivot
/// selection to control entry growth.
std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m);

/// Integral simplicial homology of a finite complex given as a full face
/// index (faces[d] = set of d-faces). Boundary orientation: vertices in
/// increasing order, signs alternating by position.
HomologyProfile simplicial_homology(const std::vector<std::set<Simplex>>& faces);

HomologyProfile simplicial_homology(const TonnetzComplex& T);

}  // namespace tonnetz
