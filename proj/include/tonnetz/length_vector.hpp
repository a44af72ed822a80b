#pragma once

#include <vector>

#include "tonnetz/errors.hpp"

namespace tonnetz {

/// Length vector (n, k, l_1..l_k): the single input of every construction.
///
/// A vector is *generic* when all 2^k subset sums of the lengths are
/// pairwise distinct, and *reduced* when gcd(l_1,...,l_k) = 1. Both flags
/// are computed once at construction.
class LengthVector {
public:
    /// Validates and constructs. Throws SumMismatch if the lengths do not
    /// add up to n, and TonnetzError for k < 2 or nonpositive lengths.
    static LengthVector validate(int n, int k, const std::vector<int>& lengths);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<int>& lengths() const { return lengths_; }
    int length(int i) const { return lengths_[i]; }  // 0-based
    bool generic() const { return generic_; }
    bool reduced() const { return reduced_; }

    /// Sum of l_i over a 0-based index subset.
    long long subset_sum(const std::vector<int>& subset) const;

    /// All 2^k subset sums, indexed by bitmask.
    std::vector<long long> all_subset_sums() const;

    bool operator==(const LengthVector& o) const {
        return n_ == o.n_ && k_ == o.k_ && lengths_ == o.lengths_;
    }

private:
    LengthVector() = default;
    int n_ = 0;
    int k_ = 0;
    std::vector<int> lengths_;
    bool generic_ = false;
    bool reduced_ = false;
};

}  // namespace tonnetz
