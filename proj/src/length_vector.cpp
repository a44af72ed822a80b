#include "tonnetz/length_vector.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tonnetz {

LengthVector LengthVector::validate(int n, int k, const std::vector<int>& lengths) {
    if (k < 2)
        throw TonnetzError("bad k", "k must be at least 2, got " + std::to_string(k));
    if (static_cast<int>(lengths.size()) != k)
        throw TonnetzError("bad lengths", "expected " + std::to_string(k) + " lengths");
    for (int l : lengths)
        if (l < 1)
            throw TonnetzError("bad lengths", "all lengths must be positive");
    long long sum = std::accumulate(lengths.begin(), lengths.end(), 0LL);
    if (sum != n)
        throw SumMismatch("lengths sum to " + std::to_string(sum) +
                          ", expected n = " + std::to_string(n));

    LengthVector L;
    L.n_ = n;
    L.k_ = k;
    L.lengths_ = lengths;

    std::vector<long long> sums = L.all_subset_sums();
    std::sort(sums.begin(), sums.end());
    L.generic_ = std::adjacent_find(sums.begin(), sums.end()) == sums.end();

    int g = 0;
    for (int l : lengths) g = std::gcd(g, l);
    L.reduced_ = (g == 1);
    return L;
}

long long LengthVector::subset_sum(const std::vector<int>& subset) const {
    long long s = 0;
    for (int i : subset) s += lengths_[i];
    return s;
}

std::vector<long long> LengthVector::all_subset_sums() const {
    std::vector<long long> sums(std::size_t{1} << k_, 0);
    for (std::size_t mask = 1; mask < sums.size(); ++mask) {
        std::size_t low = mask & (mask - 1);
        int bit = std::countr_zero(mask);
        sums[mask] = sums[low] + lengths_[bit];
    }
    return sums;
}

}  // namespace tonnetz
