#include "tonnetz/chains.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <string>

namespace tonnetz {

namespace {

int mod(long long x, int n) {
    long long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

std::vector<int> edge_l_type(const LengthVector& L, const OrientedEdge& X) {
    int diff = mod(X.head - X.tail, L.n());
    if (diff == 0) throw NoType("degenerate edge (tail == head)");
    auto sums = L.all_subset_sums();
    for (std::size_t mask = 1; mask + 1 < sums.size(); ++mask) {
        if (sums[mask] != diff) continue;
        std::vector<int> I;
        for (int i = 0; i < L.k(); ++i)
            if (mask & (std::size_t{1} << i)) I.push_back(i);
        return I;
    }
    throw NoType("vertex difference " + std::to_string(diff) + " is not a proper subset sum");
}

int EdgeWord::endpoint(const LengthVector& L) const {
    long long acc = base;
    for (int i = 0; i < L.k(); ++i) acc += exponents[i] * L.length(i);
    return mod(acc, L.n());
}

bool EdgeWord::closed(const LengthVector& L) const { return endpoint(L) == base; }

long long EdgeWord::winding(const LengthVector& L) const {
    long long total = 0;
    for (int i = 0; i < L.k(); ++i) total += exponents[i] * L.length(i);
    long long drift = mod(total, L.n());
    return (total - drift) / L.n();
}

EdgeWord atom_decomposition(const LengthVector& L, const OrientedEdge& X) {
    EdgeWord w;
    w.base = X.tail;
    w.exponents.assign(L.k(), 0);
    for (int i : edge_l_type(L, X)) w.exponents[i] = 1;
    return w;
}

void Chain::add(const OrientedEdge& X, long long coeff) {
    if (coeff == 0) return;
    std::pair<int, int> key{X.tail, X.head};
    if (key.first > key.second) {
        std::swap(key.first, key.second);
        coeff = -coeff;
    }
    long long& c = terms_[key];
    c += coeff;
    if (c == 0) terms_.erase(key);
}

std::map<int, long long> Chain::boundary() const {
    std::map<int, long long> b;
    for (const auto& [e, c] : terms_) {
        b[e.second] += c;
        b[e.first] -= c;
    }
    std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
    return b;
}

long long theta(const LengthVector& L, int i, int j, const OrientedEdge& X) {
    if (i == j) throw TonnetzError("bad indices", "theta requires i != j");
    EdgeWord w = atom_decomposition(L, X);
    return w.exponents[i] - w.exponents[j];
}

long long theta(const LengthVector& L, int i, int j, const Chain& chain) {
    long long total = 0;
    for (const auto& [e, c] : chain.terms())
        total += c * theta(L, i, j, OrientedEdge{e.first, e.second});
    return total;
}

std::vector<long long> omega(const LengthVector& L, const EdgeWord& word) {
    int k = L.k();
    long long sum = 0;
    for (long long p : word.exponents) sum += p;
    std::vector<long long> v(k);
    for (int i = 0; i < k; ++i) v[i] = k * word.exponents[i] - sum;
    return v;
}

std::vector<long long> omega(const LengthVector& L, const Chain& chain) {
    std::vector<long long> v(L.k(), 0);
    for (const auto& [e, c] : chain.terms()) {
        EdgeWord w = atom_decomposition(L, OrientedEdge{e.first, e.second});
        auto a = omega(L, w);
        for (int i = 0; i < L.k(); ++i) v[i] += c * a[i];
    }
    return v;
}

Chain canonical_cycle(const LengthVector& L, int i) {
    Chain c;
    for (int x = 0; x < L.n(); ++x)
        c.add(OrientedEdge{x, mod(x + L.length(i), L.n())}, 1);
    return c;
}

long long integer_determinant(std::vector<std::vector<long long>> in) {
    using BigInt = boost::multiprecision::cpp_int;
    int n = static_cast<int>(in.size());
    std::vector<std::vector<BigInt>> m(n);
    for (int i = 0; i < n; ++i) m[i].assign(in[i].begin(), in[i].end());
    // Bareiss fraction-free elimination.
    BigInt prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (m[t][t] == 0) {
            int p = -1;
            for (int i = t + 1; i < n; ++i)
                if (m[i][t] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(m[t], m[p]);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[t][t] - m[i][t] * m[t][j]) / prev;
        prev = m[t][t];
    }
    BigInt det = sign * m[n - 1][n - 1];
    return det.convert_to<long long>();
}

PairingMatrix pairing_matrix(int n, int k) {
    if (k < 2) throw TonnetzError("bad k", "pairing matrix needs k >= 2");
    PairingMatrix pm;
    pm.m.assign(k - 1, std::vector<long long>(k - 1, -n));
    for (int i = 0; i < k - 1; ++i) pm.m[i][i] = static_cast<long long>(n) * (k - 1);
    pm.det = integer_determinant(pm.m);
    return pm;
}

std::vector<std::vector<long long>> pairing_matrix_direct(const LengthVector& L) {
    int k = L.k();
    std::vector<Chain> cycles;
    for (int j = 0; j < k; ++j) cycles.push_back(canonical_cycle(L, j));
    std::vector<std::vector<long long>> m(k - 1, std::vector<long long>(k - 1));
    for (int i = 0; i < k - 1; ++i) {
        for (int j = 0; j < k - 1; ++j) {
            // <omega_i, c_j> = sum over the atoms of c_j of omega_i.
            auto v = omega(L, cycles[j]);
            m[i][j] = v[i];
        }
    }
    return m;
}

std::vector<long long> homology_normal_form(const LengthVector& L, const EdgeWord& word) {
    if (!word.closed(L))
        throw NotClosed("edge word endpoint differs from its base");
    std::vector<long long> p = word.exponents;
    long long m = *std::min_element(p.begin(), p.end());
    for (long long& x : p) x -= m;
    return p;
}

}  // namespace tonnetz
