#include "tonnetz/homology.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tonnetz {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

// In-place Smith diagonalization. Returns the invariant factors (positive,
// divisibility-ordered). Pivot choice: smallest nonzero magnitude in the
// remaining submatrix.
std::vector<BigInt> smith(BigMatrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<BigInt> diag;

    for (int t = 0; t < std::min(rows, cols); ++t) {
        // Locate the smallest nonzero pivot.
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                BigInt a = abs(m[i][j]);
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        std::swap(m[t], m[pi]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q = m[i][t] / m[t][t];
                for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder becomes the new, smaller pivot
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = m[t][j] / m[t][t];
                for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // Pivot must divide the rest of the submatrix.
                for (int i = t + 1; i < rows && clean; ++i)
                    for (int j = t + 1; j < cols && clean; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                            clean = false;
                        }
            }
        }
        diag.push_back(abs(m[t][t]));
    }
    return diag;
}

}  // namespace

std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> in) {
    BigMatrix m(in.size());
    for (std::size_t i = 0; i < in.size(); ++i)
        m[i].assign(in[i].begin(), in[i].end());
    std::vector<long long> out;
    for (const BigInt& d : smith(m)) out.push_back(d.convert_to<long long>());
    return out;
}

std::string HomologyProfile::to_text() const {
    std::ostringstream os;
    os << "homology.betti";
    for (long long b : betti) os << ' ' << b;
    os << '\n';
    for (std::size_t d = 0; d < torsion.size(); ++d) {
        if (torsion[d].empty()) continue;
        os << "homology.torsion[" << d << "]";
        for (long long t : torsion[d]) os << ' ' << t;
        os << '\n';
    }
    return os.str();
}

HomologyProfile simplicial_homology(const std::vector<std::set<Simplex>>& faces) {
    int top = static_cast<int>(faces.size());
    while (top > 0 && faces[top - 1].empty()) --top;

    std::vector<long long> fcount(top);
    std::vector<std::map<Simplex, int>> index(top);
    for (int d = 0; d < top; ++d) {
        fcount[d] = static_cast<long long>(faces[d].size());
        int id = 0;
        for (const Simplex& s : faces[d]) index[d][s] = id++;
    }

    // invariant factors of boundary_d : C_d -> C_{d-1}, d = 1..top-1
    std::vector<std::vector<BigInt>> factors(top);
    for (int d = 1; d < top; ++d) {
        BigMatrix B(fcount[d - 1], std::vector<BigInt>(fcount[d], 0));
        for (const auto& [s, col] : index[d]) {
            int sign = 1;
            for (std::size_t drop = 0; drop <= static_cast<std::size_t>(d); ++drop) {
                Simplex face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                B[index[d - 1].at(face)][col] = sign;
                sign = -sign;
            }
        }
        factors[d] = smith(B);
    }

    auto rank = [&](int d) -> long long {
        if (d < 1 || d >= top) return 0;
        long long r = 0;
        for (const BigInt& f : factors[d])
            if (f != 0) ++r;
        return r;
    };

    HomologyProfile h;
    h.betti.resize(top);
    h.torsion.resize(top);
    for (int d = 0; d < top; ++d) {
        h.betti[d] = fcount[d] - rank(d) - rank(d + 1);
        if (d + 1 < top)
            for (const BigInt& f : factors[d + 1])
                if (f > 1) h.torsion[d].push_back(f.convert_to<long long>());
    }
    return h;
}

HomologyProfile simplicial_homology(const TonnetzComplex& T) {
    std::vector<std::set<Simplex>> faces;
    for (int d = 0; d < T.k(); ++d) faces.push_back(T.faces(d));
    return simplicial_homology(faces);
}

}  // namespace tonnetz
