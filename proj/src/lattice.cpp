#include "tonnetz/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>

namespace tonnetz {

namespace {

int mod(long long x, int n) {
    long long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long isqrt_floor(long long x) {
    if (x < 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

LatticeVector a_vector(int k, int i) {
    LatticeVector v(k, -1);
    v[i] = k - 1;
    return v;
}

LatticeVector a_subset(int k, const std::vector<int>& subset) {
    LatticeVector v(k, 0);
    for (int i : subset)
        for (int j = 0; j < k; ++j) v[j] += (j == i) ? k - 1 : -1;
    return v;
}

LatticeVector acoords_to_lattice(int k, const ACoords& c) {
    long long s = std::accumulate(c.begin(), c.end(), 0LL);
    LatticeVector x(k);
    for (int i = 0; i < k - 1; ++i) x[i] = k * c[i] - s;
    x[k - 1] = -s;
    return x;
}

ACoords lattice_to_acoords(int k, const LatticeVector& x) {
    ACoords c(k - 1);
    for (int i = 0; i < k - 1; ++i) c[i] = (x[i] - x[k - 1]) / k;
    return c;
}

std::vector<std::vector<long long>> ambient_gram(int k) {
    std::vector<std::vector<long long>> g(k - 1, std::vector<long long>(k - 1, -k));
    for (int i = 0; i < k - 1; ++i) g[i][i] = static_cast<long long>(k) * (k - 1);
    return g;
}

namespace {

/// a-coordinates of a_I for a 0-based subset: e_i summed over i in I with
/// i < k-1, minus the all-ones vector when k-1 is in I.
ACoords a_subset_acoords(int k, const std::vector<int>& subset) {
    ACoords c(k - 1, 0);
    for (int i : subset) {
        if (i < k - 1)
            ++c[i];
        else
            for (long long& x : c) --x;
    }
    return c;
}

}  // namespace

std::vector<ACoords> DeloneCell::vertices(int k) const {
    std::vector<ACoords> out;
    out.push_back(base);
    for (const auto& I : chain) {
        ACoords v = base;
        ACoords step = a_subset_acoords(k, I);
        for (int i = 0; i < k - 1; ++i) v[i] += step[i];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<DeloneCell> delone_star(int k, const ACoords& z) {
    std::vector<DeloneCell> cells;
    std::vector<int> pi(k);
    std::iota(pi.begin(), pi.end(), 0);
    do {
        DeloneCell cell;
        cell.base = z;
        std::vector<int> I;
        for (int j = 0; j + 1 < k; ++j) {
            I.push_back(pi[j]);
            std::vector<int> sorted = I;
            std::sort(sorted.begin(), sorted.end());
            cell.chain.push_back(std::move(sorted));
        }
        cells.push_back(std::move(cell));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return cells;
}

std::string SubLattice::to_text() const {
    std::ostringstream os;
    os << "lattice " << k << ' ' << index;
    for (const auto& row : hnf)
        for (long long h : row) os << ' ' << h;
    os << '\n';
    return os.str();
}

SubLattice hermite_normal_form(int k, const std::vector<ACoords>& generators) {
    const int R = k - 1;
    // Work on columns.
    std::vector<std::vector<long long>> cols;
    for (const auto& g : generators) cols.push_back(g);

    for (int i = 0; i < R; ++i) {
        // Euclid across columns i.. on row i.
        while (true) {
            int best = -1;
            for (std::size_t j = i; j < cols.size(); ++j)
                if (cols[j][i] != 0 &&
                    (best < 0 || std::abs(cols[j][i]) < std::abs(cols[best][i])))
                    best = static_cast<int>(j);
            if (best < 0)
                throw TonnetzError("rank deficient", "generators do not span rank k-1");
            std::swap(cols[i], cols[best]);
            bool done = true;
            for (std::size_t j = i + 1; j < cols.size(); ++j) {
                if (cols[j][i] == 0) continue;
                long long q = cols[j][i] / cols[i][i];
                for (int r = 0; r < R; ++r) cols[j][r] -= q * cols[i][r];
                if (cols[j][i] != 0) done = false;
            }
            if (done) break;
        }
        if (cols[i][i] < 0)
            for (int r = 0; r < R; ++r) cols[i][r] = -cols[i][r];
    }
    cols.resize(R);

    // Reduce off-diagonal entries: 0 <= h[i][j] < h[i][i] for j < i.
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < i; ++j) {
            long long q = floor_div(cols[j][i], cols[i][i]);
            if (q != 0)
                for (int r = 0; r < R; ++r) cols[j][r] -= q * cols[i][r];
        }

    SubLattice sub;
    sub.k = k;
    sub.hnf.assign(R, std::vector<long long>(R, 0));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < R; ++j) sub.hnf[i][j] = cols[j][i];
    sub.index = 1;
    for (int i = 0; i < R; ++i) sub.index *= sub.hnf[i][i];
    return sub;
}

ACoords reduce_mod(const SubLattice& sub, ACoords v) {
    const int R = sub.k - 1;
    for (int i = 0; i < R; ++i) {
        long long q = floor_div(v[i], sub.hnf[i][i]);
        if (q != 0)
            for (int r = i; r < R; ++r) v[r] -= q * sub.hnf[r][i];
    }
    return v;
}

std::vector<std::vector<long long>> h1_lattice(const LengthVector& L) {
    const int k = L.k();
    // Column operations carrying the identity along: (l_1..l_k) U = (g,0,..,0).
    std::vector<long long> r(L.lengths().begin(), L.lengths().end());
    std::vector<std::vector<long long>> U(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i) U[i][i] = 1;  // U[i] = column i

    while (true) {
        int pivot = -1;
        for (int j = 0; j < k; ++j)
            if (r[j] != 0 && (pivot < 0 || std::abs(r[j]) < std::abs(r[pivot])))
                pivot = j;
        bool done = true;
        for (int j = 0; j < k; ++j) {
            if (j == pivot || r[j] == 0) continue;
            long long q = r[j] / r[pivot];
            r[j] -= q * r[pivot];
            for (int i = 0; i < k; ++i) U[j][i] -= q * U[pivot][i];
            if (r[j] != 0) done = false;
        }
        if (done) {
            std::swap(r[0], r[pivot]);
            std::swap(U[0], U[pivot]);
            break;
        }
    }

    std::vector<std::vector<long long>> kernel(U.begin() + 1, U.end());
    return kernel;
}

SubLattice lambda_L(const LengthVector& L) {
    if (!L.reduced())
        throw NotReduced("gcd of lengths exceeds 1; the sublattice index would change");
    const int k = L.k();

    // Gamma_L generators: the integer kernel of (l_1..l_k) plus n*v where
    // sum v_i l_i = 1 (v exists since L is reduced).
    std::vector<std::vector<long long>> gens = h1_lattice(L);
    {
        std::vector<long long> r(L.lengths().begin(), L.lengths().end());
        // Recover v by the same sweep, keeping the first column this time.
        std::vector<std::vector<long long>> U(k, std::vector<long long>(k, 0));
        for (int i = 0; i < k; ++i) U[i][i] = 1;
        while (true) {
            int pivot = -1;
            for (int j = 0; j < k; ++j)
                if (r[j] != 0 && (pivot < 0 || std::abs(r[j]) < std::abs(r[pivot])))
                    pivot = j;
            bool done = true;
            for (int j = 0; j < k; ++j) {
                if (j == pivot || r[j] == 0) continue;
                long long q = r[j] / r[pivot];
                r[j] -= q * r[pivot];
                for (int i = 0; i < k; ++i) U[j][i] -= q * U[pivot][i];
                if (r[j] != 0) done = false;
            }
            if (done) {
                std::vector<long long> v = U[pivot];
                if (r[pivot] < 0)
                    for (long long& x : v) x = -x;
                for (long long& x : v) x *= L.n();
                gens.push_back(std::move(v));
                break;
            }
        }
    }

    // Map p -> sum p_i a_i, expressed in a-coordinates: c_i = p_i - p_k.
    std::vector<ACoords> acoord_gens;
    for (const auto& p : gens) {
        ACoords c(k - 1);
        for (int i = 0; i < k - 1; ++i) c[i] = p[i] - p[k - 1];
        acoord_gens.push_back(std::move(c));
    }
    return hermite_normal_form(k, acoord_gens);
}

QuotientComplex quotient_complex(const LengthVector& L) {
    const int k = L.k();
    const int n = L.n();
    QuotientComplex Q;
    Q.L = L;
    Q.sublattice = lambda_L(L);

    auto label_of = [&](const ACoords& c) {
        long long s = 0;
        for (int i = 0; i < k - 1; ++i) s += c[i] * L.length(i);
        return mod(s, n);
    };

    // BFS over residues by atomic steps +-a_i.
    std::vector<ACoords> steps;
    for (int i = 0; i < k; ++i) {
        ACoords s = a_subset_acoords(k, {i});
        steps.push_back(s);
        for (long long& x : s) x = -x;
        steps.push_back(std::move(s));
    }
    std::queue<ACoords> frontier;
    ACoords origin = reduce_mod(Q.sublattice, ACoords(k - 1, 0));
    frontier.push(origin);
    std::set<ACoords> residues{origin};
    while (!frontier.empty()) {
        ACoords z = frontier.front();
        frontier.pop();
        for (const auto& s : steps) {
            ACoords w = z;
            for (int i = 0; i < k - 1; ++i) w[i] += s[i];
            w = reduce_mod(Q.sublattice, std::move(w));
            if (residues.insert(w).second) frontier.push(w);
        }
    }
    if (static_cast<long long>(residues.size()) != Q.sublattice.index)
        throw LabelCollision("residue count differs from the sublattice index");

    std::set<int> seen_labels;
    for (const ACoords& z : residues) {
        int lbl = label_of(z);
        if (!seen_labels.insert(lbl).second)
            throw LabelCollision("two cosets share the label " + std::to_string(lbl));
        Q.labels[z] = lbl;
    }
    if (static_cast<int>(seen_labels.size()) != n)
        throw LabelCollision("label map is not onto Z_n");

    for (const ACoords& z : residues) {
        for (const DeloneCell& cell : delone_star(k, z)) {
            Simplex f;
            for (const ACoords& v : cell.vertices(k)) f.push_back(label_of(v));
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw LabelCollision("a Delone cell collapsed under the label map");
            Q.facets.insert(std::move(f));
        }
    }
    return Q;
}

bool verify_main_theorem(const LengthVector& L) {
    QuotientComplex Q = quotient_complex(L);
    TonnetzComplex T = TonnetzComplex::build(L);
    return Q.facets == T.facets();
}

namespace {

long long det_recursive(const std::vector<std::vector<long long>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    long long det = 0;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j)
                if (j != c) minor[i - 1][jj++] = m[i][j];
        }
        det += sign * m[0][c] * det_recursive(minor);
        sign = -sign;
    }
    return det;
}

long long adjugate_diag(const std::vector<std::vector<long long>>& m, int s) {
    int n = static_cast<int>(m.size());
    if (n == 1) return 1;
    std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
    int ii = 0;
    for (int i = 0; i < n; ++i) {
        if (i == s) continue;
        int jj = 0;
        for (int j = 0; j < n; ++j)
            if (j != s) minor[ii][jj++] = m[i][j];
        ++ii;
    }
    return det_recursive(minor);
}

}  // namespace

ShortestVectorResult shortest_vector(const SubLattice& sub) {
    const int k = sub.k;
    const int R = k - 1;
    auto G = ambient_gram(k);

    // Q = B^T G B in the HNF basis.
    std::vector<std::vector<long long>> Q(R, std::vector<long long>(R, 0));
    for (int s = 0; s < R; ++s)
        for (int t = 0; t < R; ++t)
            for (int i = 0; i < R; ++i)
                for (int j = 0; j < R; ++j)
                    Q[s][t] += sub.hnf[i][s] * G[i][j] * sub.hnf[j][t];

    long long radius_sq = Q[0][0];
    for (int s = 1; s < R; ++s) radius_sq = std::min(radius_sq, Q[s][s]);
    long long det = det_recursive(Q);

    // Ellipsoid bound: |w_s|^2 <= radius_sq * (Q^{-1})_ss = radius_sq * adj_ss / det.
    std::vector<long long> bound(R);
    for (int s = 0; s < R; ++s)
        bound[s] = isqrt_floor(radius_sq * adjugate_diag(Q, s) / det) + 1;

    ShortestVectorResult best;
    best.min_sq = 0;
    std::vector<long long> w(R, 0);
    std::function<void(int)> enumerate = [&](int pos) {
        if (pos == R) {
            bool zero = std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; });
            if (zero) return;
            long long q = 0;
            for (int s = 0; s < R; ++s)
                for (int t = 0; t < R; ++t) q += w[s] * Q[s][t] * w[t];
            if (best.witness.empty() || q < best.min_sq) {
                best.min_sq = q;
                best.witness.assign(R, 0);
                for (int i = 0; i < R; ++i)
                    for (int s = 0; s < R; ++s) best.witness[i] += sub.hnf[i][s] * w[s];
            }
            return;
        }
        for (long long x = -bound[pos]; x <= bound[pos]; ++x) {
            w[pos] = x;
            enumerate(pos + 1);
        }
        w[pos] = 0;
    };
    enumerate(0);

    long long denom = static_cast<long long>(k) * (k - 1);
    long long g = std::gcd(best.min_sq, denom);
    best.normalized_sq = {best.min_sq / g, denom / g};
    return best;
}

std::string DelonePatch::to_text() const {
    std::ostringstream os;
    os << "tonnetz irrational " << k << ' ' << radius << '\n';
    std::set<std::string> lines;
    for (const Simplex& f : facets) {
        std::vector<std::string> names;
        for (int id : f) {
            std::string name;
            for (std::size_t i = 0; i < labels[id].size(); ++i)
                name += (i ? "," : "") + std::to_string(labels[id][i]);
            names.push_back(std::move(name));
        }
        std::sort(names.begin(), names.end());
        std::string line;
        for (std::size_t i = 0; i < names.size(); ++i) line += (i ? " " : "") + names[i];
        lines.insert(std::move(line));
    }
    for (const auto& l : lines) os << l << '\n';
    return os.str();
}

DelonePatch irrational_patch(int k, int radius) {
    if (k < 2) throw TonnetzError("bad k", "irrational patch needs k >= 2");
    DelonePatch P;
    P.k = k;
    P.radius = radius;

    // Edge neighbors of a lattice point: z + a_I over proper nonempty I.
    std::vector<ACoords> steps;
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        std::vector<int> I;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) I.push_back(i);
        steps.push_back(a_subset_acoords(k, I));
    }

    std::map<ACoords, int> dist;
    ACoords origin(k - 1, 0);
    dist[origin] = 0;
    std::queue<ACoords> q;
    q.push(origin);
    while (!q.empty()) {
        ACoords z = q.front();
        q.pop();
        int d = dist[z];
        if (d == radius) continue;
        for (const auto& s : steps) {
            ACoords w = z;
            for (int i = 0; i < k - 1; ++i) w[i] += s[i];
            if (dist.emplace(w, d + 1).second) q.push(w);
        }
    }

    for (const auto& [z, d] : dist) {
        int id = static_cast<int>(P.vertices.size());
        P.vertex_ids[z] = id;
        P.vertices.push_back(z);
        // Canonical exponent vector: p = (c, 0) shifted so min p_i = 0.
        std::vector<long long> p(z.begin(), z.end());
        p.push_back(0);
        long long m = *std::min_element(p.begin(), p.end());
        for (long long& x : p) x -= m;
        P.labels.push_back(std::move(p));
    }

    for (const auto& [z, d] : dist) {
        for (const DeloneCell& cell : delone_star(k, z)) {
            Simplex f;
            bool inside = true;
            for (const ACoords& v : cell.vertices(k)) {
                auto it = P.vertex_ids.find(v);
                if (it == P.vertex_ids.end()) {
                    inside = false;
                    break;
                }
                f.push_back(it->second);
            }
            if (!inside) continue;
            std::sort(f.begin(), f.end());
            P.facets.insert(std::move(f));
        }
    }
    return P;
}

}  // namespace tonnetz
