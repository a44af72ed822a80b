#include "tonnetz/complex.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

namespace tonnetz {

namespace {

int mod(long long x, int n) {
    long long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

Simplex make_simplex(std::vector<int> vertices, int n) {
    for (int& v : vertices) v = mod(v, n);
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

Simplex facet(const LengthVector& L, int x, const std::vector<int>& sigma) {
    std::vector<int> verts;
    verts.reserve(L.k());
    long long acc = x;
    verts.push_back(mod(acc, L.n()));
    for (int j = 0; j + 1 < L.k(); ++j) {
        acc += L.length(sigma[j]);
        verts.push_back(mod(acc, L.n()));
    }
    return make_simplex(std::move(verts), L.n());
}

std::vector<std::vector<int>> ordered_partitions(int k, int m) {
    // Every surjection {0..k-1} -> {0..m-1}; blocks are preimages.
    std::vector<std::vector<int>> out;
    std::vector<int> assign(k, 0);
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= m;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        unsigned used = 0;
        for (int i = 0; i < k; ++i) {
            assign[i] = static_cast<int>(c % m);
            used |= 1u << assign[i];
            c /= m;
        }
        if (used == (1u << m) - 1) out.push_back(assign);
    }
    return out;
}

std::vector<long long> stirling_f_vector(int n, int k) {
    // S(k,m) table by the recurrence, exact integers.
    std::vector<std::vector<long long>> S(k + 1, std::vector<long long>(k + 1, 0));
    S[0][0] = 1;
    for (int kk = 1; kk <= k; ++kk)
        for (int m = 1; m <= kk; ++m)
            S[kk][m] = m * S[kk - 1][m] + S[kk - 1][m - 1];
    std::vector<long long> f(k);
    long long fact = 1;  // (m-1)!
    for (int m = 1; m <= k; ++m) {
        f[m - 1] = n * fact * S[k][m];
        fact *= m;
    }
    return f;
}

TonnetzComplex TonnetzComplex::build(const LengthVector& L, bool permissive) {
    if (!L.generic() && !permissive)
        throw NotGeneric("length vector has a repeated subset sum; pass permissive to build anyway");

    TonnetzComplex T;
    T.L_ = L;
    T.permissive_ = permissive && !L.generic();

    std::vector<int> sigma(L.k());
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        for (int x = 0; x < L.n(); ++x)
            T.facets_.insert(facet(L, x, sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    T.face_index_.resize(L.k());
    if (L.generic()) {
        // Faces from (anchor, ordered partition) pairs; closure is the
        // oracle checked in tests.
        for (int m = 1; m <= L.k(); ++m) {
            auto parts = ordered_partitions(L.k(), m);
            for (const auto& assign : parts) {
                std::vector<long long> block_sum(m, 0);
                for (int i = 0; i < L.k(); ++i) block_sum[assign[i]] += L.length(i);
                for (int x = 0; x < L.n(); ++x) {
                    std::vector<int> verts;
                    verts.reserve(m);
                    long long acc = x;
                    verts.push_back(mod(acc, L.n()));
                    for (int j = 0; j + 1 < m; ++j) {
                        acc += block_sum[j];
                        verts.push_back(mod(acc, L.n()));
                    }
                    T.face_index_[m - 1].insert(make_simplex(std::move(verts), L.n()));
                }
            }
        }
    } else {
        // Non-generic partitions can collapse vertices; fall back to the
        // downward closure of the facet set.
        for (const Simplex& f : T.facets_) {
            int t = static_cast<int>(f.size());
            for (unsigned mask = 1; mask < (1u << t); ++mask) {
                Simplex s;
                for (int i = 0; i < t; ++i)
                    if (mask & (1u << i)) s.push_back(f[i]);
                T.face_index_[s.size() - 1].insert(std::move(s));
            }
        }
    }
    return T;
}

const std::set<Simplex>& TonnetzComplex::faces(int d) const {
    if (d < 0 || d >= L_.k())
        throw TonnetzError("bad dimension", "face dimension out of range");
    return face_index_[d];
}

std::vector<long long> TonnetzComplex::f_vector() const {
    std::vector<long long> f(L_.k());
    for (int d = 0; d < L_.k(); ++d) f[d] = static_cast<long long>(face_index_[d].size());
    return f;
}

long long TonnetzComplex::euler_characteristic() const {
    long long chi = 0;
    int sign = 1;
    for (long long fd : f_vector()) {
        chi += sign * fd;
        sign = -sign;
    }
    return chi;
}

bool TonnetzComplex::contains(const Simplex& s) const {
    if (s.empty() || static_cast<int>(s.size()) > L_.k()) return false;
    return face_index_[s.size() - 1].count(s) > 0;
}

std::vector<ScaledComponent> components_of_scaled(const LengthVector& pL) {
    int p = 0;
    for (int l : pL.lengths()) p = std::gcd(p, l);
    std::vector<int> reduced_lengths;
    for (int l : pL.lengths()) reduced_lengths.push_back(l / p);

    TonnetzComplex T = TonnetzComplex::build(pL);
    std::vector<ScaledComponent> out(p);
    for (int j = 0; j < p; ++j) out[j].coset = j;
    for (const Simplex& f : T.facets()) {
        int j = f[0] % p;  // all vertices of a facet share the residue mod p
        out[j].ambient_facets.insert(f);
        Simplex r;
        for (int v : f) r.push_back((v - j) / p);
        std::sort(r.begin(), r.end());
        out[j].reduced_facets.insert(std::move(r));
    }
    return out;
}

std::string to_text(const LengthVector& L, const std::set<Simplex>& facets,
                    const std::string& header_tag) {
    std::ostringstream os;
    os << "tonnetz";
    if (!header_tag.empty()) os << ' ' << header_tag;
    os << ' ' << L.n() << ' ' << L.k();
    for (int l : L.lengths()) os << ' ' << l;
    os << '\n';
    // std::set<Simplex> already iterates in lexicographic vertex order.
    for (const Simplex& f : facets) {
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << '\n';
    }
    return os.str();
}

ParsedComplex from_text(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw TonnetzError("bad format", "empty complex file");
    std::istringstream hs(line);
    std::string magic;
    hs >> magic;
    if (magic != "tonnetz")
        throw TonnetzError("bad format", "missing tonnetz header");
    std::string tag;
    hs >> tag;
    int n, k;
    if (tag == "quotient" || tag == "irrational") {
        hs >> n >> k;
    } else {
        n = std::stoi(tag);
        tag.clear();
        hs >> k;
    }
    std::vector<int> lengths(k);
    for (int& l : lengths) hs >> l;
    ParsedComplex pc;
    pc.header_tag = tag;
    pc.L = LengthVector::validate(n, k, lengths);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Simplex f;
        int v;
        while (ls >> v) f.push_back(v);
        pc.facets.insert(std::move(f));
    }
    return pc;
}

}  // namespace tonnetz
