#include "tonnetz/topology.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <thread>

namespace tonnetz {

namespace {

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

int thread_budget() {
    if (const char* env = std::getenv("TONNETZ_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
    int threads = std::min(thread_budget(), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<std::set<Simplex>> LinkComplex::closure() const {
    std::size_t top = 0;
    for (const Simplex& f : facets) top = std::max(top, f.size());
    std::vector<std::set<Simplex>> faces(top);
    for (const Simplex& f : facets) {
        int t = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << t); ++mask) {
            Simplex s;
            for (int i = 0; i < t; ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            faces[s.size() - 1].insert(std::move(s));
        }
    }
    return faces;
}

LinkComplex link(const TonnetzComplex& T, const Simplex& tau) {
    if (!T.contains(tau))
        throw FaceNotInComplex("link base face is not in the complex");
    LinkComplex lk;
    lk.base = tau;
    for (const Simplex& f : T.facets()) {
        if (!std::includes(f.begin(), f.end(), tau.begin(), tau.end())) continue;
        Simplex rest;
        std::set_difference(f.begin(), f.end(), tau.begin(), tau.end(),
                            std::back_inserter(rest));
        if (!rest.empty()) lk.facets.insert(std::move(rest));
    }
    return lk;
}

std::vector<int> link_join_profile(const TonnetzComplex& T, const Simplex& tau) {
    if (!T.contains(tau))
        throw FaceNotInComplex("face is not in the complex");
    const LengthVector& L = T.lengths();
    auto sums = L.all_subset_sums();
    std::map<long long, int> popcount_by_sum;
    for (std::size_t mask = 0; mask < sums.size(); ++mask)
        popcount_by_sum[sums[mask]] = std::popcount(mask);

    int t = static_cast<int>(tau.size());
    std::vector<int> sizes;
    sizes.reserve(t);
    for (int i = 0; i < t; ++i) {
        int gap = tau[(i + 1) % t] - tau[i];
        if (gap <= 0) gap += L.n();
        if (t == 1) gap = L.n();  // single vertex: the whole circle
        auto it = popcount_by_sum.find(gap);
        if (it == popcount_by_sum.end())
            throw NoType("gap length is not a subset sum");
        sizes.push_back(it->second);
    }
    return sizes;
}

std::vector<std::vector<int>> connected_components(const TonnetzComplex& T) {
    int n = T.n();
    std::vector<std::vector<int>> adj(n);
    for (const Simplex& e : T.faces(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (comp[v] == -1) {
                    comp[v] = c;
                    q.push(v);
                }
        }
        ++c;
    }
    std::vector<std::vector<int>> out(c);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

namespace {

bool simplices_connected(const std::vector<std::set<Simplex>>& closure) {
    // Connectivity of the 1-skeleton.
    if (closure.empty() || closure[0].empty()) return false;
    std::map<int, std::vector<int>> adj;
    for (const Simplex& v : closure[0]) adj[v[0]];
    if (closure.size() > 1)
        for (const Simplex& e : closure[1]) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
    std::set<int> seen;
    std::queue<int> q;
    q.push(adj.begin()->first);
    seen.insert(adj.begin()->first);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (seen.insert(v).second) q.push(v);
    }
    return seen.size() == adj.size();
}

/// Checks one vertex link; appends failure descriptions.
void check_vertex_link(const TonnetzComplex& T, int v, std::vector<std::string>& failures,
                       bool& sphere_ok) {
    int k = T.k();
    std::ostringstream where;
    where << "vertex " << v << ": ";
    LinkComplex lk = link(T, Simplex{v});

    if (static_cast<long long>(lk.facets.size()) != factorial(k)) {
        failures.push_back(where.str() + "link has " + std::to_string(lk.facets.size()) +
                           " facets, expected k! = " + std::to_string(factorial(k)));
        sphere_ok = false;
        return;
    }
    for (const Simplex& f : lk.facets)
        if (static_cast<int>(f.size()) != k - 1) {
            failures.push_back(where.str() + "link facet of wrong dimension");
            sphere_ok = false;
            return;
        }

    if (k == 2) {
        sphere_ok = lk.facets.size() == 2;  // S^0
        if (!sphere_ok) failures.push_back(where.str() + "link is not two points");
        return;
    }

    auto closure = lk.closure();
    // Closed pseudomanifold: every ridge of the link in exactly 2 facets.
    std::map<Simplex, int> ridge_count;
    for (const Simplex& f : lk.facets)
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Simplex r;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != drop) r.push_back(f[i]);
            ++ridge_count[r];
        }
    for (const auto& [r, c] : ridge_count)
        if (c != 2) {
            failures.push_back(where.str() + "link ridge in " + std::to_string(c) +
                               " facets, expected 2");
            sphere_ok = false;
            return;
        }

    if (!simplices_connected(closure)) {
        failures.push_back(where.str() + "link is disconnected");
        sphere_ok = false;
        return;
    }

    long long chi = 0;
    int sign = 1;
    for (const auto& fd : closure) {
        chi += sign * static_cast<long long>(fd.size());
        sign = -sign;
    }
    long long chi_sphere = 1 + ((k % 2 == 0) ? 1 : -1);  // chi(S^{k-2})
    if (chi != chi_sphere) {
        failures.push_back(where.str() + "link chi = " + std::to_string(chi) + ", expected " +
                           std::to_string(chi_sphere));
        sphere_ok = false;
        return;
    }

    if (k == 3) {
        // Single cycle: |edges| = |vertices| and every vertex of degree 2
        // (degree 2 already follows from the ridge count above).
        if (closure[0].size() != closure[1].size()) {
            failures.push_back(where.str() + "link is not a single cycle");
            sphere_ok = false;
        }
    } else if (k == 4) {
        // chi = 2, connected, every edge in exactly two triangles: S^2.
        // All three already hold here.
    } else {
        sphere_ok = false;  // necessary conditions only
    }
}

}  // namespace

std::string ManifoldReport::to_text() const {
    std::ostringstream os;
    os << "manifold.pass " << (pass ? "true" : "false") << '\n'
       << "manifold.connected " << (connected ? "true" : "false") << '\n'
       << "manifold.sphere_certified " << (sphere_certified ? "true" : "false") << '\n'
       << "manifold.vertices_checked " << vertices_checked << '\n';
    for (const auto& f : failures) os << "manifold.failure " << f << '\n';
    return os.str();
}

ManifoldReport verify_manifold(const TonnetzComplex& T) {
    ManifoldReport rep;
    rep.vertices_checked = T.n();
    rep.connected = connected_components(T).size() == 1;

    std::vector<std::vector<std::string>> failures(T.n());
    std::vector<char> sphere_flags(T.n(), 1);
    parallel_for(T.n(), [&](int v) {
        bool sphere_ok = true;
        check_vertex_link(T, v, failures[v], sphere_ok);
        sphere_flags[v] = sphere_ok ? 1 : 0;
    });
    bool sphere_all = true;
    for (int v = 0; v < T.n(); ++v) {
        for (auto& f : failures[v]) rep.failures.push_back(std::move(f));
        sphere_all = sphere_all && sphere_flags[v];
    }
    rep.pass = rep.failures.empty();
    rep.sphere_certified = rep.pass && sphere_all && T.k() <= 4;
    return rep;
}

}  // namespace tonnetz
