#pragma once

// Brute-force references for the tests. Nothing here calls into the
// library: vertices are rebuilt from base-q digits, distances come from BFS
// over an explicit adjacency matrix, and resolving is decided by comparing
// distance tuples in a std::set.

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

namespace oracle {

struct Graph {
    std::uint32_t n = 0;                        // vertex count
    std::vector<std::vector<bool>> adj;         // 0-based
    std::vector<std::vector<std::uint32_t>> d;  // BFS distances, 0-based
};

inline std::vector<std::uint32_t> digits(std::uint64_t id, std::uint32_t q, std::uint32_t n) {
    std::vector<std::uint32_t> out(n);
    for (std::uint32_t i = 0; i < n; ++i, id /= q) out[i] = static_cast<std::uint32_t>(id % q);
    return out;
}

inline void fill_bfs(Graph& g) {
    g.d.assign(g.n, std::vector<std::uint32_t>(g.n, UINT32_MAX));
    for (std::uint32_t s = 0; s < g.n; ++s) {
        g.d[s][s] = 0;
        std::deque<std::uint32_t> queue{s};
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (std::uint32_t v = 0; v < g.n; ++v)
                if (g.adj[u][v] && g.d[s][v] == UINT32_MAX) {
                    g.d[s][v] = g.d[s][u] + 1;
                    queue.push_back(v);
                }
        }
    }
}

// Γ(F_q^n): vertex id i (1-based) has base-q digits of i as coefficients.
inline Graph component_graph(std::uint32_t q, std::uint32_t n) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n; ++i) total *= q;
    Graph g;
    g.n = static_cast<std::uint32_t>(total - 1);
    std::vector<std::vector<std::uint32_t>> coeffs;
    for (std::uint32_t id = 1; id <= g.n; ++id) coeffs.push_back(digits(id, q, n));
    g.adj.assign(g.n, std::vector<bool>(g.n, false));
    for (std::uint32_t a = 0; a < g.n; ++a)
        for (std::uint32_t b = 0; b < g.n; ++b) {
            if (a == b) continue;
            for (std::uint32_t i = 0; i < n; ++i)
                if (coeffs[a][i] != 0 && coeffs[b][i] != 0) g.adj[a][b] = true;
        }
    fill_bfs(g);
    return g;
}

inline std::uint64_t edge_count(const Graph& g) {
    std::uint64_t e = 0;
    for (std::uint32_t a = 0; a < g.n; ++a)
        for (std::uint32_t b = a + 1; b < g.n; ++b) e += g.adj[a][b];
    return e;
}

// W holds 1-based ids.
inline bool resolves(const Graph& g, const std::vector<std::uint32_t>& w) {
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint32_t v = 0; v < g.n; ++v) {
        std::vector<std::uint32_t> rep;
        for (auto x : w) rep.push_back(g.d[v][x - 1]);
        if (!seen.insert(rep).second) return false;
    }
    return true;
}

// Smallest k with a resolving k-subset, by plain subset enumeration over
// bitmasks (no pruning). Only for tiny graphs.
inline std::uint32_t metric_dimension(const Graph& g) {
    std::uint32_t best = g.n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.n); ++mask) {
        const auto k = static_cast<std::uint32_t>(__builtin_popcountll(mask));
        if (k >= best) continue;
        std::vector<std::uint32_t> w;
        for (std::uint32_t i = 0; i < g.n; ++i)
            if (mask >> i & 1) w.push_back(i + 1);
        if (resolves(g, w)) best = k;
    }
    return best;
}

// Twin classes from explicit neighborhood sets: u ~ v iff N(u) = N(v) or
// N[u] = N[v]. Classes as sorted 1-based id lists, ordered by first member.
inline std::vector<std::vector<std::uint32_t>> twin_classes(const Graph& g) {
    auto open = [&](std::uint32_t u) {
        std::set<std::uint32_t> s;
        for (std::uint32_t v = 0; v < g.n; ++v)
            if (g.adj[u][v]) s.insert(v);
        return s;
    };
    std::vector<int> cls(g.n, -1);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t u = 0; u < g.n; ++u) {
        if (cls[u] >= 0) continue;
        cls[u] = static_cast<int>(out.size());
        out.push_back({u + 1});
        const auto nu = open(u);
        auto cu = nu;
        cu.insert(u);
        for (std::uint32_t v = u + 1; v < g.n; ++v) {
            if (cls[v] >= 0) continue;
            const auto nv = open(v);
            auto cv = nv;
            cv.insert(v);
            if (nu == nv || cu == cv) {
                cls[v] = cls[u];
                out.back().push_back(v + 1);
            }
        }
    }
    return out;
}

}  // namespace oracle
