// graphs.hpp — graph families for the clique-plus-cluster constructions,
// twin-vertex cluster detection, shape recognition, and matrix patterns.
// Vertices are 1-indexed everywhere, matching the file formats.
#pragma once

#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "iepg/core.hpp"

namespace iepg {

class GraphSpec {
public:
    explicit GraphSpec(int n, std::set<std::pair<int, int>> edges = {})
        : n_(n), edges_(std::move(edges)) {
        if (n < 0) throw InvalidArgument("vertex count must be nonnegative");
        for (const auto& [i, j] : edges_) {
            if (i < 1 || j < 1 || i > n_ || j > n_)
                throw InvalidArgument("edge endpoint outside 1.." + std::to_string(n_));
            if (i >= j) throw InvalidArgument("edges must be stored with i < j and no self-loops");
        }
    }

    int n() const { return n_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    void add_edge(int i, int j) {
        if (i == j) throw InvalidArgument("self-loops are not allowed");
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n_) throw InvalidArgument("edge endpoint outside 1.." + std::to_string(n_));
        edges_.insert({i, j});
    }

    bool adjacent(int i, int j) const {
        if (i > j) std::swap(i, j);
        return edges_.count({i, j}) > 0;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 1; u <= n_; ++u)
            if (u != v && adjacent(u, v)) out.push_back(u);
        return out;
    }

    bool connected() const {
        if (n_ <= 1) return true;
        std::vector<char> seen(n_ + 1, 0);
        std::queue<int> q;
        q.push(1);
        seen[1] = 1;
        int reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    q.push(u);
                }
        }
        return reached == n_;
    }

    bool operator==(const GraphSpec& rhs) const { return n_ == rhs.n_ && edges_ == rhs.edges_; }

private:
    int n_;
    std::set<std::pair<int, int>> edges_;
};

inline GraphSpec build_complete(int n) {
    if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
    GraphSpec g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

// K_n with the canonical edge {1,2} removed.
inline GraphSpec build_kn_minus_edge(int n) {
    if (n < 2) throw InvalidArgument("K_n minus an edge needs n >= 2");
    GraphSpec g = build_complete(n);
    std::set<std::pair<int, int>> e = g.edges();
    e.erase({1, 2});
    return GraphSpec(n, std::move(e));
}

namespace detail {

// Canonical layout shared by the clique-cluster family and the join family:
// cluster = 1..n-k, clique = n-k+1..n, S = n-k+1..n-k+r.
inline GraphSpec clique_cluster_edges(int n, int k, int r, bool cluster_is_clique) {
    GraphSpec g(n);
    const int c = n - k;
    for (int i = c + 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    for (int v = 1; v <= c; ++v)
        for (int s = c + 1; s <= c + r; ++s) g.add_edge(v, s);
    if (cluster_is_clique)
        for (int v = 1; v <= c; ++v)
            for (int w = v + 1; w <= c; ++w) g.add_edge(v, w);
    return g;
}

}  // namespace detail

inline GraphSpec build_clique_cluster(int n, int k, int r, bool cluster_is_clique) {
    if (n - k < 2) throw InvalidArgument("cluster needs at least 2 vertices (n - k >= 2)");
    if (r < 2 || r > k) throw InvalidArgument("attachment size must satisfy 2 <= r <= k");
    return detail::clique_cluster_edges(n, k, r, cluster_is_clique);
}

// K_i joined to (K_j union K_{n-i-j}), labeled K_j first, then K_i, then the
// rest; identical to the clique-cluster layout with k = n-j, r = i and a
// complete cluster.
inline GraphSpec build_join_family(int n, int i, int j) {
    if (j < 1 || j > n - 2) throw InvalidArgument("join family needs 1 <= j <= n-2");
    if (i < 1 || i > n - j - 1) throw InvalidArgument("join family needs 1 <= i <= n-j-1");
    return detail::clique_cluster_edges(n, n - j, i, true);
}

struct Cluster {
    std::vector<int> c;  // independent vertices sharing the neighborhood
    std::vector<int> s;  // the shared neighborhood
};

// Groups vertices by identical open neighborhoods (false twins). Every group
// of size >= 2 is a cluster (C, S); equal open neighborhoods force pairwise
// nonadjacency, and maximality follows from the grouping itself.
inline std::vector<Cluster> detect_clusters(const GraphSpec& g) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 1; v <= g.n(); ++v) groups[g.neighbors(v)].push_back(v);
    std::vector<Cluster> out;
    for (auto& [nbhd, members] : groups)
        if (members.size() >= 2) out.push_back({members, nbhd});
    std::sort(out.begin(), out.end(),
              [](const Cluster& a, const Cluster& b) { return a.c.front() < b.c.front(); });
    return out;
}

struct CliqueClusterShape {
    int n = 0;
    int k = 0;
    int r = 0;
    std::vector<int> cluster;
    std::vector<int> clique;
    std::vector<int> s;
    bool cluster_is_clique = false;
};

namespace detail {

// Twin classes: open neighborhoods for independent clusters, closed ones for
// clusters that carry a clique. Classes are returned sorted by least member.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>>
twin_classes(const GraphSpec& g, bool closed) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 1; v <= g.n(); ++v) {
        std::vector<int> key = g.neighbors(v);
        if (closed) {
            key.push_back(v);
            std::sort(key.begin(), key.end());
        }
        groups[std::move(key)].push_back(v);
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (auto& [key, members] : groups)
        if (members.size() >= 2) out.push_back({members, key});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
    return out;
}

}  // namespace detail

// Recovers (k, r, cluster_is_clique) from an arbitrary labeling, trying the
// independent-cluster reading first. The cluster candidate is always a whole
// twin class, so the returned decomposition is the maximal one.
inline CliqueClusterShape recognize_shape(const GraphSpec& g) {
    if (g.n() < 4 || !g.connected())
        throw InvalidArgument("shape recognition requires a connected graph on at least 4 vertices");

    for (bool closed : {false, true}) {
        for (const auto& [members, key] : detail::twin_classes(g, closed)) {
            std::vector<int> cluster = members;
            std::vector<int> s = key;
            if (closed) {
                std::vector<int> external;
                std::set_difference(s.begin(), s.end(), cluster.begin(), cluster.end(),
                                    std::back_inserter(external));
                s = std::move(external);
            }
            const int k = g.n() - static_cast<int>(cluster.size());
            const int r = static_cast<int>(s.size());
            if (k < 2 || r < 2 || r > k) continue;

            std::vector<int> clique;
            std::set<int> in_cluster(cluster.begin(), cluster.end());
            for (int v = 1; v <= g.n(); ++v)
                if (!in_cluster.count(v)) clique.push_back(v);

            bool clique_ok = true;
            for (std::size_t a = 0; a < clique.size() && clique_ok; ++a)
                for (std::size_t b = a + 1; b < clique.size(); ++b)
                    if (!g.adjacent(clique[a], clique[b])) { clique_ok = false; break; }
            if (!clique_ok) continue;

            const std::size_t expected = static_cast<std::size_t>(k) * (k - 1) / 2 +
                                         cluster.size() * r +
                                         (closed ? cluster.size() * (cluster.size() - 1) / 2 : 0);
            if (g.edge_count() != expected) continue;

            return CliqueClusterShape{g.n(), k, r, cluster, clique, s, closed};
        }
    }
    throw NotInFamily("graph admits no clique-plus-cluster decomposition");
}

// Off-diagonal support of a symmetric matrix, thresholded at
// zero_tol * max(1, largest |entry|). The diagonal never contributes.
inline GraphSpec pattern_of(const SymMatrix& m, const ToleranceProfile& tol = {}) {
    const double thr = tol.zero_tol * std::max(1.0, m.max_abs());
    GraphSpec g(m.order());
    for (int i = 0; i < m.order(); ++i)
        for (int j = i + 1; j < m.order(); ++j)
            if (std::abs(m(i, j)) > thr) g.add_edge(i + 1, j + 1);
    return g;
}

}  // namespace iepg
