#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace sdpcut {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices [0, n). Immutable after construction.
/// Edges are stored canonically (u < v, sorted) together with a CSR
/// adjacency whose neighbor lists are sorted.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list in any orientation and order.
    /// Throws SelfLoop, DuplicateEdge or VertexOutOfRange.
    Graph(Vertex n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw Error(Errc::InvalidArgument, "negative vertex count");
        for (auto& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                throw Error(Errc::VertexOutOfRange,
                            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") with n=" +
                                std::to_string(n));
            if (e.u == e.v) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw Error(Errc::DuplicateEdge,
                        "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") repeated");
        edges_ = std::move(edges);

        offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& e : edges_) {
            ++offsets_[e.u + 1];
            ++offsets_[e.v + 1];
        }
        std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
        targets_.resize(2 * edges_.size());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (const auto& e : edges_) {
            targets_[fill[e.u]++] = e.v;
            targets_[fill[e.v]++] = e.u;
        }
        for (Vertex v = 0; v < n; ++v)
            std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
    }

    Vertex num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    bool adjacent(Vertex u, Vertex v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> targets_;
};

/// Two-way vertex labeling with its crossing-edge count.
struct Cut {
    std::vector<std::uint8_t> side;
    std::size_t value = 0;
};

/// t-way vertex labeling with the number of edges whose endpoints differ.
struct TPartition {
    std::vector<int> part;
    int parts = 0;
    std::size_t value = 0;
};

inline Cut cut_value(const Graph& g, std::vector<std::uint8_t> side) {
    if (side.size() != static_cast<std::size_t>(g.num_vertices()))
        throw Error(Errc::LabelSizeMismatch, "labeling has " + std::to_string(side.size()) +
                                                  " entries for " + std::to_string(g.num_vertices()) +
                                                  " vertices");
    for (auto& s : side) s = s ? 1 : 0;
    std::size_t value = 0;
    for (const auto& e : g.edges()) value += side[e.u] != side[e.v];
    return Cut{std::move(side), value};
}

inline TPartition t_partition_value(const Graph& g, std::vector<int> part, int parts) {
    if (part.size() != static_cast<std::size_t>(g.num_vertices()))
        throw Error(Errc::LabelSizeMismatch, "labeling size differs from vertex count");
    for (int p : part)
        if (p < 0 || p >= parts) throw Error(Errc::InvalidArgument, "part label out of range");
    std::size_t value = 0;
    for (const auto& e : g.edges()) value += part[e.u] != part[e.v];
    return TPartition{std::move(part), parts, value};
}

/// Edwards' lower bound m/2 + (sqrt(8m+1) - 1)/8 on the maximum cut.
inline double edwards_bound(std::size_t m) {
    const double md = static_cast<double>(m);
    return md / 2.0 + (std::sqrt(8.0 * md + 1.0) - 1.0) / 8.0;
}

/// Vertex ordering in which every vertex has few earlier neighbors.
struct DegeneracyOrder {
    std::vector<Vertex> order;                       // order[k] = k-th vertex
    std::vector<int> position;                       // inverse of order
    std::vector<std::vector<Vertex>> back_neighbors; // V_i, sorted by id
    int degeneracy = 0;
};

/// Wraps an arbitrary vertex permutation as an ordering with back-neighbor sets.
inline DegeneracyOrder order_from_permutation(const Graph& g, std::vector<Vertex> perm) {
    const Vertex n = g.num_vertices();
    if (perm.size() != static_cast<std::size_t>(n))
        throw Error(Errc::InvalidArgument, "permutation size differs from vertex count");
    DegeneracyOrder out;
    out.position.assign(n, -1);
    for (std::size_t k = 0; k < perm.size(); ++k) {
        const Vertex v = perm[k];
        if (v < 0 || v >= n || out.position[v] != -1)
            throw Error(Errc::InvalidArgument, "not a permutation of the vertex set");
        out.position[v] = static_cast<int>(k);
    }
    out.order = std::move(perm);
    out.back_neighbors.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v))
            if (out.position[w] < out.position[v]) out.back_neighbors[v].push_back(w);
        out.degeneracy = std::max(out.degeneracy, static_cast<int>(out.back_neighbors[v].size()));
    }
    return out;
}

/// Min-degree peeling. The removal sequence is reversed so that each vertex
/// sees at most `degeneracy` neighbors before it. Among vertices of minimum
/// degree the highest id is removed first, so a graph whose vertices are all
/// tied (e.g. K_n) comes out in natural order 0, 1, ..., n-1.
inline DegeneracyOrder degeneracy_order(const Graph& g) {
    const Vertex n = g.num_vertices();
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> queue; // (degree, -id)
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(g.degree(v));
        queue.emplace(deg[v], -v);
    }
    std::vector<bool> removed(n, false);
    std::vector<Vertex> removal;
    removal.reserve(n);
    while (!queue.empty()) {
        auto [d, neg] = *queue.begin();
        queue.erase(queue.begin());
        const Vertex v = -neg;
        removed[v] = true;
        removal.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({deg[w], -w});
            --deg[w];
            queue.emplace(deg[w], -w);
        }
    }
    std::reverse(removal.begin(), removal.end());
    return order_from_permutation(g, std::move(removal));
}

/// t_<(i): number of triangles {i, j, k} with j and k both before i.
inline std::vector<std::size_t> back_triangles(const Graph& g, const DegeneracyOrder& ord) {
    const Vertex n = g.num_vertices();
    std::vector<std::size_t> out(n, 0);
    std::vector<char> mark(n, 0);
    for (Vertex i = 0; i < n; ++i) {
        const auto& vi = ord.back_neighbors[i];
        for (Vertex j : vi) mark[j] = 1;
        std::size_t t = 0;
        for (Vertex j : vi)
            for (Vertex k : ord.back_neighbors[j]) t += mark[k];
        for (Vertex j : vi) mark[j] = 0;
        out[i] = t;
    }
    return out;
}

inline std::size_t count_triangles(const Graph& g) {
    const auto ord = degeneracy_order(g);
    const auto per = back_triangles(g, ord);
    return std::accumulate(per.begin(), per.end(), std::size_t{0});
}

inline constexpr std::uint64_t kDefaultCliqueBudget = 1'000'000'000ULL;

namespace detail {

inline std::uint64_t extend_cliques(const DegeneracyOrder& ord, const std::vector<Vertex>& candidates, int remaining,
                                    std::uint64_t& steps, std::uint64_t budget) {
    if (remaining == 0) return 1;
    if (static_cast<int>(candidates.size()) < remaining) return 0;
    if (remaining == 1) {
        steps += candidates.size();
        if (steps > budget) throw Error(Errc::BudgetExceeded, "clique enumeration budget exhausted");
        return candidates.size();
    }
    std::uint64_t total = 0;
    std::vector<Vertex> next;
    for (Vertex u : candidates) {
        const auto& back = ord.back_neighbors[u];
        next.clear();
        std::set_intersection(candidates.begin(), candidates.end(), back.begin(), back.end(),
                              std::back_inserter(next));
        steps += candidates.size() + back.size();
        if (steps > budget) throw Error(Errc::BudgetExceeded, "clique enumeration budget exhausted");
        total += extend_cliques(ord, next, remaining - 1, steps, budget);
    }
    return total;
}

} // namespace detail

/// Number of r-cliques, enumerated by intersecting back-neighbor sets along a
/// degeneracy order. Throws BudgetExceeded after `budget` elementary steps.
inline std::uint64_t count_cliques(const Graph& g, int r, std::uint64_t budget = kDefaultCliqueBudget) {
    if (r < 1) throw Error(Errc::InvalidArgument, "clique size must be positive");
    if (r == 1) return static_cast<std::uint64_t>(g.num_vertices());
    if (r == 2) return g.num_edges();
    const auto ord = degeneracy_order(g);
    std::uint64_t steps = 0;
    std::uint64_t total = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        total += detail::extend_cliques(ord, ord.back_neighbors[v], r - 1, steps, budget);
    return total;
}

inline bool is_kr_free(const Graph& g, int r, std::uint64_t budget = kDefaultCliqueBudget) {
    return count_cliques(g, r, budget) == 0;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent; // child id -> parent id (sorted ascending)
    std::vector<Vertex> to_child;  // parent id -> child id, or -1
};

/// G[vs]. Child vertices are numbered by increasing parent id; duplicates in
/// `vs` are ignored.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
    InducedSubgraph out;
    out.to_parent.assign(vs.begin(), vs.end());
    std::sort(out.to_parent.begin(), out.to_parent.end());
    out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());
    for (Vertex v : out.to_parent)
        if (v < 0 || v >= g.num_vertices())
            throw Error(Errc::OutOfRangeVertex, "vertex " + std::to_string(v) + " not in graph");
    out.to_child.assign(g.num_vertices(), -1);
    for (std::size_t k = 0; k < out.to_parent.size(); ++k) out.to_child[out.to_parent[k]] = static_cast<Vertex>(k);
    std::vector<Edge> edges;
    for (Vertex v : out.to_parent)
        for (Vertex w : g.neighbors(v))
            if (v < w && out.to_child[w] >= 0) edges.push_back({out.to_child[v], out.to_child[w]});
    out.graph = Graph(static_cast<Vertex>(out.to_parent.size()), std::move(edges));
    return out;
}

/// m(G[vs]) without materializing the subgraph.
inline std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> vs) {
    std::vector<char> in(g.num_vertices(), 0);
    for (Vertex v : vs) in[v] = 1;
    std::size_t m = 0;
    for (Vertex v : vs)
        for (Vertex w : g.neighbors(v)) m += (v < w && in[w]);
    return m;
}

} // namespace sdpcut
