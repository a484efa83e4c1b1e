#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "random.hpp"

namespace sdpcut {

/// Random d-regular graph by stub pairing. Stubs are paired one pair at a
/// time; a pair that would create a loop or a repeated edge is redrawn, and
/// once no admissible pair is left the whole pairing restarts. Plain
/// whole-pairing rejection succeeds with probability about exp(-(d^2-1)/4),
/// which is hopeless beyond d = 5.
inline Graph random_regular(int n, int d, std::uint64_t seed, int max_restarts = 1000) {
    if (n < 0 || d < 0 || (n > 0 && d >= n) || (n == 0 && d > 0) ||
        (static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw Error(Errc::InfeasibleDegree,
                    "no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
    if (d == 0) return Graph(n, {});
    Rng rng(seed);
    std::vector<Vertex> stubs;
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<Edge> edges;
    auto admissible = [&](Vertex u, Vertex v) {
        return u != v && std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end();
    };
    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        stubs.clear();
        for (Vertex v = 0; v < n; ++v)
            for (int k = 0; k < d; ++k) stubs.push_back(v);
        for (auto& a : adj) a.clear();
        edges.clear();
        bool stuck = false;
        while (!stubs.empty() && !stuck) {
            const std::uint64_t left = stubs.size();
            std::size_t i = 0, j = 0;
            bool found = false;
            for (int tries = 0; tries < 64 && !found; ++tries) {
                i = rng.below(left);
                j = rng.below(left - 1);
                if (j >= i) ++j;
                found = admissible(stubs[i], stubs[j]);
            }
            if (!found) {
                // Few admissible pairs remain: choose uniformly among all of them.
                std::vector<std::pair<std::size_t, std::size_t>> pairs;
                for (std::size_t x = 0; x < left; ++x)
                    for (std::size_t y = x + 1; y < left; ++y)
                        if (admissible(stubs[x], stubs[y])) pairs.emplace_back(x, y);
                if (pairs.empty()) {
                    stuck = true;
                    break;
                }
                std::tie(i, j) = pairs[rng.below(pairs.size())];
            }
            const Vertex u = stubs[i], v = stubs[j];
            adj[u].push_back(v);
            adj[v].push_back(u);
            edges.push_back({std::min(u, v), std::max(u, v)});
            if (i < j) std::swap(i, j);
            stubs[i] = stubs.back();
            stubs.pop_back();
            stubs[j] = stubs.back();
            stubs.pop_back();
        }
        if (!stuck) return Graph(n, std::move(edges));
    }
    throw Error(Errc::RetryLimitExceeded, "stub pairing got stuck " + std::to_string(max_restarts) + " times");
}

/// G(n, p): each pair {u, v} independently, pairs visited in lexicographic order.
inline Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw Error(Errc::InfeasibleSpec, "negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InfeasibleSpec, "p must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

inline constexpr std::uint64_t kDefaultCycleBudget = 100'000'000ULL;

namespace detail {

class CycleSearch {
public:
    CycleSearch(std::vector<std::vector<Vertex>>& adj, int r, std::uint64_t budget)
        : adj_(adj), r_(r), budget_(budget), on_path_(adj.size(), 0) {}

    /// First r-cycle whose smallest vertex is `s`, or empty.
    std::vector<Vertex> from(Vertex s) {
        path_.assign(1, s);
        on_path_[s] = 1;
        const bool found = extend(s);
        on_path_[s] = 0;
        if (!found) return {};
        auto cyc = path_;
        for (Vertex v : cyc) on_path_[v] = 0;
        return cyc;
    }

    /// Number of r-cycles through edge {u, v} = simple u-v paths with r-1 edges.
    std::uint64_t cycles_through(Vertex u, Vertex v) {
        path_.assign(1, u);
        on_path_[u] = 1;
        const auto c = count_paths(u, v);
        on_path_[u] = 0;
        return c;
    }

    bool adjacent(Vertex u, Vertex v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

private:
    void tick() {
        if (++steps_ > budget_) throw Error(Errc::BudgetExceeded, "cycle search budget exhausted");
    }

    bool extend(Vertex s) {
        const Vertex v = path_.back();
        if (static_cast<int>(path_.size()) == r_) return adjacent(v, s);
        for (Vertex w : adj_[v]) {
            tick();
            if (w <= s || on_path_[w]) continue;
            path_.push_back(w);
            on_path_[w] = 1;
            if (extend(s)) return true;
            on_path_[w] = 0;
            path_.pop_back();
        }
        return false;
    }

    std::uint64_t count_paths(Vertex from, Vertex target) {
        const int edges_so_far = static_cast<int>(path_.size()) - 1;
        if (edges_so_far == r_ - 2) return adjacent(from, target) ? 1 : 0;
        std::uint64_t total = 0;
        for (Vertex w : adj_[from]) {
            tick();
            if (w == target || on_path_[w]) continue;
            path_.push_back(w);
            on_path_[w] = 1;
            total += count_paths(w, target);
            on_path_[w] = 0;
            path_.pop_back();
        }
        return total;
    }

    std::vector<std::vector<Vertex>>& adj_;
    int r_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    std::vector<char> on_path_;
    std::vector<Vertex> path_;
};

} // namespace detail

/// Deletes edges until no cycle of length exactly r remains. Cycles are
/// located by a depth-bounded search from each vertex s through vertices
/// larger than s; from each cycle found, the edge lying on the most r-cycles
/// is deleted (lexicographically smallest on ties).
inline Graph make_cr_free(const Graph& g, int r, std::uint64_t budget = kDefaultCycleBudget) {
    if (r < 3) throw Error(Errc::InvalidArgument, "cycle length must be at least 3");
    const Vertex n = g.num_vertices();
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    detail::CycleSearch search(adj, r, budget);

    for (Vertex s = 0; s < n;) {
        auto cyc = search.from(s);
        if (cyc.empty()) {
            ++s;
            continue;
        }
        Edge pick{-1, -1};
        std::uint64_t most = 0;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            Vertex u = cyc[k], v = cyc[(k + 1) % cyc.size()];
            if (u > v) std::swap(u, v);
            const auto c = search.cycles_through(u, v);
            const Edge e{u, v};
            if (pick.u < 0 || c > most || (c == most && e < pick)) {
                pick = e;
                most = c;
            }
        }
        std::erase(adj[pick.u], pick.v);
        std::erase(adj[pick.v], pick.u);
    }

    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : adj[u])
            if (u < v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

/// True if g has no cycle of length exactly r.
inline bool is_cr_free(const Graph& g, int r, std::uint64_t budget = kDefaultCycleBudget) {
    std::vector<std::vector<Vertex>> adj(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    detail::CycleSearch search(adj, r, budget);
    for (Vertex s = 0; s < g.num_vertices(); ++s)
        if (!search.from(s).empty()) return false;
    return true;
}

enum class Model { Regular, Gnp, Bipartite, Turan, Blowup, DisjointCliques };

inline const char* model_name(Model m) {
    switch (m) {
    case Model::Regular: return "regular";
    case Model::Gnp: return "gnp";
    case Model::Bipartite: return "bipartite";
    case Model::Turan: return "turan";
    case Model::Blowup: return "blowup";
    case Model::DisjointCliques: return "disjoint-cliques";
    }
    return "?";
}

inline std::optional<Model> parse_model(const std::string& s) {
    for (Model m : {Model::Regular, Model::Gnp, Model::Bipartite, Model::Turan, Model::Blowup, Model::DisjointCliques})
        if (s == model_name(m)) return m;
    return std::nullopt;
}

/// Parameters of a generated instance. Which fields matter depends on the model:
///   regular           n, d
///   gnp               n, p
///   bipartite         a, b, p   (p = 1 gives K_{a,b})
///   turan             n, parts  (complete balanced `parts`-partite graph)
///   blowup            parts, size (cycle C_parts, each vertex an independent set of `size`)
///   disjoint-cliques  count, size
struct GenSpec {
    Model model = Model::Gnp;
    int n = 0;
    int d = 0;
    double p = 1.0;
    int a = 0;
    int b = 0;
    int parts = 2;
    int size = 1;
    int count = 0;
    std::uint64_t seed = 0;
};

inline Graph family(const GenSpec& spec) {
    auto infeasible = [](const std::string& what) { return Error(Errc::InfeasibleSpec, what); };
    switch (spec.model) {
    case Model::Regular:
        return random_regular(spec.n, spec.d, spec.seed);
    case Model::Gnp:
        return gnp(spec.n, spec.p, spec.seed);
    case Model::Bipartite: {
        if (spec.a < 0 || spec.b < 0) throw infeasible("negative part size");
        if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw infeasible("p must lie in [0, 1]");
        Rng rng(spec.seed);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < spec.a; ++u)
            for (Vertex v = spec.a; v < spec.a + spec.b; ++v)
                if (spec.p >= 1.0 || rng.bernoulli(spec.p)) edges.push_back({u, v});
        return Graph(spec.a + spec.b, std::move(edges));
    }
    case Model::Turan: {
        if (spec.n < 0 || spec.parts < 1) throw infeasible("turan needs n >= 0 and parts >= 1");
        std::vector<int> part(spec.n);
        const int base = spec.n / spec.parts, extra = spec.n % spec.parts;
        for (int k = 0, v = 0; k < spec.parts; ++k)
            for (int j = 0; j < base + (k < extra ? 1 : 0); ++j) part[v++] = k;
        std::vector<Edge> edges;
        for (Vertex u = 0; u < spec.n; ++u)
            for (Vertex v = u + 1; v < spec.n; ++v)
                if (part[u] != part[v]) edges.push_back({u, v});
        return Graph(spec.n, std::move(edges));
    }
    case Model::Blowup: {
        if (spec.parts < 3 || spec.size < 1) throw infeasible("blowup needs a cycle length >= 3 and size >= 1");
        std::vector<Edge> edges;
        for (int k = 0; k < spec.parts; ++k) {
            const int next = (k + 1) % spec.parts;
            for (int x = 0; x < spec.size; ++x)
                for (int y = 0; y < spec.size; ++y) edges.push_back({k * spec.size + x, next * spec.size + y});
        }
        return Graph(spec.parts * spec.size, std::move(edges));
    }
    case Model::DisjointCliques: {
        if (spec.count < 0 || spec.size < 1) throw infeasible("disjoint-cliques needs count >= 0 and size >= 1");
        std::vector<Edge> edges;
        for (int c = 0; c < spec.count; ++c)
            for (int x = 0; x < spec.size; ++x)
                for (int y = x + 1; y < spec.size; ++y) edges.push_back({c * spec.size + x, c * spec.size + y});
        return Graph(spec.count * spec.size, std::move(edges));
    }
    }
    throw infeasible("unknown model");
}

} // namespace sdpcut
