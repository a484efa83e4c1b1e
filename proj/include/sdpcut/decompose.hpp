#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "chromatic.hpp"
#include "embedding.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "random.hpp"

namespace sdpcut {

struct DenseSubset {
    std::vector<Vertex> vertices; // back-neighbors of the witness
    Vertex witness = -1;
};

/// Returns the back-neighbor set V_i of a vertex i with
/// t_<(i) >= d_<(i)/eps, so that G[V_i] has at least |V_i|/eps edges.
/// Among qualifying vertices the one with the largest ratio t_<(i)/d_<(i)
/// is chosen (earliest in the order on ties).
/// Requires t(G) >= m(G)/eps and m(G) > 0, else NotEnoughTriangles.
inline DenseSubset find_dense_subset(const Graph& g, const DegeneracyOrder& ord, double eps) {
    if (!(eps > 0.0)) throw Error(Errc::InvalidEpsilon, "eps must be positive");
    const auto m = g.num_edges();
    const auto tri = back_triangles(g, ord);
    const auto t = std::accumulate(tri.begin(), tri.end(), std::size_t{0});
    if (m == 0 || static_cast<double>(t) < static_cast<double>(m) / eps)
        throw Error(Errc::NotEnoughTriangles, std::to_string(t) + " triangles, need at least m/eps = " +
                                                   std::to_string(static_cast<double>(m) / eps));
    Vertex best = -1;
    for (Vertex v : ord.order) {
        const auto d = ord.back_neighbors[v].size();
        if (d == 0) continue;
        if (best < 0 || tri[v] * ord.back_neighbors[best].size() > tri[best] * d) best = v;
    }
    if (best < 0 || static_cast<double>(tri[best]) < static_cast<double>(ord.back_neighbors[best].size()) / eps)
        throw Error(Errc::NotEnoughTriangles, "no vertex with t_<(i) >= d_<(i)/eps");
    return {ord.back_neighbors[best], best};
}

/// Partition V_1, ..., V_k, V_{k+1} of the vertex set. Each part lies in the
/// neighborhood of its witness, has at most d vertices and at least
/// |V_i|/eps_used induced edges; the remainder induces at most
/// m(remainder)/eps_used triangles.
struct Decomposition {
    std::vector<std::vector<Vertex>> parts;
    std::vector<Vertex> remainder;
    double eps_used = 0.0;
    std::vector<Vertex> witnesses;
};

inline Decomposition partition_triangle_sparse(const Graph& g, double eps) {
    if (!(eps > 0.0)) throw Error(Errc::InvalidEpsilon, "eps must be positive");
    Decomposition dec;
    dec.eps_used = eps;
    std::vector<Vertex> residual(g.num_vertices());
    std::iota(residual.begin(), residual.end(), 0);
    std::vector<char> taken(g.num_vertices(), 0);
    for (;;) {
        auto sub = induced_subgraph(g, residual);
        const auto m = sub.graph.num_edges();
        if (m == 0) break;
        const auto ord = degeneracy_order(sub.graph);
        const auto tri = back_triangles(sub.graph, ord);
        const auto t = std::accumulate(tri.begin(), tri.end(), std::size_t{0});
        if (static_cast<double>(t) < static_cast<double>(m) / eps) break;
        const auto dense = find_dense_subset(sub.graph, ord, eps);
        std::vector<Vertex> part;
        for (Vertex c : dense.vertices) {
            part.push_back(sub.to_parent[c]);
            taken[sub.to_parent[c]] = 1;
        }
        dec.parts.push_back(std::move(part));
        dec.witnesses.push_back(sub.to_parent[dense.witness]);
        std::erase_if(residual, [&](Vertex v) { return taken[v] != 0; });
    }
    dec.remainder = std::move(residual);
    return dec;
}

/// A vertex set together with a cut of the subgraph it induces;
/// `cut.side[k]` labels `vertices[k]`.
struct Block {
    std::vector<Vertex> vertices;
    Cut cut;
};

/// Glues block cuts into a cut of g. Blocks are placed in order, each in the
/// orientation cutting more edges towards the already placed blocks, so the
/// result is at least (m - sum m_i)/2 + sum (block cut values).
inline CutResult combine_subcuts(const Graph& g, std::span<const Block> blocks) {
    const Vertex n = g.num_vertices();
    std::vector<int> owner(n, -1);
    std::vector<std::uint8_t> local(n, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& blk = blocks[b];
        if (blk.cut.side.size() != blk.vertices.size())
            throw Error(Errc::NotAPartition, "block " + std::to_string(b) + " cut does not match its vertex set");
        for (std::size_t k = 0; k < blk.vertices.size(); ++k) {
            const Vertex v = blk.vertices[k];
            if (v < 0 || v >= n) throw Error(Errc::NotAPartition, "vertex out of range");
            if (owner[v] != -1) throw Error(Errc::NotAPartition, "vertex " + std::to_string(v) + " in two blocks");
            owner[v] = static_cast<int>(b);
            local[v] = blk.cut.side[k] ? 1 : 0;
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end())
        throw Error(Errc::NotAPartition, "blocks do not cover every vertex");

    std::size_t internal = 0, block_values = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::size_t mi = 0, cut = 0;
        for (Vertex v : blocks[b].vertices)
            for (Vertex w : g.neighbors(v))
                if (v < w && owner[w] == static_cast<int>(b)) {
                    ++mi;
                    cut += local[v] != local[w];
                }
        if (cut != blocks[b].cut.value)
            throw Error(Errc::NotAPartition, "block " + std::to_string(b) + " cut value does not match its labeling");
        internal += mi;
        block_values += cut;
    }

    std::vector<std::uint8_t> side(n, 0);
    std::vector<char> placed(n, 0);
    for (const auto& blk : blocks) {
        std::size_t keep = 0, flip = 0;
        for (Vertex v : blk.vertices)
            for (Vertex w : g.neighbors(v)) {
                if (!placed[w]) continue;
                if (local[v] != side[w]) ++keep;
                else ++flip;
            }
        const std::uint8_t x = keep >= flip ? 0 : 1;
        for (Vertex v : blk.vertices) {
            side[v] = local[v] ^ x;
            placed[v] = 1;
        }
    }

    CutResult out;
    out.cut = cut_value(g, std::move(side));
    out.certificate.expected_value =
        static_cast<double>(g.num_edges() - internal) / 2.0 + static_cast<double>(block_values);
    out.certificate.bound = out.certificate.expected_value;
    out.certificate.bound_reference = "block-combination";
    return out;
}

/// Extends a cut of G[u] to all of g, placing each outside vertex (by
/// increasing id) on the side that cuts more edges to placed vertices.
/// The result is at least (m - m(u))/2 + cut_u.value.
inline CutResult extend_cut(const Graph& g, std::span<const Vertex> u, const Cut& cut_u) {
    const Vertex n = g.num_vertices();
    if (cut_u.side.size() != u.size())
        throw Error(Errc::NotACutOfInducedSubgraph, "labeling size differs from |U|");
    std::vector<char> placed(n, 0);
    std::vector<std::uint8_t> side(n, 0);
    for (std::size_t k = 0; k < u.size(); ++k) {
        const Vertex v = u[k];
        if (v < 0 || v >= n) throw Error(Errc::OutOfRangeVertex, "vertex " + std::to_string(v) + " not in graph");
        if (placed[v]) throw Error(Errc::NotACutOfInducedSubgraph, "vertex repeated in U");
        placed[v] = 1;
        side[v] = cut_u.side[k] ? 1 : 0;
    }
    std::size_t mu = 0, cu = 0;
    for (Vertex v : u)
        for (Vertex w : g.neighbors(v))
            if (v < w && placed[w]) {
                ++mu;
                cu += side[v] != side[w];
            }
    if (cu != cut_u.value) throw Error(Errc::NotACutOfInducedSubgraph, "cut value does not match its labeling");

    for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        std::size_t toward0 = 0, toward1 = 0; // placed neighbors on each side
        for (Vertex w : g.neighbors(v))
            if (placed[w]) (side[w] ? toward1 : toward0)++;
        side[v] = toward0 > toward1 ? 1 : 0;
        placed[v] = 1;
    }
    CutResult out;
    out.cut = cut_value(g, std::move(side));
    out.certificate.expected_value = static_cast<double>(g.num_edges() - mu) / 2.0 + static_cast<double>(cu);
    out.certificate.bound = out.certificate.expected_value;
    out.certificate.bound_reference = "extension";
    return out;
}

/// Cut routine applied to the dense parts of a decomposition.
struct SubSolver {
    std::function<CutResult(const Graph&)> solve;
    std::string descriptor;
};

inline SubSolver exact_subsolver(OracleBudget budget = OracleBudget::for_cut()) {
    return {[budget](const Graph& h) {
                CutResult r;
                r.cut = max_cut_exact(h, budget);
                r.certificate.expected_value = static_cast<double>(r.cut.value);
                r.certificate.bound = r.certificate.expected_value;
                r.certificate.bound_reference = "exact";
                return r;
            },
            "exact"};
}

inline SubSolver sdp_subsolver(SdpOptions opt = {}) {
    return {[opt](const Graph& h) { return sdp_cut(h, SdpOptions{std::nullopt, opt.repeats, opt.seed}); }, "sdp"};
}

/// Coloring cut for K_r-free parts.
inline SubSolver coloring_subsolver(int r) {
    return {[r](const Graph& h) { return coloring_cut(h, kr_free_coloring(h, r)); },
            "coloring(r=" + std::to_string(r) + ")"};
}

/// Exact oracle on parts small enough for it, sdp otherwise.
inline SubSolver auto_subsolver(SdpOptions opt = {}, OracleBudget budget = OracleBudget::for_cut()) {
    auto exact = exact_subsolver(budget);
    auto sdp = sdp_subsolver(opt);
    return {[=](const Graph& h) { return h.num_vertices() <= budget.max_vertices ? exact.solve(h) : sdp.solve(h); },
            "auto"};
}

struct CompositeOptions {
    int repeats = 32;
    std::uint64_t seed = 0;
};

struct CompositeCandidates {
    Decomposition decomposition;
    CutResult combined;    // block combination over the decomposition
    CutResult bipartition; // (V_1 u ... u V_k | V_{k+1})
    CutResult direct;      // sdp_cut on the whole graph
    CutResult greedy;      // extension from the empty set; always >= m/2
};

namespace detail {
inline void check_eps_for_degeneracy(double eps, int d) {
    if (!(eps > 0.0)) throw Error(Errc::InvalidEpsilon, "eps must be positive");
    if (d > 0 && !eps_within(eps, static_cast<std::size_t>(d)))
        throw Error(Errc::EpsilonTooLarge, "eps=" + std::to_string(eps) + " exceeds 1/sqrt(d) for d=" +
                                               std::to_string(d));
}
} // namespace detail

/// All candidate cuts considered by composite_cut. The decomposition uses
/// parameter 8*eps: parts carry at least |V_i|/(8 eps) edges and the
/// remainder at most m/(8 eps) triangles.
inline CompositeCandidates composite_candidates(const Graph& g, double eps, const SubSolver& sub,
                                                const CompositeOptions& opt = {}) {
    const auto d = degeneracy_order(g).degeneracy;
    detail::check_eps_for_degeneracy(eps, d);
    CompositeCandidates c;
    c.decomposition = partition_triangle_sparse(g, 8.0 * eps);
    const auto& dec = c.decomposition;

    std::vector<Block> blocks;
    for (const auto& part : dec.parts) {
        auto h = induced_subgraph(g, part);
        auto r = sub.solve(h.graph);
        blocks.push_back({h.to_parent, std::move(r.cut)});
    }
    {
        auto h = induced_subgraph(g, dec.remainder);
        auto r = sdp_cut(h.graph, SdpOptions{eps, opt.repeats, derive_seed(opt.seed, 1)});
        blocks.push_back({h.to_parent, std::move(r.cut)});
    }
    c.combined = combine_subcuts(g, blocks);

    std::vector<std::uint8_t> side(g.num_vertices(), 1);
    for (const auto& part : dec.parts)
        for (Vertex v : part) side[v] = 0;
    c.bipartition.cut = cut_value(g, std::move(side));
    c.bipartition.certificate.expected_value = static_cast<double>(c.bipartition.cut.value);
    c.bipartition.certificate.bound = c.bipartition.certificate.expected_value;
    c.bipartition.certificate.bound_reference = "bipartition";

    c.direct = sdp_cut(g, SdpOptions{eps, opt.repeats, derive_seed(opt.seed, 2)});
    c.greedy = extend_cut(g, {}, Cut{});
    return c;
}

/// Best of the composite candidates; certificate is the largest candidate
/// certificate, and the reported bound is the whole-graph closed form.
inline CutResult composite_cut(const Graph& g, double eps, const SubSolver& sub, const CompositeOptions& opt = {}) {
    if (g.num_edges() == 0) {
        CutResult out;
        out.cut = cut_value(g, std::vector<std::uint8_t>(g.num_vertices(), 0));
        out.certificate.bound_reference = "plan-bound";
        return out;
    }
    auto c = composite_candidates(g, eps, sub, opt);
    const CutResult* cands[] = {&c.combined, &c.bipartition, &c.direct, &c.greedy};
    const CutResult* best = cands[0];
    double cert = 0.0;
    for (const auto* r : cands) {
        if (r->cut.value > best->cut.value) best = r;
        cert = std::max(cert, r->certificate.expected_value);
    }
    CutResult out{best->cut, {}};
    out.certificate.expected_value = cert;
    out.certificate.bound = c.direct.certificate.bound;
    out.certificate.bound_reference = "plan-bound";
    return out;
}

/// eps = c' d^(-(2-a)/(1+a)) for transferring an m^a surplus on H'-free
/// graphs to H-free d-degenerate graphs.
inline double transfer_epsilon(double a, double c_prime, double d) {
    return c_prime * std::pow(d, -(2.0 - a) / (1.0 + a));
}

/// d^(-1 + 1/(2r-4)).
inline double kr_epsilon(int d, int r) {
    return std::pow(static_cast<double>(d), -1.0 + 1.0 / (2.0 * r - 4.0));
}

struct KrOptions {
    int repeats = 32;
    std::uint64_t seed = 0;
    std::uint64_t clique_budget = kDefaultCliqueBudget;
};

/// Cut of a K_r-free graph: composite_cut with eps = d^(-1+1/(2r-4)) and
/// coloring cuts on the (K_{r-1}-free) dense parts. The bound reported is
/// (1/2 + eps/388) m.
inline CutResult kr_cut(const Graph& g, int r, const KrOptions& opt = {}) {
    if (r < 3) throw Error(Errc::InvalidArgument, "r must be at least 3");
    if (count_cliques(g, r, opt.clique_budget) != 0)
        throw Error(Errc::NotKrFree, "graph contains K_" + std::to_string(r));
    const auto d = degeneracy_order(g).degeneracy;
    if (g.num_edges() == 0) {
        CutResult out;
        out.cut = cut_value(g, std::vector<std::uint8_t>(g.num_vertices(), 0));
        out.certificate.bound_reference = "kr-free";
        return out;
    }
    const double eps = kr_epsilon(d, r);
    auto out = composite_cut(g, eps, coloring_subsolver(r - 1), CompositeOptions{opt.repeats, opt.seed});
    out.certificate.bound = (0.5 + eps / 388.0) * static_cast<double>(g.num_edges());
    out.certificate.bound_reference = "kr-free";
    return out;
}

struct SampledOptions {
    double p = 0.1; // 1/(10 c') with c' = 1
    std::optional<double> epsilon;
    int repeats = 32;
    std::uint64_t seed = 0;
};

inline double default_sample_probability(double c_prime) { return 1.0 / (10.0 * c_prime); }

/// Samples each vertex with probability p, runs sdp_cut on the sample and
/// extends the result to g. Certificate: m/2 + (sample certificate - m'/2).
inline CutResult sampled_sdp_cut(const Graph& g, const SampledOptions& opt = {}) {
    if (!(opt.p > 0.0 && opt.p <= 1.0)) throw Error(Errc::InvalidArgument, "p must lie in (0, 1]");
    if (opt.repeats < 1) throw Error(Errc::InvalidArgument, "repeats must be at least 1");
    const auto d = degeneracy_order(g).degeneracy;
    const double eps = opt.epsilon.value_or(d > 0 ? 1.0 / std::sqrt(static_cast<double>(d)) : 1.0);
    detail::check_eps_for_degeneracy(eps, d);
    const double half_m = static_cast<double>(g.num_edges()) / 2.0;

    CutResult best;
    for (int rep = 0; rep < opt.repeats; ++rep) {
        Rng rng(derive_seed(opt.seed, 2 * static_cast<std::uint64_t>(rep)));
        std::vector<Vertex> sample;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (rng.bernoulli(opt.p)) sample.push_back(v);
        auto h = induced_subgraph(g, sample);
        auto inner = sdp_cut(h.graph, SdpOptions{eps, 1, derive_seed(opt.seed, 2 * static_cast<std::uint64_t>(rep) + 1)});
        auto ext = extend_cut(g, h.to_parent, inner.cut);
        const double sub_half = static_cast<double>(h.graph.num_edges()) / 2.0;
        ext.certificate.expected_value = half_m + (inner.certificate.expected_value - sub_half);
        ext.certificate.bound = half_m + (inner.certificate.bound - sub_half);
        ext.certificate.bound_reference = "sampled";
        if (rep == 0 || ext.cut.value > best.cut.value) best = std::move(ext);
    }
    return best;
}

} // namespace sdpcut
