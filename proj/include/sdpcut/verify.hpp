#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "chromatic.hpp"
#include "decompose.hpp"
#include "embedding.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "oracle.hpp"

namespace sdpcut {

struct SuiteResult {
    SuiteResult() = default;
    explicit SuiteResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }

    void check(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
};

inline const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"plan-bound",   "sparse-triangles", "decomposition",
                                                "coloring-cut", "kr-coloring",      "tcut-expectation"};
    return names;
}

namespace detail {

/// Random plan: each V_i a random subset of N(i), eps_i uniform in [0, 1/sqrt|V_i|].
inline EpsilonPlan random_plan(const Graph& g, Rng& rng) {
    EpsilonPlan plan;
    plan.sets.resize(g.num_vertices());
    plan.eps.resize(g.num_vertices());
    for (Vertex i = 0; i < g.num_vertices(); ++i) {
        for (Vertex j : g.neighbors(i))
            if (rng.bernoulli(0.5)) plan.sets[i].push_back(j);
        const double cap = plan.sets[i].empty() ? 1.0 : 1.0 / std::sqrt(static_cast<double>(plan.sets[i].size()));
        plan.eps[i] = cap * rng.uniform01();
    }
    return plan;
}

inline Graph random_small_graph(Rng& rng, int max_n) {
    const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
    return gnp(n, rng.uniform01(), rng.next());
}

/// A triangle-free graph: bipartite, or a random regular graph with its triangles removed.
inline Graph triangle_free_graph(Rng& rng, int max_n) {
    const int n = 8 + 2 * static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n / 2 - 3)));
    if (rng.bernoulli(0.5)) {
        GenSpec spec;
        spec.model = Model::Bipartite;
        spec.a = n / 2;
        spec.b = n - n / 2;
        spec.p = 0.2 + 0.8 * rng.uniform01();
        spec.seed = rng.next();
        return family(spec);
    }
    const int d = 3 + static_cast<int>(rng.below(4));
    return make_cr_free(random_regular(n, d, rng.next()), 3);
}

/// Expected crossing count of the t-cut splitting, by enumerating all t^n outcomes.
inline double exhaustive_t_cut_expectation(const Graph& g, const std::vector<std::uint8_t>& side, int t) {
    const int n = g.num_vertices();
    const int s = t / 2;
    const bool odd = t % 2 == 1;
    auto prob = [&](Vertex v, int part) {
        const int lo = side[v] ? s : 0;
        if (!odd) return part >= lo && part < lo + s ? 1.0 / s : 0.0;
        if (part == 2 * s) return 1.0 / t;
        return part >= lo && part < lo + s ? 2.0 / t : 0.0;
    };
    std::vector<int> part(n, 0);
    double total = 0.0;
    while (true) {
        double pr = 1.0;
        for (Vertex v = 0; v < n && pr > 0.0; ++v) pr *= prob(v, part[v]);
        if (pr > 0.0) {
            std::size_t crossing = 0;
            for (const auto& e : g.edges()) crossing += part[e.u] != part[e.v];
            total += pr * static_cast<double>(crossing);
        }
        int k = 0;
        while (k < n && ++part[k] == t) part[k++] = 0;
        if (k == n) break;
    }
    return total;
}

} // namespace detail

/// exact_expected_cut >= plan_bound over random graphs and random plans.
inline SuiteResult verify_plan_bound(std::uint64_t seed, int cases = 300) {
    SuiteResult res("plan-bound");
    Rng rng(seed);
    for (int k = 0; k < cases; ++k) {
        const auto g = detail::random_small_graph(rng, 40);
        const auto plan = detail::random_plan(g, rng);
        const double expect = exact_expected_cut(g, build_vectors(g, plan)).expected_value;
        const double bound = plan_bound(g, plan);
        res.check(expect >= bound - kCertificateTolerance,
                  "case " + std::to_string(k) + ": expectation " + format_real(expect) + " < bound " + format_real(bound));
    }
    return res;
}

/// sdp_cut certificate >= (1/2 + eps/60) m whenever t <= m/(8 eps).
inline SuiteResult verify_sparse_triangles(std::uint64_t seed, int cases = 100) {
    SuiteResult res("sparse-triangles");
    Rng rng(seed);
    for (int k = 0; k < cases; ++k) {
        Graph g = detail::triangle_free_graph(rng, 60);
        // Add a few triangles so the triangle term is exercised.
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        auto close_wedge = [&](Vertex u) {
            for (Vertex w : g.neighbors(u))
                for (Vertex z : g.neighbors(u))
                    if (w < z && !g.adjacent(w, z)) {
                        edges.push_back({w, z});
                        return;
                    }
        };
        const auto extra = rng.below(4);
        for (std::uint64_t x = 0; x < extra; ++x)
            close_wedge(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.num_vertices()))));
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        g = Graph(g.num_vertices(), std::move(edges));
        if (g.num_edges() == 0) continue;
        const auto d = degeneracy_order(g).degeneracy;
        const double eps = 1.0 / std::sqrt(static_cast<double>(d));
        const double m = static_cast<double>(g.num_edges());
        if (static_cast<double>(count_triangles(g)) > m / (8.0 * eps)) continue;
        const auto cert = sdp_cut(g, SdpOptions{eps, 1, rng.next()}).certificate.expected_value;
        const double target = (0.5 + eps / 60.0) * m;
        res.check(cert >= target - kCertificateTolerance,
                  "case " + std::to_string(k) + ": certificate " + format_real(cert) + " < " + format_real(target));
    }
    return res;
}

/// Either the best candidate reaches (1/2 + eps/360) m, or the decomposition
/// satisfies the structural alternative, checked with exact part optima.
inline SuiteResult verify_decomposition(std::uint64_t seed, int cases = 60) {
    SuiteResult res("decomposition");
    Rng rng(seed);
    const auto exact = exact_subsolver();
    for (int k = 0; k < cases; ++k) {
        const int n = 10 + static_cast<int>(rng.below(40));
        const Graph g = gnp(n, 0.1 + 0.4 * rng.uniform01(), rng.next());
        const auto d = degeneracy_order(g).degeneracy;
        if (g.num_edges() == 0 || d > OracleBudget::for_cut().max_vertices) continue;
        const double eps = (0.25 + 0.75 * rng.uniform01()) / std::sqrt(static_cast<double>(d));
        const auto c = composite_candidates(g, eps, exact, CompositeOptions{8, rng.next()});
        const double m = static_cast<double>(g.num_edges());

        std::size_t best = 0;
        for (const auto* r : {&c.combined, &c.bipartition, &c.direct, &c.greedy}) best = std::max(best, r->cut.value);
        const bool cond1 = static_cast<double>(best) >= (0.5 + eps / 360.0) * m - kCertificateTolerance;

        bool cond2 = true;
        std::size_t covered = 0;
        double gain = 0.0;
        for (std::size_t i = 0; i < c.decomposition.parts.size(); ++i) {
            const auto& part = c.decomposition.parts[i];
            const auto h = induced_subgraph(g, part);
            const auto w = c.decomposition.witnesses[i];
            for (Vertex v : part) cond2 = cond2 && g.adjacent(v, w);
            cond2 = cond2 && static_cast<int>(part.size()) <= d;
            cond2 = cond2 && static_cast<double>(h.graph.num_edges()) >= static_cast<double>(part.size()) / (8.0 * eps);
            covered += part.size();
            gain += static_cast<double>(max_cut_exact(h.graph).value) - static_cast<double>(h.graph.num_edges()) / 2.0;
        }
        cond2 = cond2 && !c.decomposition.parts.empty();
        cond2 = cond2 && static_cast<double>(covered) >= m / (6.0 * d);
        cond2 = cond2 && static_cast<double>(c.combined.cut.value) >= m / 2.0 + gain - kCertificateTolerance;
        res.check(cond1 || cond2, "case " + std::to_string(k) + ": neither alternative holds");
    }
    return res;
}

/// coloring_cut meets its certificate and (1/2 + 1/(2t)) m for proper colorings.
inline SuiteResult verify_coloring_cut(std::uint64_t seed, int cases = 200) {
    SuiteResult res("coloring-cut");
    Rng rng(seed);
    for (int k = 0; k < cases; ++k) {
        const auto g = detail::random_small_graph(rng, 60);
        // Greedy coloring in a random order.
        std::vector<Vertex> perm(g.num_vertices());
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        Coloring col;
        col.color.assign(g.num_vertices(), -1);
        for (Vertex v : perm) {
            std::vector<char> used(g.degree(v) + 1, 0);
            for (Vertex w : g.neighbors(v))
                if (col.color[w] >= 0 && col.color[w] < static_cast<int>(used.size())) used[col.color[w]] = 1;
            int c = 0;
            while (used[c]) ++c;
            col.color[v] = c;
            col.classes = std::max(col.classes, c + 1);
        }
        const auto out = coloring_cut(g, col);
        const double m = static_cast<double>(g.num_edges());
        const double target = col.classes > 1 ? (0.5 + 0.5 / col.classes) * m : m;
        res.check(static_cast<double>(out.cut.value) >= out.certificate.expected_value &&
                      out.certificate.expected_value >= target - kCertificateTolerance,
                  "case " + std::to_string(k) + ": value " + std::to_string(out.cut.value) + ", certificate " +
                      format_real(out.certificate.expected_value) + ", target " + format_real(target));
    }
    return res;
}

/// K_r-free colorings are proper with at most 4 n^((r-2)/(r-1)) classes and
/// the resulting cut certificate reaches (1/2 + 1/(8 n^((r-2)/(r-1)))) m.
inline SuiteResult verify_kr_coloring(std::uint64_t seed, int cases = 100) {
    SuiteResult res("kr-coloring");
    Rng rng(seed);
    for (int k = 0; k < cases; ++k) {
        const int r = 3 + static_cast<int>(rng.below(2));
        Graph g;
        switch (rng.below(3)) {
        case 0: {
            GenSpec spec;
            spec.model = Model::Turan;
            spec.n = 4 + static_cast<int>(rng.below(60));
            spec.parts = r - 1;
            g = family(spec);
            break;
        }
        default:
            g = detail::triangle_free_graph(rng, 80);
        }
        const auto n = static_cast<std::size_t>(g.num_vertices());
        const auto col = kr_free_coloring(g, r);
        bool proper = true;
        try {
            validate_coloring(g, col);
        } catch (const Error&) {
            proper = false;
        }
        const double x = std::pow(static_cast<double>(n), static_cast<double>(r - 2) / (r - 1));
        const auto out = coloring_cut(g, col);
        const double m = static_cast<double>(g.num_edges());
        res.check(proper && col.classes <= 4.0 * x &&
                      out.certificate.expected_value >= (0.5 + 1.0 / (8.0 * x)) * m - kCertificateTolerance &&
                      static_cast<double>(out.cut.value) >= out.certificate.expected_value,
                  "case " + std::to_string(k) + ": r=" + std::to_string(r) + " n=" + std::to_string(n) +
                      " classes=" + std::to_string(col.classes));
    }
    return res;
}

/// Closed-form t-cut expectation equals the exhaustive expectation, and
/// exceeds ((t-1)/t) m by 2W/t (t even) or 2(t-1)W/t^2 (t odd), W the base surplus.
inline SuiteResult verify_tcut_expectation(std::uint64_t seed, int cases = 60) {
    SuiteResult res("tcut-expectation");
    Rng rng(seed);
    for (int k = 0; k < cases; ++k) {
        const int n = 2 + static_cast<int>(rng.below(6));
        const auto g = gnp(n, rng.uniform01(), rng.next());
        std::vector<std::uint8_t> side(n);
        for (auto& s : side) s = static_cast<std::uint8_t>(rng.below(2));
        const auto base = cut_value(g, side);
        const double m = static_cast<double>(g.num_edges());
        const double w = static_cast<double>(base.value) - m / 2.0;
        for (int t : {2, 3, 4}) {
            const double closed = t_cut_expectation(g.num_edges(), base.value, t);
            const double brute = detail::exhaustive_t_cut_expectation(g, side, t);
            const double gain = t % 2 == 0 ? 2.0 * w / t : 2.0 * (t - 1) * w / (static_cast<double>(t) * t);
            res.check(std::abs(closed - brute) <= 1e-9 &&
                          closed - static_cast<double>(t - 1) / t * m >= gain - kCertificateTolerance,
                      "case " + std::to_string(k) + " t=" + std::to_string(t) + ": closed " + format_real(closed) +
                          " vs exhaustive " + format_real(brute));
        }
    }
    return res;
}

inline SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed) {
    if (name == "plan-bound") return verify_plan_bound(seed);
    if (name == "sparse-triangles") return verify_sparse_triangles(seed);
    if (name == "decomposition") return verify_decomposition(seed);
    if (name == "coloring-cut") return verify_coloring_cut(seed);
    if (name == "kr-coloring") return verify_kr_coloring(seed);
    if (name == "tcut-expectation") return verify_tcut_expectation(seed);
    throw Error(Errc::InvalidArgument, "unknown verify suite '" + name + "'");
}

} // namespace sdpcut
