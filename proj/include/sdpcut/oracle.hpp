#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"
#include "random.hpp"

namespace sdpcut {

/// Limits for the exhaustive solvers.
struct OracleBudget {
    int max_vertices = 22;
    std::uint64_t max_steps = 1'000'000'000ULL;

    static OracleBudget for_cut() { return {22, 1'000'000'000ULL}; }
    static OracleBudget for_t_cut() { return {12, 1'000'000'000ULL}; }
};

/// Maximum cut by Gray-code enumeration of the 2^(n-1) labelings with vertex
/// 0 on side 0. Among optimal labelings the lexicographically smallest wins.
inline Cut max_cut_exact(const Graph& g, const OracleBudget& budget = OracleBudget::for_cut()) {
    const Vertex n = g.num_vertices();
    if (budget.max_vertices <= 0 || budget.max_steps == 0)
        throw Error(Errc::InvalidArgument, "oracle budget limits must be positive");
    if (n > budget.max_vertices || n > 63)
        throw Error(Errc::BudgetExceeded, "exact max-cut limited to " + std::to_string(budget.max_vertices) +
                                              " vertices, graph has " + std::to_string(n));
    if (n <= 1) return cut_value(g, std::vector<std::uint8_t>(n, 0));
    const int free_bits = n - 1;
    const std::uint64_t total = std::uint64_t{1} << free_bits;
    if (total > budget.max_steps) throw Error(Errc::BudgetExceeded, "exact max-cut step budget exhausted");

    std::vector<std::uint8_t> side(n, 0);
    std::uint64_t mask = 0; // bit v set iff side[v] == 1
    std::int64_t value = 0;
    std::int64_t best_value = 0;
    std::uint64_t best_mask = 0;
    auto lex_less = [](std::uint64_t a, std::uint64_t b) {
        const std::uint64_t diff = a ^ b;
        if (diff == 0) return false;
        const std::uint64_t low = diff & (~diff + 1);
        return (a & low) == 0;
    };
    for (std::uint64_t step = 1; step < total; ++step) {
        const Vertex v = std::countr_zero(step) + 1;
        std::int64_t same = 0;
        for (Vertex w : g.neighbors(v)) same += side[w] == side[v];
        const std::int64_t opposite = static_cast<std::int64_t>(g.degree(v)) - same;
        value += same - opposite;
        side[v] ^= 1;
        mask ^= std::uint64_t{1} << v;
        if (value > best_value || (value == best_value && lex_less(mask, best_mask))) {
            best_value = value;
            best_mask = mask;
        }
    }
    std::vector<std::uint8_t> best(n);
    for (Vertex v = 0; v < n; ++v) best[v] = (best_mask >> v) & 1;
    return cut_value(g, std::move(best));
}

/// Maximum t-partite subgraph by enumerating all labelings with vertex 0 in
/// part 0, in lexicographic order (first optimum kept).
inline TPartition max_t_cut_exact(const Graph& g, int t, const OracleBudget& budget = OracleBudget::for_t_cut()) {
    if (t < 1) throw Error(Errc::InvalidArgument, "t must be at least 1");
    const Vertex n = g.num_vertices();
    if (n > budget.max_vertices)
        throw Error(Errc::BudgetExceeded, "exact max-t-cut limited to " + std::to_string(budget.max_vertices) +
                                              " vertices, graph has " + std::to_string(n));
    if (n <= 1 || t == 1) return t_partition_value(g, std::vector<int>(n, 0), t);
    std::uint64_t total = 1;
    for (Vertex k = 1; k < n; ++k) {
        if (total > budget.max_steps / static_cast<std::uint64_t>(t))
            throw Error(Errc::BudgetExceeded, "exact max-t-cut step budget exhausted");
        total *= static_cast<std::uint64_t>(t);
    }

    std::vector<int> label(n, 0);
    std::int64_t value = 0;
    std::int64_t best_value = 0;
    std::vector<int> best = label;
    auto relabel = [&](Vertex v, int to) {
        std::int64_t with_old = 0, with_new = 0;
        for (Vertex w : g.neighbors(v)) {
            with_old += label[w] == label[v];
            with_new += label[w] == to;
        }
        value += with_old - with_new;
        label[v] = to;
    };
    for (;;) {
        Vertex j = n - 1;
        while (j > 0 && label[j] == t - 1) {
            relabel(j, 0);
            --j;
        }
        if (j == 0) break;
        relabel(j, label[j] + 1);
        if (value > best_value) {
            best_value = value;
            best = label;
        }
    }
    return t_partition_value(g, std::move(best), t);
}

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Sample mean and standard error of the hyperplane-rounding cut value.
inline MonteCarloEstimate monte_carlo_cut_mean(const Graph& g, const Embedding& emb, int trials, Rng& rng) {
    if (trials < 1) throw Error(Errc::InvalidArgument, "trials must be at least 1");
    double sum = 0.0, sumsq = 0.0;
    for (int k = 0; k < trials; ++k) {
        const double x = static_cast<double>(hyperplane_round(g, emb, rng).value);
        sum += x;
        sumsq += x * x;
    }
    const double n = static_cast<double>(trials);
    MonteCarloEstimate est;
    est.mean = sum / n;
    if (trials > 1) {
        const double var = std::max(0.0, (sumsq - n * est.mean * est.mean) / (n - 1.0));
        est.std_error = std::sqrt(var / n);
    }
    return est;
}

} // namespace sdpcut
