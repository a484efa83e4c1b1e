#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "graph.hpp"
#include "random.hpp"

namespace sdpcut {

/// Proper coloring: no monochromatic edge, ids in [0, classes), no empty class.
struct Coloring {
    std::vector<int> color;
    int classes = 0;
};

inline void validate_coloring(const Graph& g, const Coloring& col) {
    if (col.color.size() != static_cast<std::size_t>(g.num_vertices()))
        throw Error(Errc::ImproperColoring, "coloring size differs from vertex count");
    std::vector<char> used(std::max(col.classes, 0), 0);
    for (int c : col.color) {
        if (c < 0 || c >= col.classes) throw Error(Errc::ImproperColoring, "class id out of range");
        used[c] = 1;
    }
    if (std::find(used.begin(), used.end(), 0) != used.end())
        throw Error(Errc::ImproperColoring, "empty color class");
    for (const auto& e : g.edges())
        if (col.color[e.u] == col.color[e.v])
            throw Error(Errc::ImproperColoring,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is monochromatic");
}

/// binom(n, k), saturating at uint64 max.
inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

/// Erdos-Szekeres upper bound binom(r+s-2, s-1) on the Ramsey number R(r, s).
inline std::uint64_t ramsey_bound(int r, int s) {
    if (r < 1 || s < 1) return 0;
    return binomial_saturating(static_cast<std::uint64_t>(r + s - 2), static_cast<std::uint64_t>(s - 1));
}

namespace detail {

class RamseySearch {
public:
    explicit RamseySearch(const Graph& g) : g_(g), stamp_(g.num_vertices(), 0) {}

    std::vector<Vertex> run(const std::vector<Vertex>& w, int r, int s) {
        if (s <= 0) return {};
        if (r <= 1) {
            // K_1-free means no vertices at all; the pivots plus any vertex form K_r.
            auto witness = pivots_;
            witness.push_back(w.front());
            throw CliqueFound(std::move(witness));
        }
        if (s == 1) return {w.front()};
        mark(w);
        if (r == 2) {
            for (Vertex u : w)
                for (Vertex v : g_.neighbors(u))
                    if (stamp_[v] == current_) {
                        auto witness = pivots_;
                        witness.push_back(u);
                        witness.push_back(v);
                        throw CliqueFound(std::move(witness));
                    }
            return w;
        }
        Vertex pivot = w.front();
        std::size_t best = 0;
        bool first = true;
        for (Vertex u : w) {
            std::size_t d = 0;
            for (Vertex v : g_.neighbors(u)) d += stamp_[v] == current_;
            if (first || d > best) {
                best = d;
                pivot = u;
                first = false;
            }
        }
        std::vector<Vertex> inside, outside;
        for (Vertex v : g_.neighbors(pivot))
            if (stamp_[v] == current_) inside.push_back(v);
        {
            std::size_t k = 0;
            for (Vertex u : w) {
                if (u == pivot) continue;
                while (k < inside.size() && inside[k] < u) ++k;
                if (k < inside.size() && inside[k] == u) continue;
                outside.push_back(u);
            }
        }
        if (inside.size() >= ramsey_bound(r - 1, s)) {
            pivots_.push_back(pivot);
            auto res = run(inside, r - 1, s);
            pivots_.pop_back();
            return res;
        }
        auto res = run(outside, r, s - 1);
        res.push_back(pivot);
        return res;
    }

private:
    void mark(const std::vector<Vertex>& w) {
        ++current_;
        for (Vertex v : w) stamp_[v] = current_;
    }

    const Graph& g_;
    std::vector<unsigned> stamp_;
    unsigned current_ = 0;
    std::vector<Vertex> pivots_;
};

} // namespace detail

/// Independent set of size >= s in a K_r-free graph, by the neighborhood /
/// non-neighborhood recursion behind R(r, s) <= binom(r+s-2, s-1). The pivot
/// is a vertex of maximum degree (lowest id on ties).
/// Throws TooFewVertices if n < binom(r+s-2, s-1), and CliqueFound (with an
/// r-clique witness) if the graph is not K_r-free.
inline std::vector<Vertex> ramsey_independent_set(const Graph& g, int r, int s) {
    if (r < 1) throw Error(Errc::InvalidArgument, "r must be at least 1");
    if (s <= 0) return {};
    if (static_cast<std::uint64_t>(g.num_vertices()) < ramsey_bound(r, s))
        throw Error(Errc::TooFewVertices, "need at least binom(r+s-2, s-1) = " + std::to_string(ramsey_bound(r, s)) +
                                              " vertices, graph has " + std::to_string(g.num_vertices()));
    std::vector<Vertex> all(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
    auto res = detail::RamseySearch(g).run(all, r, s);
    std::sort(res.begin(), res.end());
    return res;
}

/// Largest s with s^k <= n.
inline int integer_root(std::uint64_t n, int k) {
    int s = static_cast<int>(std::floor(std::pow(static_cast<double>(n), 1.0 / k)));
    auto pow_le = [&](std::uint64_t base) {
        unsigned __int128 acc = 1;
        for (int i = 0; i < k; ++i) {
            acc *= base;
            if (acc > n) return false;
        }
        return true;
    };
    while (s > 0 && !pow_le(static_cast<std::uint64_t>(s))) --s;
    while (pow_le(static_cast<std::uint64_t>(s) + 1)) ++s;
    return s;
}

/// 4 n^((r-2)/(r-1)), the class-count bound for K_r-free graphs.
inline double kr_free_class_bound(std::size_t n, int r) {
    return 4.0 * std::pow(static_cast<double>(n), static_cast<double>(r - 2) / static_cast<double>(r - 1));
}

/// Coloring of a K_r-free graph with at most 4 n^((r-2)/(r-1)) classes.
/// Each class is an independent set of size >= floor(n'^(1/(r-1))) found by
/// the Ramsey recursion on the n' uncolored vertices, grown to a maximal
/// independent set of the uncolored subgraph.
inline Coloring kr_free_coloring(const Graph& g, int r) {
    if (r < 2) throw Error(Errc::InvalidArgument, "r must be at least 2");
    const Vertex n = g.num_vertices();
    Coloring col;
    col.color.assign(n, -1);
    std::vector<Vertex> residual(n);
    for (Vertex v = 0; v < n; ++v) residual[v] = v;
    std::vector<char> blocked(n, 0);

    while (!residual.empty()) {
        const auto nres = static_cast<std::uint64_t>(residual.size());
        const int s = integer_root(nres, r - 1);
        std::vector<Vertex> cls;
        if (s >= 1 && nres >= ramsey_bound(r, s)) {
            auto sub = induced_subgraph(g, residual);
            try {
                for (Vertex c : ramsey_independent_set(sub.graph, r, s)) cls.push_back(sub.to_parent[c]);
            } catch (const CliqueFound& e) {
                std::vector<Vertex> w;
                for (Vertex c : e.witness()) w.push_back(sub.to_parent[c]);
                throw CliqueFound(std::move(w));
            }
        }
        // Grow to a maximal independent set of the uncolored subgraph.
        std::fill(blocked.begin(), blocked.end(), 0);
        for (Vertex v : cls) {
            blocked[v] = 1;
            for (Vertex w : g.neighbors(v)) blocked[w] = 1;
        }
        for (Vertex v : residual) {
            if (blocked[v]) continue;
            cls.push_back(v);
            blocked[v] = 1;
            for (Vertex w : g.neighbors(v)) blocked[w] = 1;
        }
        for (Vertex v : cls) col.color[v] = col.classes;
        ++col.classes;
        std::erase_if(residual, [&](Vertex v) { return col.color[v] >= 0; });
    }
    return col;
}

/// Cut obtained by splitting the color classes into groups of floor(t/2) and
/// ceil(t/2) classes. The split is derandomized by conditional expectations,
/// so the value is at least m * floor(t/2) * ceil(t/2) / binom(t, 2).
inline CutResult coloring_cut(const Graph& g, const Coloring& col) {
    validate_coloring(g, col);
    const int t = col.classes;
    const auto m = g.num_edges();
    CutResult out;
    out.certificate.bound_reference = "coloring-split";
    if (t <= 1) {
        out.cut = cut_value(g, std::vector<std::uint8_t>(g.num_vertices(), 0));
        return out;
    }

    // Sparse class-level multigraph.
    std::vector<std::vector<std::pair<int, double>>> adj(t);
    {
        std::vector<std::vector<int>> raw(t);
        for (const auto& e : g.edges()) {
            raw[col.color[e.u]].push_back(col.color[e.v]);
            raw[col.color[e.v]].push_back(col.color[e.u]);
        }
        for (int c = 0; c < t; ++c) {
            auto& r = raw[c];
            std::sort(r.begin(), r.end());
            for (std::size_t k = 0; k < r.size();) {
                std::size_t j = k;
                while (j < r.size() && r[j] == r[k]) ++j;
                adj[c].emplace_back(r[k], static_cast<double>(j - k));
                k = j;
            }
        }
    }

    std::vector<int> group(t, -1);
    int cap[2] = {t / 2, t - t / 2};
    double fixed = 0.0;                      // cut edges between assigned classes
    double toward[2] = {0.0, 0.0};           // edges from group g to unassigned classes
    double free_pairs = static_cast<double>(m); // edges between unassigned classes

    auto expectation = [](double fx, double t0, double t1, double fp, int l, int r) {
        const int u = l + r;
        double e = fx;
        if (u > 0) e += t0 * r / u + t1 * l / u;
        if (u > 1) e += fp * 2.0 * l * r / (static_cast<double>(u) * (u - 1));
        return e;
    };

    for (int c = 0; c < t; ++c) {
        double wc[2] = {0.0, 0.0};
        double wu = 0.0;
        for (auto [o, w] : adj[c]) {
            if (group[o] >= 0) wc[group[o]] += w;
            else if (o != c) wu += w;
        }
        double best_e = -1.0;
        int best_g = -1;
        for (int gsel = 0; gsel < 2; ++gsel) {
            if (cap[gsel] == 0) continue;
            const double fx = fixed + wc[1 - gsel];
            double t0 = toward[0] - wc[0] + (gsel == 0 ? wu : 0.0);
            double t1 = toward[1] - wc[1] + (gsel == 1 ? wu : 0.0);
            const int l = cap[0] - (gsel == 0), r = cap[1] - (gsel == 1);
            const double e = expectation(fx, t0, t1, free_pairs - wu, l, r);
            if (e > best_e) {
                best_e = e;
                best_g = gsel;
            }
        }
        group[c] = best_g;
        fixed += wc[1 - best_g];
        toward[0] += -wc[0] + (best_g == 0 ? wu : 0.0);
        toward[1] += -wc[1] + (best_g == 1 ? wu : 0.0);
        free_pairs -= wu;
        --cap[best_g];
    }

    std::vector<std::uint8_t> side(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) side[v] = static_cast<std::uint8_t>(group[col.color[v]]);
    out.cut = cut_value(g, std::move(side));
    const auto lo = static_cast<std::uint64_t>(t / 2), hi = static_cast<std::uint64_t>(t - t / 2);
    out.certificate.expected_value = static_cast<double>(2 * m * lo * hi) /
                                     static_cast<double>(static_cast<std::uint64_t>(t) * (t - 1));
    out.certificate.bound = static_cast<double>(m) * (0.5 + 0.5 / t);
    return out;
}

struct TCutResult {
    TPartition partition;
    CutCertificate certificate;
};

struct TCutOptions {
    int repeats = 32;
    std::uint64_t seed = 0;
};

/// Closed-form expectation of the splitting below, with c crossing and
/// i = m - c internal base edges: m - i/s for t = 2s, and
/// m - (c + (4s+1) i)/(2s+1)^2 for t = 2s+1.
inline double t_cut_expectation(std::size_t m, std::size_t crossing, int t) {
    const double c = static_cast<double>(crossing);
    const double i = static_cast<double>(m) - c;
    const int s = t / 2;
    if (t % 2 == 0) return static_cast<double>(m) - i / s;
    const double q = static_cast<double>(t) * t;
    return static_cast<double>(m) - (c + (4.0 * s + 1.0) * i) / q;
}

/// t-way partition from a 2-cut (A = side 0, B = side 1). For t = 2s each
/// side is split uniformly into s parts. For t = 2s+1, an A vertex lands in
/// each of parts 0..s-1 with probability 2/(2s+1) and in part 2s with
/// probability 1/(2s+1); B symmetrically over parts s..2s-1 and 2s.
inline TCutResult max_t_cut(const Graph& g, const Cut& base, int t, const TCutOptions& opt = {}) {
    if (t < 2) throw Error(Errc::InvalidArgument, "t must be at least 2");
    if (opt.repeats < 1) throw Error(Errc::InvalidArgument, "repeats must be at least 1");
    const auto checked = cut_value(g, base.side);
    if (checked.value != base.value) throw Error(Errc::InvalidArgument, "base cut value is stale");
    const int s = t / 2;
    const bool odd = t % 2 == 1;

    TCutResult out;
    out.certificate.expected_value = t_cut_expectation(g.num_edges(), base.value, t);
    out.certificate.bound = static_cast<double>(t - 1) / t * static_cast<double>(g.num_edges());
    out.certificate.bound_reference = "t-cut-split";

    for (int rep = 0; rep < opt.repeats; ++rep) {
        Rng rng(derive_seed(opt.seed, static_cast<std::uint64_t>(rep)));
        std::vector<int> part(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const int offset = checked.side[v] ? s : 0;
            if (!odd) {
                part[v] = offset + static_cast<int>(rng.below(static_cast<std::uint64_t>(s)));
            } else {
                const auto k = static_cast<int>(rng.below(static_cast<std::uint64_t>(t)));
                part[v] = k < 2 * s ? offset + k / 2 : 2 * s;
            }
        }
        auto p = t_partition_value(g, std::move(part), t);
        if (rep == 0 || p.value > out.partition.value) out.partition = std::move(p);
    }
    return out;
}

} // namespace sdpcut
