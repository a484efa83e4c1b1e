#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromatic.hpp"
#include "decompose.hpp"
#include "embedding.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "report.hpp"

namespace sdpcut {

inline const std::vector<std::string>& cut_algorithms() {
    static const std::vector<std::string> names{"exact", "sdp", "composite", "kr", "chromatic", "tcut", "sampled"};
    return names;
}

struct CutConfig {
    std::string algo = "sdp";
    std::optional<double> epsilon; // empty = 1/sqrt(degeneracy)
    int repeats = 32;
    int r = 3;
    int t = 3;
    double p = 0.1;
    std::uint64_t seed = 0;
};

namespace detail {

class ParamList {
public:
    ParamList& add(const std::string& key, const std::string& value) {
        if (!text_.empty()) text_ += ';';
        text_ += key + "=" + value;
        return *this;
    }
    ParamList& add(const std::string& key, double value) { return add(key, format_real(value)); }
    ParamList& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
    const std::string& str() const { return text_; }

private:
    std::string text_;
};

inline double auto_epsilon(int degeneracy) {
    return degeneracy > 0 ? 1.0 / std::sqrt(static_cast<double>(degeneracy)) : 1.0;
}

} // namespace detail

/// Runs one algorithm on g and fills a report. For "tcut" the value is the
/// number of edges crossing the t-partition; every other algorithm reports a
/// 2-cut.
inline RunReport run_cut(const Graph& g, const std::string& name, const CutConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const auto ord = degeneracy_order(g);
    RunReport rep;
    rep.graph = name;
    rep.n = g.num_vertices();
    rep.m = static_cast<std::int64_t>(g.num_edges());
    rep.degeneracy = ord.degeneracy;
    rep.triangles = static_cast<std::int64_t>(count_triangles(g));
    rep.algo = cfg.algo;
    rep.seed = cfg.seed;

    const double eps = cfg.epsilon.value_or(detail::auto_epsilon(ord.degeneracy));
    detail::ParamList params;
    CutResult res;
    if (cfg.algo == "exact") {
        res.cut = max_cut_exact(g);
        res.certificate.expected_value = static_cast<double>(res.cut.value);
        res.certificate.bound = edwards_bound(g.num_edges());
    } else if (cfg.algo == "sdp") {
        params.add("eps", eps).add("repeats", cfg.repeats);
        res = sdp_cut(g, SdpOptions{eps, cfg.repeats, cfg.seed});
    } else if (cfg.algo == "composite") {
        params.add("eps", eps).add("repeats", cfg.repeats);
        res = composite_cut(g, eps, auto_subsolver(SdpOptions{std::nullopt, cfg.repeats, cfg.seed}),
                            CompositeOptions{cfg.repeats, cfg.seed});
    } else if (cfg.algo == "kr") {
        params.add("r", cfg.r).add("repeats", cfg.repeats);
        res = kr_cut(g, cfg.r, KrOptions{cfg.repeats, cfg.seed, kDefaultCliqueBudget});
    } else if (cfg.algo == "chromatic") {
        params.add("r", cfg.r);
        const auto col = kr_free_coloring(g, cfg.r);
        params.add("classes", col.classes);
        res = coloring_cut(g, col);
    } else if (cfg.algo == "tcut") {
        params.add("t", cfg.t).add("eps", eps).add("repeats", cfg.repeats);
        const auto base = sdp_cut(g, SdpOptions{eps, cfg.repeats, derive_seed(cfg.seed, 0)});
        const auto tc = max_t_cut(g, base.cut, cfg.t, TCutOptions{cfg.repeats, derive_seed(cfg.seed, 1)});
        res.cut.value = tc.partition.value;
        res.certificate = tc.certificate;
    } else if (cfg.algo == "sampled") {
        params.add("p", cfg.p).add("eps", eps).add("repeats", cfg.repeats);
        res = sampled_sdp_cut(g, SampledOptions{cfg.p, eps, cfg.repeats, cfg.seed});
    } else {
        throw Error(Errc::InvalidArgument, "unknown algorithm '" + cfg.algo + "'");
    }

    rep.params = params.str();
    rep.value = static_cast<std::int64_t>(res.cut.value);
    rep.surplus_num = 2 * rep.value - rep.m;
    rep.certificate = res.certificate.expected_value;
    rep.bound = res.certificate.bound;
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

struct BenchConfig {
    std::vector<std::string> families{"regular"};
    std::vector<int> degrees{3, 4, 6, 8};
    int n = 200;
    int instances = 1;
    std::vector<std::string> algos{"sdp"};
    std::optional<int> cr_free; // delete all cycles of this length first
    CutConfig cut;              // algo is overridden per run
};

/// One instance of a bench family with size parameter n and degree knob d.
///   regular           random d-regular graph
///   gnp               G(n, d/(n-1))
///   bipartite         random bipartite graph on halves a = n/2, b = n - a, p = d/b
///   turan             complete balanced d-partite graph
///   disjoint-cliques  floor(n/(d+1)) copies of K_{d+1}
///   blowup            cycle C_k, k = max(3, n/s), every vertex replaced by s = max(1, d/2) vertices
inline Graph bench_instance(const std::string& fam, int n, int d, std::uint64_t seed) {
    GenSpec spec;
    spec.seed = seed;
    if (fam == "regular") {
        spec.model = Model::Regular;
        spec.n = n;
        spec.d = d;
    } else if (fam == "gnp") {
        spec.model = Model::Gnp;
        spec.n = n;
        spec.p = n > 1 ? std::min(1.0, static_cast<double>(d) / (n - 1)) : 0.0;
    } else if (fam == "bipartite") {
        spec.model = Model::Bipartite;
        spec.a = n / 2;
        spec.b = n - n / 2;
        spec.p = spec.a > 0 ? std::min(1.0, static_cast<double>(d) / spec.b) : 0.0;
    } else if (fam == "turan") {
        spec.model = Model::Turan;
        spec.n = n;
        spec.parts = std::max(1, d);
    } else if (fam == "disjoint-cliques") {
        spec.model = Model::DisjointCliques;
        spec.size = d + 1;
        spec.count = n / (d + 1);
    } else if (fam == "blowup") {
        spec.model = Model::Blowup;
        spec.size = std::max(1, d / 2);
        spec.parts = std::max(3, n / spec.size);
    } else {
        throw Error(Errc::InvalidArgument, "unknown bench family '" + fam + "'");
    }
    return family(spec);
}

/// Sweeps families x degrees x instances x algorithms. Instance k (in sweep
/// order) is generated from derive_seed(seed, k) and every algorithm run on it
/// uses that same seed. Reports come back in sweep order.
inline std::vector<RunReport> run_bench(const BenchConfig& cfg) {
    std::vector<RunReport> out;
    std::uint64_t index = 0;
    for (const auto& fam : cfg.families)
        for (int d : cfg.degrees)
            for (int k = 0; k < cfg.instances; ++k, ++index) {
                const auto seed = derive_seed(cfg.cut.seed, index);
                auto g = bench_instance(fam, cfg.n, d, seed);
                std::string name = fam + ":n=" + std::to_string(cfg.n) + ":d=" + std::to_string(d) + ":i=" +
                                   std::to_string(k);
                if (cfg.cr_free) {
                    g = make_cr_free(g, *cfg.cr_free);
                    name += ":c" + std::to_string(*cfg.cr_free) + "-free";
                }
                for (const auto& algo : cfg.algos) {
                    CutConfig cut = cfg.cut;
                    cut.algo = algo;
                    cut.seed = seed;
                    out.push_back(run_cut(g, name, cut));
                }
            }
    return out;
}

} // namespace sdpcut
