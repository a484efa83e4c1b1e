#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "graph.hpp"
#include "random.hpp"

namespace sdpcut {

/// Per-vertex subsets V_i of the neighborhood and weights eps_i that define
/// the explicit vector solution. eps_i <= 1/sqrt(|V_i|) is required when V_i
/// is nonempty; eps_i has no effect when V_i is empty.
struct EpsilonPlan {
    std::vector<std::vector<Vertex>> sets;
    std::vector<double> eps;
};

namespace detail {
inline constexpr double kEpsSlack = 1e-12;

inline bool eps_within(double eps, std::size_t set_size) {
    return eps <= (1.0 / std::sqrt(static_cast<double>(set_size))) * (1.0 + kEpsSlack);
}
} // namespace detail

/// Checks the plan against g; throws InvalidPlan or InvalidEpsilon.
inline void validate_plan(const Graph& g, const EpsilonPlan& plan) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    if (plan.sets.size() != n || plan.eps.size() != n)
        throw Error(Errc::InvalidPlan, "plan does not cover every vertex");
    for (Vertex i = 0; i < g.num_vertices(); ++i) {
        const auto& s = plan.sets[i];
        if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(Errc::InvalidPlan, "V_" + std::to_string(i) + " is not a sorted set");
        for (Vertex j : s)
            if (j < 0 || j >= g.num_vertices() || !g.adjacent(i, j))
                throw Error(Errc::InvalidPlan, "V_" + std::to_string(i) + " contains non-neighbor " + std::to_string(j));
        const double e = plan.eps[i];
        if (!(e >= 0.0)) throw Error(Errc::InvalidEpsilon, "negative eps at vertex " + std::to_string(i));
        if (s.empty() ? e > 1.0 : !detail::eps_within(e, s.size()))
            throw Error(Errc::InvalidEpsilon, "eps_" + std::to_string(i) + " exceeds 1/sqrt(|V_i|)");
    }
}

/// Plan with V_i = back-neighbors of i in `ord` and a constant eps (0 where
/// V_i is empty).
inline EpsilonPlan back_neighbor_plan(const DegeneracyOrder& ord, double eps) {
    EpsilonPlan plan;
    plan.sets = ord.back_neighbors;
    plan.eps.resize(plan.sets.size());
    for (std::size_t i = 0; i < plan.sets.size(); ++i) plan.eps[i] = plan.sets[i].empty() ? 0.0 : eps;
    return plan;
}

/// Unit vectors stored sparsely, one per vertex.
class Embedding {
public:
    struct Entry {
        Vertex coord;
        double value;
    };

    Embedding() = default;

    /// Normalizes each row; rows must be nonzero. Coordinates may come in any
    /// order but must not repeat within a row.
    static Embedding from_rows(std::vector<std::vector<Entry>> rows) {
        Embedding e;
        e.norms_.reserve(rows.size());
        for (auto& row : rows) {
            std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.coord < b.coord; });
            double sq = 0.0;
            for (const auto& x : row) {
                if (x.coord < 0) throw Error(Errc::InvalidArgument, "negative coordinate");
                sq += x.value * x.value;
                e.dimension_ = std::max(e.dimension_, x.coord + 1);
            }
            if (!(sq > 0.0)) throw Error(Errc::InvalidArgument, "zero vector in embedding");
            const double norm = std::sqrt(sq);
            for (auto& x : row) x.value /= norm;
            e.norms_.push_back(norm);
        }
        e.rows_ = std::move(rows);
        return e;
    }

    std::size_t size() const { return rows_.size(); }
    Vertex dimension() const { return dimension_; }
    std::span<const Entry> vec(Vertex i) const { return rows_[i]; }

    /// Norm of the row before normalization.
    double raw_norm(Vertex i) const { return norms_[i]; }

    double inner_product(Vertex i, Vertex j) const {
        const auto& a = rows_[i];
        const auto& b = rows_[j];
        double s = 0.0;
        std::size_t p = 0, q = 0;
        while (p < a.size() && q < b.size()) {
            if (a[p].coord < b[q].coord) ++p;
            else if (b[q].coord < a[p].coord) ++q;
            else s += a[p++].value * b[q++].value;
        }
        return s;
    }

    double project(Vertex i, std::span<const double> w) const {
        double s = 0.0;
        for (const auto& x : rows_[i]) s += x.value * w[x.coord];
        return s;
    }

private:
    std::vector<std::vector<Entry>> rows_;
    std::vector<double> norms_;
    Vertex dimension_ = 0;
};

/// v~(i) = e_i - eps_i * sum_{j in V_i} e_j, normalized.
inline Embedding build_vectors(const Graph& g, const EpsilonPlan& plan) {
    validate_plan(g, plan);
    std::vector<std::vector<Embedding::Entry>> rows(g.num_vertices());
    for (Vertex i = 0; i < g.num_vertices(); ++i) {
        auto& row = rows[i];
        row.reserve(plan.sets[i].size() + 1);
        row.push_back({i, 1.0});
        for (Vertex j : plan.sets[i]) row.push_back({j, -plan.eps[i]});
    }
    return Embedding::from_rows(std::move(rows));
}

/// Exact expected hyperplane-rounding cut: sum over edges of
/// arccos(<v_i, v_j>)/pi.
inline CutCertificate exact_expected_cut(const Graph& g, const Embedding& emb) {
    CutCertificate cert;
    cert.per_edge_terms.reserve(g.num_edges());
    double total = 0.0;
    for (const auto& e : g.edges()) {
        const double ip = std::clamp(emb.inner_product(e.u, e.v), -1.0, 1.0);
        const double p = std::acos(ip) / std::numbers::pi;
        cert.per_edge_terms.push_back(p);
        total += p;
    }
    cert.expected_value = total;
    cert.bound_reference = "hyperplane-expectation";
    return cert;
}

/// m/2 + sum_i eps_i |V_i| / (4 pi) - sum_{(i,j) in E} eps_i eps_j |V_i cap V_j| / 2
inline double plan_bound(const Graph& g, const EpsilonPlan& plan) {
    validate_plan(g, plan);
    double gain = 0.0;
    for (Vertex i = 0; i < g.num_vertices(); ++i)
        gain += plan.eps[i] * static_cast<double>(plan.sets[i].size());
    double loss = 0.0;
    std::vector<Vertex> common;
    for (const auto& e : g.edges()) {
        const auto& a = plan.sets[e.u];
        const auto& b = plan.sets[e.v];
        common.clear();
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        loss += plan.eps[e.u] * plan.eps[e.v] * static_cast<double>(common.size());
    }
    return static_cast<double>(g.num_edges()) / 2.0 + gain / (4.0 * std::numbers::pi) - loss / 2.0;
}

/// Goemans-Williamson rounding: side 0 holds vertices with <v_i, w> >= 0 for
/// a Gaussian direction w.
inline Cut hyperplane_round(const Graph& g, const Embedding& emb, Rng& rng) {
    std::vector<double> w(emb.dimension());
    for (auto& x : w) x = rng.normal();
    std::vector<std::uint8_t> side(emb.size());
    for (Vertex i = 0; i < static_cast<Vertex>(emb.size()); ++i) side[i] = emb.project(i, w) < 0.0 ? 1 : 0;
    return cut_value(g, std::move(side));
}

struct SdpOptions {
    std::optional<double> epsilon; // defaults to 1/sqrt(degeneracy)
    int repeats = 32;
    std::uint64_t seed = 0;
};

/// Constant-eps back-neighbor embedding along a degeneracy order, rounded
/// `repeats` times; returns the best cut with the exact expectation of a
/// single rounding as certificate and the closed-form bound alongside.
inline CutResult sdp_cut(const Graph& g, const SdpOptions& opt = {}) {
    if (opt.repeats < 1) throw Error(Errc::InvalidArgument, "repeats must be at least 1");
    const auto ord = degeneracy_order(g);
    CutResult out;
    out.certificate.bound_reference = "plan-bound";
    if (ord.degeneracy == 0) {
        out.cut = cut_value(g, std::vector<std::uint8_t>(g.num_vertices(), 0));
        return out;
    }
    const double limit = 1.0 / std::sqrt(static_cast<double>(ord.degeneracy));
    const double eps = opt.epsilon.value_or(limit);
    if (!(eps > 0.0)) throw Error(Errc::InvalidEpsilon, "eps must be positive");
    if (!detail::eps_within(eps, static_cast<std::size_t>(ord.degeneracy)))
        throw Error(Errc::EpsilonTooLarge,
                    "eps=" + std::to_string(eps) + " exceeds 1/sqrt(d)=" + std::to_string(limit));

    const auto plan = back_neighbor_plan(ord, eps);
    const auto emb = build_vectors(g, plan);
    out.certificate = exact_expected_cut(g, emb);
    out.certificate.bound_reference = "plan-bound";
    out.certificate.bound = plan_bound(g, plan);

    for (int r = 0; r < opt.repeats; ++r) {
        Rng rng(derive_seed(opt.seed, static_cast<std::uint64_t>(r)));
        auto c = hyperplane_round(g, emb, rng);
        if (r == 0 || c.value > out.cut.value) out.cut = std::move(c);
    }
    return out;
}

} // namespace sdpcut
