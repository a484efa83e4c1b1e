#include <gtest/gtest.h>

#include "sdpcut/harness.hpp"
#include "sdpcut/io.hpp"
#include "sdpcut/verify.hpp"
#include "support/oracles.hpp"

using namespace sdpcut;

namespace {

Errc code_of(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for: " << text;
    return Errc::InvalidArgument;
}

CutConfig named_config(const std::string& algo) {
    CutConfig cfg;
    cfg.algo = algo;
    return cfg;
}

CutConfig sdp_config(int repeats, std::uint64_t seed) {
    CutConfig cfg;
    cfg.repeats = repeats;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST(Parse, EdgeList) {
    EXPECT_EQ(parse_graph("2 1\n0 1\n"), Graph(2, {{0, 1}}));
    EXPECT_EQ(parse_graph("  3 0 \n"), Graph(3, {}));
    EXPECT_EQ(parse_graph("3 2\r\n2 1\r\n0 1"), oracle::path(3));
}

TEST(Parse, Dimacs) {
    EXPECT_EQ(parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"), oracle::complete(3));
    EXPECT_EQ(parse_graph("c a comment\np edge 2 1\nc another\ne 2 1\n"), Graph(2, {{0, 1}}));
}

TEST(Parse, Errors) {
    EXPECT_EQ(code_of("2 1\n0 0\n"), Errc::SelfLoop);
    EXPECT_EQ(code_of("3 2\n0 1\n1 0\n"), Errc::DuplicateEdge);
    EXPECT_EQ(code_of("2 1\n0 2\n"), Errc::VertexOutOfRange);
    EXPECT_EQ(code_of("2 2\n0 1\n"), Errc::ParseError);
    EXPECT_EQ(code_of("2 1\n0 x\n"), Errc::ParseError);
    EXPECT_EQ(code_of(""), Errc::ParseError);
    EXPECT_EQ(code_of("p edge 3 1\ne 0 1\n"), Errc::VertexOutOfRange);
    EXPECT_EQ(code_of("e 1 2\n"), Errc::ParseError);
    try {
        parse_graph("3 2\n0 1\n1 q\n");
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(Parse, CanonicalRoundTrip) {
    const auto g = oracle::random_graph(30, 0.2, 3);
    const auto text = write_edge_list(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(write_edge_list(parse_graph(text)), text);
    EXPECT_EQ(write_edge_list(parse_graph("3 2\n2 1\n1 0\n")), "3 2\n0 1\n1 2\n");
}

TEST(Report, JsonRoundTrip) {
    const auto rep = run_cut(oracle::petersen(), "petersen", sdp_config(8, 5));
    const nlohmann::json j = rep;
    EXPECT_EQ(j.at("surplus").get<double>(), rep.surplus());
    const auto back = nlohmann::json::parse(j.dump()).get<RunReport>();
    EXPECT_EQ(back, rep);
}

TEST(Report, CsvRow) {
    RunReport r;
    r.graph = "a,b";
    r.params = "eps=0.5;repeats=3";
    r.m = 3;
    r.value = 2;
    r.surplus_num = 1;
    r.certificate = 0.1;
    r.ms = 1.23456;
    EXPECT_EQ(std::string(kCsvHeader), "graph,n,m,degeneracy,triangles,algo,params,seed,value,surplus_num,certificate,bound,ms");
    EXPECT_EQ(to_csv_row(r), "\"a,b\",0,3,0,0,,eps=0.5;repeats=3,0,2,1,0.1,0,1.235");
}

TEST(RunCut, ExactOnCompleteGraph) {
    const auto rep = run_cut(oracle::complete(5), "k5", named_config("exact"));
    EXPECT_EQ(rep.value, 6);
    EXPECT_EQ(rep.surplus_num, 2);
    EXPECT_DOUBLE_EQ(rep.bound, 6.0);
    EXPECT_EQ(rep.triangles, 10);
    EXPECT_EQ(rep.degeneracy, 4);
}

TEST(RunCut, SdpOnPetersen) {
    const auto rep = run_cut(oracle::petersen(), "petersen", sdp_config(32, 1));
    EXPECT_GE(rep.value, 8);
    EXPECT_GT(rep.certificate, 7.5);
    EXPECT_EQ(rep.surplus_num, 2 * rep.value - 15);
}

TEST(RunCut, GeneratedCubicOnFour) {
    const auto g = parse_graph(write_edge_list(random_regular(4, 3, 0)));
    EXPECT_EQ(run_cut(g, "g", named_config("exact")).value, 4);
}

TEST(RunCut, EveryAlgorithmBelowOptimum) {
    const auto g = oracle::petersen();
    const auto best = static_cast<std::int64_t>(oracle::max_cut(g));
    for (const auto& algo : cut_algorithms()) {
        if (algo == "tcut") continue;
        CutConfig cfg;
        cfg.algo = algo;
        cfg.repeats = 8;
        const auto rep = run_cut(g, "petersen", cfg);
        EXPECT_LE(rep.value, best) << algo;
        EXPECT_GE(2 * rep.value, rep.m) << algo;
    }
    CutConfig t;
    t.algo = "tcut";
    t.t = 3;
    EXPECT_LE(run_cut(g, "petersen", t).value, static_cast<std::int64_t>(oracle::max_t_cut(g, 3)));
}

TEST(RunCut, DeterministicApartFromTime) {
    const auto g = oracle::random_graph(40, 0.15, 2);
    for (const auto& algo : cut_algorithms()) {
        if (algo == "exact" || algo == "kr" || algo == "chromatic") continue;
        CutConfig cfg;
        cfg.algo = algo;
        cfg.seed = 77;
        auto a = run_cut(g, "g", cfg), b = run_cut(g, "g", cfg);
        a.ms = b.ms = 0.0;
        EXPECT_EQ(a, b) << algo;
    }
}

TEST(RunCut, UnknownAlgorithm) { EXPECT_THROW(run_cut(oracle::cycle(4), "c", named_config("magic")), Error); }

TEST(Bench, OrderAndSeeds) {
    BenchConfig cfg;
    cfg.families = {"regular", "gnp", "bipartite", "turan", "disjoint-cliques", "blowup"};
    cfg.degrees = {3, 4};
    cfg.n = 40;
    cfg.instances = 2;
    cfg.algos = {"sdp", "composite"};
    cfg.cut.repeats = 2;
    const auto a = run_bench(cfg);
    ASSERT_EQ(a.size(), 6u * 2 * 2 * 2);
    EXPECT_EQ(a[0].graph, "regular:n=40:d=3:i=0");
    EXPECT_EQ(a[0].algo, "sdp");
    EXPECT_EQ(a[1].algo, "composite");
    EXPECT_EQ(a[0].seed, derive_seed(0, 0));
    EXPECT_EQ(a[2].seed, derive_seed(0, 1));
    auto b = run_bench(cfg);
    for (std::size_t k = 0; k < a.size(); ++k) {
        auto x = a[k], y = b[k];
        x.ms = y.ms = 0.0;
        EXPECT_EQ(x, y);
    }
}

TEST(Bench, CycleFreeInstances) {
    BenchConfig cfg;
    cfg.degrees = {3};
    cfg.n = 60;
    cfg.cr_free = 5;
    const auto reps = run_bench(cfg);
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_NE(reps[0].graph.find("c5-free"), std::string::npos);
}

TEST(Verify, AllSuitesPass) {
    for (const auto& name : verify_suites()) {
        const auto res = run_verify_suite(name, 3);
        EXPECT_TRUE(res.passed()) << name << ": " << res.first_failure;
        EXPECT_GT(res.cases, 0u) << name;
    }
    EXPECT_THROW(run_verify_suite("nope", 0), Error);
}
