// Command-line front end: gen, cut, bench, verify.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdpcut/sdpcut.hpp"

namespace {

using namespace sdpcut;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

std::optional<double> parse_epsilon(const std::string& s) {
    if (s == "auto") return std::nullopt;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw Error(Errc::InvalidArgument, "--epsilon expects a number or 'auto'");
    return v;
}

std::string render(const std::vector<RunReport>& reports, const std::string& format) {
    if (format == "csv") {
        std::string out = std::string(kCsvHeader) + "\n";
        for (const auto& r : reports) out += to_csv_row(r) + "\n";
        return out;
    }
    nlohmann::json j = reports.size() == 1 ? nlohmann::json(reports.front()) : nlohmann::json(reports);
    return j.dump(2) + "\n";
}

struct CutFlags {
    std::string epsilon = "auto";
    CutConfig cfg;
    std::string format = "json";
    std::string out = "-";
};

void add_cut_flags(CLI::App* cmd, CutFlags& f) {
    cmd->add_option("--seed", f.cfg.seed, "Random seed")->capture_default_str();
    cmd->add_option("--epsilon", f.epsilon, "Epsilon, a real number or 'auto' (1/sqrt(degeneracy))")
        ->capture_default_str();
    cmd->add_option("--repeats", f.cfg.repeats, "Independent rounding repeats")->capture_default_str();
    cmd->add_option("--r", f.cfg.r, "Clique size r for kr / chromatic")->capture_default_str();
    cmd->add_option("--t", f.cfg.t, "Number of parts for tcut")->capture_default_str();
    cmd->add_option("--p", f.cfg.p, "Sampling probability for sampled")->capture_default_str();
    cmd->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    cmd->add_option("--out", f.out, "Output path, '-' for stdout")->capture_default_str();
}

int run(int argc, char** argv) {
    CLI::App app{"Max-Cut with explicit SDP solutions, decompositions and certified bounds"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph in the canonical edge-list format");
    std::string model = "regular";
    GenSpec spec;
    int gen_cr_free = 0;
    std::string gen_out = "-";
    gen->add_option("--model", model, "regular | gnp | bipartite | turan | blowup | disjoint-cliques")
        ->capture_default_str();
    gen->add_option("--n", spec.n, "Vertex count (regular, gnp, turan)");
    gen->add_option("--d", spec.d, "Degree (regular)");
    gen->add_option("--p", spec.p, "Edge probability (gnp, bipartite)");
    gen->add_option("--a", spec.a, "First part size (bipartite)");
    gen->add_option("--b", spec.b, "Second part size (bipartite)");
    gen->add_option("--parts", spec.parts, "Number of parts (turan) or cycle length (blowup)");
    gen->add_option("--size", spec.size, "Blob size (blowup) or clique size (disjoint-cliques)");
    gen->add_option("--count", spec.count, "Number of cliques (disjoint-cliques)");
    gen->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
    gen->add_option("--cr-free", gen_cr_free, "Afterwards delete edges until no cycle of this length remains");
    gen->add_option("--out", gen_out, "Output path, '-' for stdout")->capture_default_str();

    // cut
    auto* cut = app.add_subcommand("cut", "Run one cut algorithm on a graph and print a report");
    CutFlags cut_flags;
    std::string input;
    cut->add_option("input", input, "Graph file (edge list or DIMACS); stdin if omitted");
    cut->add_option("--algo", cut_flags.cfg.algo, "exact | sdp | composite | kr | chromatic | tcut | sampled")
        ->check(CLI::IsMember(cut_algorithms()))
        ->capture_default_str();
    add_cut_flags(cut, cut_flags);

    // bench
    auto* bench = app.add_subcommand("bench", "Sweep generated families over degrees and emit surplus-vs-d CSV");
    CutFlags bench_flags;
    bench_flags.format = "csv";
    BenchConfig bcfg;
    int bench_cr_free = 0;
    bench->add_option("--families", bcfg.families, "regular gnp bipartite turan disjoint-cliques blowup")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--degrees", bcfg.degrees, "Degree knob values")->delimiter(',')->capture_default_str();
    bench->add_option("--n", bcfg.n, "Vertex count")->capture_default_str();
    bench->add_option("--instances", bcfg.instances, "Instances per (family, degree)")->capture_default_str();
    bench->add_option("--algos", bcfg.algos, "Algorithms to run on each instance")
        ->delimiter(',')
        ->check(CLI::IsMember(cut_algorithms()))
        ->capture_default_str();
    bench->add_option("--cr-free", bench_cr_free, "Delete all cycles of this length from each instance first");
    add_cut_flags(bench, bench_flags);

    // verify
    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    std::vector<std::string> suites = verify_suites();
    std::uint64_t verify_seed = 0;
    verify->add_option("--suite", suites, "Suites to run (default: all)")
        ->delimiter(',')
        ->check(CLI::IsMember(verify_suites()));
    verify->add_option("--seed", verify_seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*gen) {
        const auto m = parse_model(model);
        if (!m) throw Error(Errc::InfeasibleSpec, "unknown model '" + model + "'");
        spec.model = *m;
        auto g = family(spec);
        if (gen_cr_free > 0) g = make_cr_free(g, gen_cr_free);
        write_output(gen_out, write_edge_list(g));
        return 0;
    }
    if (*cut) {
        cut_flags.cfg.epsilon = parse_epsilon(cut_flags.epsilon);
        const auto g = parse_graph(read_input(input));
        const auto name = input.empty() || input == "-" ? std::string("stdin") : input;
        write_output(cut_flags.out, render({run_cut(g, name, cut_flags.cfg)}, cut_flags.format));
        return 0;
    }
    if (*bench) {
        bench_flags.cfg.epsilon = parse_epsilon(bench_flags.epsilon);
        bcfg.cut = bench_flags.cfg;
        if (bench_cr_free > 0) bcfg.cr_free = bench_cr_free;
        write_output(bench_flags.out, render(run_bench(bcfg), bench_flags.format));
        return 0;
    }
    bool ok = true;
    for (const auto& name : suites) {
        const auto res = run_verify_suite(name, verify_seed);
        std::cout << (res.passed() ? "PASS " : "FAIL ") << res.name << " (" << res.cases << " cases";
        if (!res.passed()) std::cout << ", " << res.failures << " failed; first: " << res.first_failure;
        std::cout << ")\n";
        ok = ok && res.passed();
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sdpcut::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sdpcut::exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
