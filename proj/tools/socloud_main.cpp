// Command-line front end: metrics, externality, sweep, conjecture-scan.
//
// Every command prints to stdout by default and writes files into a
// directory when --out is given. Outputs are deterministic for a fixed
// command line, byte for byte.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "socloud/socloud.hpp"

namespace fs = std::filesystem;

namespace {

socloud::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    try {
        return socloud::read_edge_list(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& emit) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    emit(out);
}

fs::path prepare_out_dir(const std::string& out) {
    fs::path dir(out);
    fs::create_directories(dir);
    return dir;
}

std::pair<socloud::NodeId, socloud::NodeId> parse_link(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::runtime_error("--link expects '<j>,<k>', got '" + text + "'");
    }
    try {
        std::size_t used_j = 0;
        std::size_t used_k = 0;
        const int j = std::stoi(text.substr(0, comma), &used_j);
        const std::string rest = text.substr(comma + 1);
        const int k = std::stoi(rest, &used_k);
        if (used_j != comma || used_k != rest.size()) throw std::invalid_argument(text);
        return {j, k};
    } catch (const std::exception&) {
        throw std::runtime_error("--link expects '<j>,<k>', got '" + text + "'");
    }
}

int run_metrics(const std::string& input, const std::string& format, const std::string& out) {
    const socloud::Graph g = load_graph(input);
    const socloud::MetricsBundle bundle = socloud::compute_metrics(g);
    if (out.empty()) {
        if (format == "json") {
            std::cout << socloud::metrics_to_json(bundle).dump(2) << "\n";
        } else {
            socloud::write_metrics_csv(bundle, std::cout);
        }
        return 0;
    }
    const fs::path dir = prepare_out_dir(out);
    if (format == "json") {
        write_file(dir / "metrics.json",
                   [&](std::ostream& os) { os << socloud::metrics_to_json(bundle).dump(2) << "\n"; });
    } else {
        write_file(dir / "metrics.csv",
                   [&](std::ostream& os) { socloud::write_metrics_csv(bundle, os); });
        write_file(dir / "alpha.csv",
                   [&](std::ostream& os) { socloud::write_alpha_csv(bundle.alpha, os); });
    }
    return 0;
}

int run_externality(const std::string& input, const std::string& link, const std::string& out) {
    const socloud::Graph g = load_graph(input);
    const auto [j, k] = parse_link(link);
    const socloud::ExternalityReport report = socloud::externality_report(g, j, k);
    if (out.empty()) {
        socloud::write_externality_csv(report, std::cout);
        return 0;
    }
    const fs::path dir = prepare_out_dir(out);
    write_file(dir / "externality.csv",
               [&](std::ostream& os) { socloud::write_externality_csv(report, os); });
    write_file(dir / "externality.json", [&](std::ostream& os) {
        os << socloud::externality_to_json(report).dump(2) << "\n";
    });
    return 0;
}

int run_sweep(int n_min, int n_max, const std::string& out) {
    const socloud::SweepSummary summary = socloud::ring_sweep(n_min, n_max);
    const socloud::FindingsVerdict verdict = socloud::findings_check(summary);
    if (out.empty()) {
        socloud::write_sweep_csv(summary, std::cout);
        return 0;
    }
    const fs::path dir = prepare_out_dir(out);
    write_file(dir / "records.csv", [&](std::ostream& os) { socloud::write_sweep_csv(summary, os); });
    write_file(dir / "summary.json", [&](std::ostream& os) {
        os << socloud::sweep_summary_to_json(summary, verdict).dump(2) << "\n";
    });
    write_file(dir / "plot_data.csv",
               [&](std::ostream& os) { socloud::write_plot_data(summary, os); });
    write_file(dir / "plot.gp",
               [&](std::ostream& os) { socloud::write_plot_script(os, "plot_data.csv"); });
    return 0;
}

int run_conjecture_scan(int n_min, int n_max, int random_count, double edge_prob,
                        std::uint64_t seed, const std::string& out) {
    if (n_min < 3 || n_min > n_max) {
        throw std::runtime_error("scan range requires 3 <= min <= max");
    }
    std::vector<socloud::ScanCase> cases;
    for (int n = n_min; n <= n_max; ++n) {
        cases.push_back(
            socloud::make_scan_case("ring_" + std::to_string(n), socloud::ring_graph(n)));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(n_min, n_max);
    for (int i = 0; i < random_count; ++i) {
        const int n = size_dist(rng);
        socloud::Graph g = socloud::random_graph(n, edge_prob, rng);
        cases.push_back(socloud::make_scan_case(
            "random_" + std::to_string(i) + "_n" + std::to_string(n), std::move(g)));
    }

    std::size_t links_checked = 0;
    for (const socloud::ScanCase& c : cases) links_checked += c.candidates.size();
    const std::vector<socloud::ConjectureViolation> violations = socloud::conjecture_scan(cases);

    std::cout << "graphs checked: " << cases.size() << "\n"
              << "candidate links: " << links_checked << "\n"
              << "violations: " << violations.size() << "\n";
    for (const socloud::ConjectureViolation& v : violations) {
        std::cout << "violation: " << v.graph_id << " link (" << v.j << "," << v.k << ") agent "
                  << v.agent << " delta_gamma " << v.delta_gamma << " delta_phi " << v.delta_phi
                  << "\n";
    }

    if (!out.empty()) {
        const fs::path dir = prepare_out_dir(out);
        write_file(dir / "violations.csv",
                   [&](std::ostream& os) { socloud::write_violations_csv(violations, os); });
        const nlohmann::json manifest{{"ring_min", n_min},
                                      {"ring_max", n_max},
                                      {"random_count", random_count},
                                      {"edge_prob", edge_prob},
                                      {"seed", seed},
                                      {"graphs_checked", cases.size()},
                                      {"links_checked", links_checked},
                                      {"violations", violations.size()}};
        write_file(dir / "manifest.json",
                   [&](std::ostream& os) { os << manifest.dump(2) << "\n"; });
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"social cloud network metrics and link externalities"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "csv";
    std::string link;
    std::string out;
    int n_min = 4;
    int n_max = 30;
    int random_count = 0;
    double edge_prob = 0.3;
    std::uint64_t seed = 0;

    CLI::App* metrics = app.add_subcommand("metrics", "closeness, resource and availability tables");
    metrics->add_option("--input", input, "edge-list file")->required();
    metrics->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    metrics->add_option("--out", out, "output directory");

    CLI::App* externality =
        app.add_subcommand("externality", "third-party effects of adding one link");
    externality->add_option("--input", input, "edge-list file")->required();
    externality->add_option("--link", link, "endpoints as <j>,<k>")->required();
    externality->add_option("--out", out, "output directory");

    CLI::App* sweep = app.add_subcommand("sweep", "ring-network link addition sweep");
    sweep->add_option("--min", n_min, "smallest ring size");
    sweep->add_option("--max", n_max, "largest ring size");
    sweep->add_option("--out", out, "output directory");

    CLI::App* scan =
        app.add_subcommand("conjecture-scan", "search for positive externalities without "
                                              "closeness gains");
    scan->add_option("--min", n_min, "smallest graph size");
    scan->add_option("--max", n_max, "largest graph size");
    scan->add_option("--random", random_count, "extra random graphs to scan");
    scan->add_option("--edge-prob", edge_prob, "edge probability for random graphs")
        ->check(CLI::Range(0.0, 1.0));
    scan->add_option("--seed", seed, "random corpus seed");
    scan->add_option("--out", out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (metrics->parsed()) return run_metrics(input, format, out);
        if (externality->parsed()) return run_externality(input, link, out);
        if (sweep->parsed()) return run_sweep(n_min, n_max, out);
        return run_conjecture_scan(n_min, n_max, random_count, edge_prob, seed, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
