// Command-line front end: build planes, search incidence-free pairs, and
// produce or check matching and coloring certificates.
//
// Exit codes: 0 success, 2 validation failure, 3 budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "incfree/design.hpp"
#include "incfree/error.hpp"
#include "incfree/incidence_free.hpp"
#include "incfree/io.hpp"
#include "incfree/kneser.hpp"
#include "incfree/pair_matching.hpp"
#include "incfree/report.hpp"

namespace {

using namespace incfree;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_budget = 3;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    return in;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << content;
}

SymmetricDesign load_design(const std::string& path, bool validate) {
    auto in = open_input(path);
    return read_design(in, validate);
}

Certificate load_cert(const std::string& path, const SymmetricDesign& design) {
    auto in = open_input(path);
    return load_certificate(in, design);
}

struct PlaneArgs {
    std::size_t q = 0;
    std::string out;
};

struct FindArgs {
    std::string design;
    std::size_t q = 0;
    bool exact = false;
    bool greedy = false;
    double time_budget = 120.0;
    std::uint64_t node_budget = UINT64_MAX;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::size_t restarts = 64;
    bool no_bound = false;
    bool no_validate = false;
    std::string out;
};

struct PairArgs {
    std::string design;
    std::string pair;
    std::string out;
};

struct VerifyArgs {
    std::string design;
    std::string cert;
};

struct TableArgs {
    std::size_t max_q = 13;
    std::size_t exact_up_to = 5;
    double time_budget = 120.0;
    std::uint64_t seed = 1;
};

int run_plane(const PlaneArgs& a) {
    emit(a.out, design_to_string(build_pg2(a.q)));
    return exit_ok;
}

int run_find_pair(const FindArgs& a) {
    const auto design = a.design.empty() ? build_pg2(a.q) : load_design(a.design, !a.no_validate);
    if (a.greedy) {
        const auto cert = greedy_pair(design, a.seed, a.restarts);
        emit(a.out, certificate_to_string(make_certificate(design, cert)));
        std::cerr << "greedy pair of size " << cert.size() << '\n';
        return exit_ok;
    }
    SearchConfig cfg;
    cfg.time_budget = std::chrono::milliseconds(static_cast<long long>(a.time_budget * 1000.0));
    cfg.node_budget = a.node_budget;
    cfg.use_bound_pruning = !a.no_bound;
    cfg.workers = a.workers;
    cfg.seed = a.seed;
    try {
        const auto cert = max_pair_exact(design, cfg);
        emit(a.out, certificate_to_string(make_certificate(design, cert)));
        std::cerr << "maximum pair of size " << cert.size() << " (" << cert.nodes_explored << " nodes)\n";
        return exit_ok;
    } catch (const BudgetExhausted& e) {
        emit(a.out, certificate_to_string(make_certificate(design, e.best())));
        std::cerr << e.what() << '\n';
        return exit_budget;
    }
}

int run_match(const PairArgs& a) {
    const auto design = load_design(a.design, true);
    auto cert = load_cert(a.pair, design);
    const RemovedContext ctx(design, cert.pair);
    cert.matching = construct_perfect_matching(ctx);
    emit(a.out, certificate_to_string(cert));
    std::cerr << "perfect matching of size " << cert.matching->size() << '\n';
    return exit_ok;
}

int run_color(const PairArgs& a) {
    const auto design = load_design(a.design, true);
    auto cert = load_cert(a.pair, design);
    const auto coloring = coloring_from_pair(design, cert.pair);
    if (const auto report = verify_coloring(design, coloring); !report.passed()) {
        std::cerr << "coloring failed verification: " << report.summary() << '\n';
        return exit_invalid;
    }
    cert.coloring = coloring.anchors;
    emit(a.out, certificate_to_string(cert));
    std::cerr << "chamber coloring with " << coloring.color_count() << " colors\n";
    return exit_ok;
}

int run_verify(const VerifyArgs& a) {
    const auto design = load_design(a.design, true);
    auto in = open_input(a.cert);
    const auto cert = read_certificate(in);
    const auto report = verify_certificate(design, cert);
    if (!report.passed()) {
        std::cout << "invalid: " << report.summary() << '\n';
        return exit_invalid;
    }
    std::cout << "ok: pair of size " << cert.pair.size();
    if (cert.matching) std::cout << ", matching of size " << cert.matching->size();
    if (cert.coloring) std::cout << ", coloring with " << cert.coloring->size() << " colors";
    std::cout << '\n';
    return exit_ok;
}

int run_table(const TableArgs& a) {
    TableOptions options;
    options.max_q = a.max_q;
    options.exact_up_to = a.exact_up_to;
    options.search.time_budget = std::chrono::milliseconds(static_cast<long long>(a.time_budget * 1000.0));
    options.search.seed = a.seed;
    const auto rows = build_table(options);
    std::cout << format_table(rows);
    for (const auto& r : rows)
        if (!r.issues.empty()) return exit_invalid;
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Incidence-free pairs, perfect matchings and flag Kneser colorings of symmetric designs"};
    app.require_subcommand(1);

    PlaneArgs plane_args;
    auto* plane = app.add_subcommand("plane", "Write PG(2,q) as a design file");
    plane->add_option("--q", plane_args.q, "Plane order (prime power)")->required();
    plane->add_option("--out", plane_args.out, "Output file (default stdout)");

    FindArgs find_args;
    auto* find = app.add_subcommand("find-pair", "Search for a maximum equinumerous incidence-free pair");
    auto* design_opt = find->add_option("--design", find_args.design, "Design file");
    auto* q_opt = find->add_option("--q", find_args.q, "Use PG(2,q)");
    design_opt->excludes(q_opt);
    auto* exact_flag = find->add_flag("--exact", find_args.exact, "Exact branch and bound (default)");
    auto* greedy_flag = find->add_flag("--greedy", find_args.greedy, "Randomised greedy heuristic");
    exact_flag->excludes(greedy_flag);
    find->add_option("--time-budget", find_args.time_budget, "Seconds for exact search")->check(CLI::PositiveNumber);
    find->add_option("--node-budget", find_args.node_budget, "Node limit for exact search")->check(CLI::PositiveNumber);
    find->add_option("--workers", find_args.workers, "Worker threads for exact search")->check(CLI::PositiveNumber);
    find->add_option("--seed", find_args.seed, "Random seed");
    find->add_option("--restarts", find_args.restarts, "Greedy restarts")->check(CLI::PositiveNumber);
    find->add_flag("--no-bound", find_args.no_bound, "Disable Haemers-bound stopping for planes");
    find->add_flag("--no-validate", find_args.no_validate, "Skip design validation on load");
    find->add_option("--out", find_args.out, "Certificate file (default stdout)");

    PairArgs match_args;
    auto* match = app.add_subcommand("match", "Perfect matching of the design with the pair removed");
    match->add_option("--design", match_args.design, "Design file")->required();
    match->add_option("--pair", match_args.pair, "Pair certificate")->required();
    match->add_option("--out", match_args.out, "Certificate file (default stdout)");

    PairArgs color_args;
    auto* color = app.add_subcommand("color", "Chamber-coclique coloring of the flag Kneser graph from a pair");
    color->add_option("--design", color_args.design, "Plane design file")->required();
    color->add_option("--pair", color_args.pair, "Pair certificate")->required();
    color->add_option("--out", color_args.out, "Certificate file (default stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check a certificate against a design");
    verify->add_option("--design", verify_args.design, "Design file")->required();
    verify->add_option("--cert", verify_args.cert, "Certificate file")->required();

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Bounds and incidence-free numbers for small planes");
    table->add_option("--max-q", table_args.max_q, "Largest plane order");
    table->add_option("--exact-up-to", table_args.exact_up_to, "Exact search up to this order");
    table->add_option("--time-budget", table_args.time_budget, "Seconds per exact search")->check(CLI::PositiveNumber);
    table->add_option("--seed", table_args.seed, "Random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*plane) return run_plane(plane_args);
        if (*find) {
            if (find_args.design.empty() && find_args.q == 0) {
                std::cerr << "find-pair needs --design or --q\n";
                return exit_invalid;
            }
            return run_find_pair(find_args);
        }
        if (*match) return run_match(match_args);
        if (*color) return run_color(color_args);
        if (*verify) return run_verify(verify_args);
        if (*table) return run_table(table_args);
    } catch (const Error& e) {
        std::cerr << e.what();
        if (!e.witness().empty()) {
            std::cerr << " (witness:";
            for (auto w : e.witness()) std::cerr << ' ' << w;
            std::cerr << ')';
        }
        std::cerr << '\n';
        return e.kind() == ErrorKind::BudgetExhausted ? exit_budget : exit_invalid;
    }
    return exit_ok;
}
