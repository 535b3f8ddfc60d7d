#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subtropical/cli/report.hpp"

namespace cli = subtropical::cli;
using subtropical::Integer;
using subtropical::RangeBound;

namespace {

struct Flags {
    std::string mode = "positive";
    bool existence_only = false;
    std::string orthant;
    std::vector<std::string> lower, upper;
    bool difference = false;
    unsigned approx_digits = 6;
    std::string max_exponent = "1048576";
};

void add_solve_flags(CLI::App &app, Flags &f) {
    app.add_option("--mode", f.mode, "Search mode")->check(CLI::IsMember({"positive", "general"}));
    app.add_flag("--existence-only", f.existence_only, "Only decide whether a positive value exists");
    app.add_option("--orthant", f.orthant, "Sign pattern such as +-+, one sign per variable");
    app.add_option("--lower", f.lower, "Search with VAR > Q (VAR=Q)")->take_all();
    app.add_option("--upper", f.upper, "Search with VAR < Q (VAR=Q)")->take_all();
    app.add_flag("--difference", f.difference, "Substitute x - x' for every variable");
    app.add_option("--approx-digits", f.approx_digits, "Digits after the decimal point");
    app.add_option("--max-exponent", f.max_exponent, "Largest admissible |n_i|");
}

cli::VariableBound parse_bound(const std::string &spec, RangeBound::Kind kind) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw cli::UsageError("expected VAR=Q, got '" + spec + "'");
    try {
        return {spec.substr(0, eq), RangeBound{kind, subtropical::parse_rational(spec.substr(eq + 1))}};
    } catch (const std::invalid_argument &) {
        throw cli::UsageError("bad rational in '" + spec + "'");
    }
}

cli::RunConfig make_config(const Flags &f, bool json) {
    cli::RunConfig c;
    c.mode = f.mode == "general" ? subtropical::SearchMode::general : subtropical::SearchMode::positive;
    c.existence_only = f.existence_only;
    if (!f.orthant.empty()) {
        std::vector<int> signs;
        for (char ch : f.orthant) {
            if (ch == '+') signs.push_back(1);
            else if (ch == '-') signs.push_back(-1);
            else throw cli::UsageError("orthant must consist of '+' and '-'");
        }
        c.orthant = std::move(signs);
    }
    for (const auto &s : f.lower) c.ranges.push_back(parse_bound(s, RangeBound::Kind::lower));
    for (const auto &s : f.upper) c.ranges.push_back(parse_bound(s, RangeBound::Kind::upper));
    c.difference = f.difference;
    c.approx_digits = f.approx_digits;
    if (c.max_exponent.set_str(f.max_exponent, 10) != 0 || c.max_exponent <= 0)
        throw cli::UsageError("--max-exponent must be a positive integer");
    c.output = json ? cli::OutputFormat::json : cli::OutputFormat::text;
    return c;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Subtropical real root finder"};
    app.require_subcommand(1);

    Flags solve_flags, batch_flags;
    std::string file, dir, format = "table";
    bool json = false;
    unsigned jobs = 0;

    auto *solve = app.add_subcommand("solve", "Find a real zero of the polynomial in FILE");
    solve->add_option("FILE", file)->required();
    solve->add_flag("--json", json, "Print JSON");
    add_solve_flags(*solve, solve_flags);

    auto *batch = app.add_subcommand("batch", "Solve every file in DIR and print statistics");
    batch->add_option("DIR", dir)->required()->check(CLI::ExistingDirectory);
    batch->add_option("--format", format)->check(CLI::IsMember({"table", "csv"}));
    batch->add_option("--jobs", jobs, "Worker threads (0 = one per core)");
    add_solve_flags(*batch, batch_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*solve) {
            auto config = make_config(solve_flags, json);
            auto r = cli::solve_file(file, config);
            if (!r.error.empty()) std::cerr << "error: " << r.error << "\n";
            if (json) std::cout << r.json.dump(2) << "\n";
            else if (r.error.empty()) std::cout << r.text;
            return cli::exit_code(r.report.status);
        }
        auto config = make_config(batch_flags, false);
        auto fmt = format == "csv" ? cli::TableFormat::csv : cli::TableFormat::table;
        auto result = cli::batch_run(dir, config, jobs);
        std::cout << cli::render_reports(result.reports, fmt) << "\n" << cli::render_summary(result.summary, fmt);
        return 0;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
