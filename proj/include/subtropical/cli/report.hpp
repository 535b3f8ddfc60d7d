#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subtropical/engine.hpp"
#include "subtropical/poly.hpp"

namespace subtropical::cli {

enum class OutputFormat { text, json };

struct VariableBound {
    std::string variable;
    RangeBound bound;
};

struct RunConfig {
    SearchMode mode = SearchMode::positive;
    bool existence_only = false;
    /// One sign per variable of the input, in variable order.
    std::optional<std::vector<int>> orthant;
    std::vector<VariableBound> ranges;
    bool difference = false;
    unsigned approx_digits = 6;
    Integer max_exponent = pow2(20);
    OutputFormat output = OutputFormat::text;
};

enum class Status { zero, all_ones, definite, positive_value, failed, error };

std::string to_string(Status s);

struct InstanceReport {
    std::string name;
    Status status = Status::error;
    std::size_t num_terms = 0;
    std::size_t dimension = 0;
    std::size_t max_degree = 0;
    std::size_t lp_solves = 0;
    std::size_t candidates_tried = 0;
    std::size_t doubling_steps = 0;
    std::int64_t time_ms = 0;
};

/// A coordinate of a zero in the input's own variables.
struct ReportedCoordinate {
    std::string variable;
    ZeroCoordinate value;
};

struct SolveResult {
    InstanceReport report;
    nlohmann::json json;
    std::string text;
    /// Zero mapped back to the input's coordinates, when one was found.
    std::vector<ReportedCoordinate> zero;
    Outcome outcome;
    std::string error;
};

/// 0 for zero / all_ones / definite / positive_value, 1 for failed, 2 for
/// errors.
int exit_code(Status s);

/// Thrown for configuration problems that do not depend on the input file
/// (bad orthant length, unknown variable in a range bound).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Applies the configured transformations, runs find_zero and maps the
/// result back. Throws UsageError for configuration that does not fit f.
SolveResult solve_polynomial(const std::string &name, const MultiPoly &f, const RunConfig &config);

/// Reads and parses the file, then solve_polynomial. Read, parse and usage
/// errors produce a report with status error.
SolveResult solve_file(const std::filesystem::path &path, const RunConfig &config);

struct BatchSummary {
    std::size_t instances = 0;
    std::size_t definite = 0;
    std::size_t remaining = 0;
    std::size_t found = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;
    double failed_percent = 0;
    std::size_t largest_size = 0;
    std::size_t largest_dimension = 0;
    std::size_t largest_degree = 0;
    double max_time_s = 0;
    double total_time_s = 0;
};

struct BatchResult {
    std::vector<InstanceReport> reports;
    BatchSummary summary;
};

BatchSummary summarize(const std::vector<InstanceReport> &reports);

/// Solves every file of dir in lexicographic order, jobs files at a time
/// (0 means one per hardware thread).
BatchResult batch_run(const std::filesystem::path &dir, const RunConfig &config, unsigned jobs = 0);

enum class TableFormat { table, csv };

std::string render_reports(const std::vector<InstanceReport> &reports, TableFormat format);
std::string render_summary(const BatchSummary &summary, TableFormat format);

} // namespace subtropical::cli
