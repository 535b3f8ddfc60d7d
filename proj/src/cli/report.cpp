#include "subtropical/cli/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "subtropical/cli/parser.hpp"

namespace subtropical::cli {

std::string to_string(Status s) {
    switch (s) {
    case Status::zero: return "zero";
    case Status::all_ones: return "all_ones";
    case Status::definite: return "definite";
    case Status::positive_value: return "positive_value";
    case Status::failed: return "failed";
    case Status::error: return "error";
    }
    return "error";
}

int exit_code(Status s) {
    switch (s) {
    case Status::failed: return 1;
    case Status::error: return 2;
    default: return 0;
    }
}

namespace {

// z = matrix * y + offset, mapping coordinates of the transformed polynomial
// back to the input's.
struct PointMap {
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> offset;

    static PointMap identity(std::size_t d) {
        PointMap m{std::vector<std::vector<Rational>>(d, std::vector<Rational>(d)), std::vector<Rational>(d)};
        for (std::size_t i = 0; i < d; ++i) m.matrix[i][i] = 1;
        return m;
    }

    // Substitutes y = inner * y' + shift.
    void compose(const std::vector<std::vector<Rational>> &inner, const std::vector<Rational> &shift) {
        const std::size_t rows = matrix.size(), mid = shift.size();
        const std::size_t cols = inner.empty() ? 0 : inner.front().size();
        std::vector<std::vector<Rational>> next(rows, std::vector<Rational>(cols));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < mid; ++j) {
                if (sgn(matrix[i][j]) == 0) continue;
                offset[i] += matrix[i][j] * shift[j];
                for (std::size_t k = 0; k < cols; ++k) next[i][k] += matrix[i][j] * inner[j][k];
            }
        }
        matrix = std::move(next);
    }

    // Coordinate i as a + b * r for the transformed point p + r (q - p).
    std::pair<Rational, Rational> along(std::size_t i, std::span<const Rational> p, std::span<const Rational> q) const {
        Rational a = offset[i], b = 0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            a += matrix[i][j] * p[j];
            b += matrix[i][j] * (q[j] - p[j]);
        }
        return {a, b};
    }
};

std::vector<std::vector<Rational>> identity_matrix(std::size_t d) { return PointMap::identity(d).matrix; }

nlohmann::json integer_strings(const UniPolyZ &p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

std::string render_interval(const RealAlgebraicNumber &x) {
    return "]" + x.lower().get_str() + ", " + x.upper().get_str() + "[";
}

nlohmann::json witness_json(const Witness &w) {
    nlohmann::json j;
    j["n"] = w.n;
    j["t"] = w.log2_t ? nlohmann::json(pow2(static_cast<std::uint64_t>(*w.log2_t)).get_str()) : nlohmann::json(nullptr);
    j["mu"] = w.mu ? nlohmann::json(*w.mu + 1) : nlohmann::json(nullptr);
    if (w.point) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto &c : w.point->coords()) pts.push_back(value_of(c).get_str());
        j["point"] = std::move(pts);
    } else {
        j["point"] = nullptr;
    }
    return j;
}

nlohmann::json coordinate_json(const ZeroCoordinate &z, unsigned digits) {
    nlohmann::json j;
    j["defining"] = integer_strings(z.value.defining());
    if (z.value.is_exact()) {
        j["interval"] = nullptr;
        j["exact"] = z.value.value().get_str();
    } else {
        j["interval"] = {z.value.lower().get_str(), z.value.upper().get_str()};
        j["exact"] = nullptr;
    }
    j["approx"] = z.decimal ? *z.decimal : approximate(z.value, digits);
    return j;
}

std::string render_text(const SolveResult &r, const MultiPoly &solved, unsigned digits) {
    std::ostringstream out;
    out << r.report.name << ": " << to_string(r.report.status) << "\n";
    out << "  terms " << r.report.num_terms << ", variables " << r.report.dimension << ", max degree "
        << r.report.max_degree << "\n";
    if (const auto *d = std::get_if<Definite>(&r.outcome.result))
        out << "  sign-definite on the open positive orthant: " << (d->sign > 0 ? "positive" : "negative") << "\n";
    if (r.outcome.witness) {
        const Witness &w = *r.outcome.witness;
        out << "  direction n = (";
        for (std::size_t i = 0; i < w.n.size(); ++i) out << (i ? ", " : "") << w.n[i];
        out << "), c = " << w.c.get_str();
        if (w.mu) out << ", negated coordinate " << solved.variables()[*w.mu];
        if (w.log2_t) out << ", t = 2^" << *w.log2_t;
        out << "\n";
    }
    if (const auto *z = std::get_if<ZeroFound>(&r.outcome.result)) {
        if (!z->certificate.gbar.is_zero()) out << "  gbar = " << to_string(z->certificate.gbar, "y") << "\n";
        if (!z->certificate.r.is_exact()) out << "  y in " << render_interval(z->certificate.r) << "\n";
    }
    for (const auto &c : r.zero) {
        out << "  " << c.variable << " = ";
        if (c.value.value.is_exact()) out << c.value.value.value().get_str();
        else out << "<" << to_string(c.value.value.defining(), "w") << ", " << render_interval(c.value.value) << ">";
        out << "  ~ " << (c.value.decimal ? *c.value.decimal : approximate(c.value.value, digits)) << "\n";
    }
    return out.str();
}

} // namespace

SolveResult solve_polynomial(const std::string &name, const MultiPoly &f, const RunConfig &config) {
    SolveResult r{{}, {}, {}, {}, Outcome{Failed{}, std::nullopt, {}, {}}, {}};
    r.report.name = name;
    r.report.num_terms = f.num_terms();
    r.report.dimension = f.dimension();
    r.report.max_degree = f.max_degree();

    const std::size_t d = f.dimension();
    MultiPoly g = f;
    PointMap map = PointMap::identity(d);
    if (config.orthant) {
        if (config.orthant->size() != d)
            throw UsageError("orthant has " + std::to_string(config.orthant->size()) + " signs but the polynomial has " +
                             std::to_string(d) + " variables");
        g = orthant_transform(g, *config.orthant);
        auto s = identity_matrix(d);
        for (std::size_t i = 0; i < d; ++i) s[i][i] = (*config.orthant)[i];
        map.compose(s, std::vector<Rational>(d));
    }
    std::vector<bool> bounded(d, false);
    for (const auto &vb : config.ranges) {
        auto it = std::find(f.variables().begin(), f.variables().end(), vb.variable);
        if (it == f.variables().end()) throw UsageError("unknown variable '" + vb.variable + "' in range bound");
        const auto i = static_cast<std::size_t>(it - f.variables().begin());
        if (bounded[i]) throw UsageError("more than one range bound on '" + vb.variable + "'");
        if (config.orthant && (*config.orthant)[i] < 0)
            throw UsageError("range bound on '" + vb.variable + "' conflicts with a negative orthant sign");
        bounded[i] = true;
        g = range_transform(g, i, vb.bound);
        auto s = identity_matrix(d);
        std::vector<Rational> shift(d);
        if (vb.bound.kind == RangeBound::Kind::lower) {
            shift[i] = vb.bound.value;
        } else {
            s[i][i] = -1;
            shift[i] = -vb.bound.value;
        }
        map.compose(s, shift);
    }
    if (config.difference) {
        g = difference_transform(g);
        std::vector<std::vector<Rational>> s(d, std::vector<Rational>(2 * d));
        for (std::size_t i = 0; i < d; ++i) {
            s[i][i] = 1;
            s[i][d + i] = -1;
        }
        map.compose(s, std::vector<Rational>(d));
    }

    FindZeroOptions opts;
    opts.mode = config.mode;
    opts.existence_only = config.existence_only;
    opts.approx_digits = config.approx_digits;
    opts.engine.max_exponent = config.max_exponent;
    r.outcome = find_zero(g, opts);

    r.report.lp_solves = r.outcome.stats.lp_solves;
    r.report.candidates_tried = r.outcome.stats.candidates_tried;
    r.report.doubling_steps = r.outcome.stats.doubling_steps;
    r.report.time_ms = r.outcome.elapsed.count();

    const std::vector<Rational> ones(g.dimension(), Rational(1));
    std::visit(
        [&](const auto &res) {
            using T = std::decay_t<decltype(res)>;
            if constexpr (std::is_same_v<T, ZeroFound>) {
                r.report.status = Status::zero;
                const auto &cert = res.certificate;
                const auto p = cert.p.to_rationals();
                for (std::size_t i = 0; i < d; ++i) {
                    auto [a, b] = map.along(i, p, cert.q);
                    r.zero.push_back(
                        {f.variables()[i], make_zero_coordinate(affine_image(cert.r, a, b), config.approx_digits)});
                }
            } else if constexpr (std::is_same_v<T, AllOnes>) {
                r.report.status = Status::all_ones;
                for (std::size_t i = 0; i < d; ++i) {
                    auto [a, b] = map.along(i, ones, ones);
                    auto x = RealAlgebraicNumber::exact(a);
                    r.zero.push_back({f.variables()[i], {x, to_decimal(a, config.approx_digits)}});
                }
            } else if constexpr (std::is_same_v<T, Definite>) {
                r.report.status = Status::definite;
            } else if constexpr (std::is_same_v<T, PositiveValue>) {
                r.report.status = Status::positive_value;
            } else {
                r.report.status = Status::failed;
            }
        },
        r.outcome.result);

    nlohmann::json &j = r.json;
    j["name"] = name;
    j["status"] = to_string(r.report.status);
    j["dimension"] = r.report.dimension;
    j["num_terms"] = r.report.num_terms;
    j["max_degree"] = r.report.max_degree;
    j["witness"] = r.outcome.witness ? witness_json(*r.outcome.witness) : nlohmann::json(nullptr);
    if (r.report.status == Status::zero || r.report.status == Status::all_ones) {
        nlohmann::json zs = nlohmann::json::array();
        for (const auto &c : r.zero) zs.push_back(coordinate_json(c.value, config.approx_digits));
        j["zero"] = std::move(zs);
    } else {
        j["zero"] = nullptr;
    }
    if (const auto *z = std::get_if<ZeroFound>(&r.outcome.result)) j["gbar"] = integer_strings(z->certificate.gbar);
    else j["gbar"] = nullptr;
    j["stats"] = {{"lp_solves", r.report.lp_solves},
                  {"candidates_tried", r.report.candidates_tried},
                  {"doubling_steps", r.report.doubling_steps},
                  {"time_ms", r.report.time_ms}};
    r.text = render_text(r, g, config.approx_digits);
    return r;
}

namespace {

SolveResult error_result(const std::string &name, const std::string &message) {
    SolveResult r{{}, {}, {}, {}, Outcome{Failed{}, std::nullopt, {}, {}}, message};
    r.report.name = name;
    r.report.status = Status::error;
    r.json = {{"name", name},
              {"status", "error"},
              {"dimension", 0},
              {"num_terms", 0},
              {"max_degree", 0},
              {"witness", nullptr},
              {"zero", nullptr},
              {"gbar", nullptr},
              {"stats", {{"lp_solves", 0}, {"candidates_tried", 0}, {"doubling_steps", 0}, {"time_ms", 0}}}};
    r.text = name + ": error\n  " + message + "\n";
    return r;
}

} // namespace

SolveResult solve_file(const std::filesystem::path &path, const RunConfig &config) {
    const std::string name = path.filename().string();
    std::ifstream in(path, std::ios::binary);
    if (!in) return error_result(name, "cannot open " + path.string());
    try {
        MultiPoly f = parse_polynomial(in);
        if (in.bad()) return error_result(name, "read error on " + path.string());
        return solve_polynomial(name, f, config);
    } catch (const std::exception &e) {
        return error_result(name, e.what());
    }
}

BatchSummary summarize(const std::vector<InstanceReport> &reports) {
    BatchSummary s;
    const InstanceReport *largest = nullptr;
    for (const auto &r : reports) {
        if (r.status == Status::error) {
            ++s.errors;
            continue;
        }
        ++s.instances;
        if (r.status == Status::definite) ++s.definite;
        else if (r.status == Status::failed) ++s.failed;
        else ++s.found;
        double t = static_cast<double>(r.time_ms) / 1000.0;
        s.max_time_s = std::max(s.max_time_s, t);
        s.total_time_s += t;
        if (!largest || r.num_terms > largest->num_terms) largest = &r;
    }
    s.remaining = s.instances - s.definite;
    s.failed_percent = s.remaining == 0 ? 0.0 : 100.0 * static_cast<double>(s.failed) / static_cast<double>(s.remaining);
    if (largest) {
        s.largest_size = largest->num_terms;
        s.largest_dimension = largest->dimension;
        s.largest_degree = largest->max_degree;
    }
    return s;
}

BatchResult batch_run(const std::filesystem::path &dir, const RunConfig &config, unsigned jobs) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        std::error_code ec;
        if (entry.is_directory(ec)) continue;
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path &a, const fs::path &b) { return a.filename().string() < b.filename().string(); });

    BatchResult out;
    out.reports.resize(files.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(files.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < files.size(); i = next++)
            out.reports[i] = solve_file(files[i], config).report;
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();
    out.summary = summarize(out.reports);
    return out;
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string fixed(double x, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, x);
    return buf;
}

} // namespace

std::string render_reports(const std::vector<InstanceReport> &reports, TableFormat format) {
    const char sep = format == TableFormat::csv ? ',' : '\t';
    std::ostringstream out;
    out << "name" << sep << "status" << sep << "num_terms" << sep << "dimension" << sep << "max_degree" << sep
        << "lp_solves" << sep << "candidates_tried" << sep << "doubling_steps" << sep << "time_ms\n";
    for (const auto &r : reports) {
        out << (format == TableFormat::csv ? csv_field(r.name) : r.name) << sep << to_string(r.status) << sep
            << r.num_terms << sep << r.dimension << sep << r.max_degree << sep << r.lp_solves << sep
            << r.candidates_tried << sep << r.doubling_steps << sep << r.time_ms << "\n";
    }
    return out.str();
}

std::string render_summary(const BatchSummary &s, TableFormat format) {
    const std::vector<std::pair<std::string, std::string>> rows = {
        {"number of instances", std::to_string(s.instances)},
        {"number of definite instances", std::to_string(s.definite)},
        {"number of remaining instances", std::to_string(s.remaining)},
        {"found zero in", std::to_string(s.found)},
        {"failed on", std::to_string(s.failed)},
        {"failed on (% of remaining)", fixed(s.failed_percent, 1)},
        {"size of largest instance", std::to_string(s.largest_size)},
        {"dimension of largest instance", std::to_string(s.largest_dimension)},
        {"degree of largest instance", std::to_string(s.largest_degree)},
        {"maximal time (s)", fixed(s.max_time_s, 2)},
        {"total time (s)", fixed(s.total_time_s, 2)},
        {"errors", std::to_string(s.errors)},
    };
    std::ostringstream out;
    if (format == TableFormat::csv) out << "metric,value\n";
    for (const auto &[k, v] : rows) {
        if (format == TableFormat::csv) out << csv_field(k) << ',' << v << "\n";
        else out << k << '\t' << v << "\n";
    }
    return out.str();
}

} // namespace subtropical::cli
