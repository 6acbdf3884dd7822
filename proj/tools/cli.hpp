#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <multistirling/classical.hpp>
#include <multistirling/moments.hpp>
#include <multistirling/multi_numbers.hpp>
#include <multistirling/multilog.hpp>
#include <multistirling/probabilistic.hpp>
#include <multistirling/verification.hpp>

namespace multistirling::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr std::size_t default_order = 12;
inline constexpr std::size_t max_order = 64;

struct OutputRecord {
    std::string family;
    std::optional<std::vector<int>> ks;
    std::optional<std::string> dist;
    std::optional<std::size_t> r;
    std::optional<std::string> y;
    std::size_t n = 0;
    std::optional<std::size_t> k;
    Rational value;
};

inline const std::vector<std::string>& table_families()
{
    static const std::vector<std::string> families = {
        "multilog",      "multi-stirling1", "multi-stirling2",      "multi-bernoulli", "multi-lah",
        "stirling1",     "stirling2",       "lah",                  "bernoulli-higher", "prob-stirling2",
        "prob-multi-stirling2", "prob-lah", "prob-multi-lah",       "prob-fubini",
    };
    return families;
}

namespace detail {

class usage_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

inline std::string join_ks(const std::vector<int>& ks)
{
    std::string out;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        out += (i ? "," : "") + std::to_string(ks[i]);
    }
    return out;
}

inline void write_json(std::ostream& out, const OutputRecord& rec)
{
    nlohmann::ordered_json j;
    j["family"] = rec.family;
    if (rec.ks) j["ks"] = *rec.ks;
    if (rec.dist) j["dist"] = *rec.dist;
    if (rec.r) j["r"] = *rec.r;
    if (rec.y) j["y"] = *rec.y;
    j["n"] = rec.n;
    if (rec.k) j["k"] = *rec.k;
    j["value"] = rec.value.str();
    out << j.dump() << '\n';
}

inline void write_csv(std::ostream& out, const OutputRecord& rec)
{
    out << csv_field(rec.family) << ',' << csv_field(rec.ks ? join_ks(*rec.ks) : "") << ','
        << csv_field(rec.dist.value_or("")) << ',' << (rec.r ? std::to_string(*rec.r) : "") << ','
        << csv_field(rec.y.value_or("")) << ',' << rec.n << ',' << (rec.k ? std::to_string(*rec.k) : "") << ','
        << rec.value.str() << '\n';
}

inline nlohmann::ordered_json report_json(const VerificationReport& r)
{
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    if (!r.ks.empty()) j["ks"] = r.ks;
    if (!r.dist.empty()) j["dist"] = r.dist;
    j["status"] = to_string(r.status);
    if (r.first_mismatch) {
        nlohmann::ordered_json m;
        m["n"] = r.first_mismatch->n;
        m["lhs"] = r.first_mismatch->lhs.str();
        m["rhs"] = r.first_mismatch->rhs.str();
        j["first_mismatch"] = m;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline std::vector<GridCell> load_grid(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw usage_failure("cannot open grid file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw usage_failure("grid file is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_array()) {
        throw usage_failure("grid file must hold a JSON array of {\"dist\", \"ks\"} objects");
    }
    std::vector<GridCell> grid;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("dist") || !item.contains("ks") || !item["dist"].is_string() ||
            !item["ks"].is_array()) {
            throw usage_failure("grid entry must be {\"dist\": string, \"ks\": [integers]}");
        }
        std::vector<int> ks;
        for (const auto& k : item["ks"]) {
            if (!k.is_number_integer()) {
                throw usage_failure("grid entry ks must contain integers");
            }
            ks.push_back(k.get<int>());
        }
        grid.push_back({parse_distribution(item["dist"].get<std::string>()), IndexTuple(std::move(ks))});
    }
    return grid;
}

} // namespace detail

struct TableOptions {
    std::string family;
    std::optional<std::string> ks;
    std::optional<std::string> dist;
    std::optional<std::size_t> r;
    std::optional<std::string> y;
    std::size_t order = default_order;
    std::string format = "json";
};

/**
 * Produces every record of a table family for 0 <= n <= order (and
 * 0 <= k <= n for two-index families), in increasing (n, k) order.
 * Throws spec_error / usage_error on missing or malformed flags.
 */
inline std::vector<OutputRecord> build_table(const TableOptions& opt)
{
    const std::size_t order = opt.order;
    auto need_ks = [&]() {
        if (!opt.ks) throw usage_error("family '" + opt.family + "' requires --ks");
        return IndexTuple::parse(*opt.ks);
    };
    auto need_dist = [&]() {
        if (!opt.dist) throw usage_error("family '" + opt.family + "' requires --dist");
        return parse_distribution(*opt.dist);
    };
    auto need_r = [&]() {
        if (!opt.r || *opt.r == 0) throw usage_error("family '" + opt.family + "' requires a positive --r");
        return *opt.r;
    };

    std::vector<OutputRecord> out;
    auto emit_series = [&](const std::string& family, const std::vector<Rational>& values,
                           std::optional<std::vector<int>> ks, std::optional<std::string> dist,
                           std::optional<std::size_t> r = std::nullopt, std::optional<std::string> y = std::nullopt) {
        for (std::size_t n = 0; n <= order; ++n) {
            out.push_back({family, ks, dist, r, y, n, std::nullopt, values[n]});
        }
    };
    auto emit_triangle = [&](const std::string& family, std::optional<std::string> dist, auto&& value_at) {
        for (std::size_t n = 0; n <= order; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                out.push_back({family, std::nullopt, dist, std::nullopt, std::nullopt, n, k, value_at(n, k)});
            }
        }
    };

    const std::string& f = opt.family;
    if (f == "multilog") {
        const auto ks = need_ks();
        const auto s = multilog_series(ks, order);
        emit_series(f, std::vector<Rational>(s.coeffs().begin(), s.coeffs().end()), ks.values(), std::nullopt);
    } else if (f == "multi-stirling1") {
        const auto ks = need_ks();
        emit_series(f, egf_coeffs(multilog_series(ks, order)), ks.values(), std::nullopt);
    } else if (f == "multi-stirling2") {
        const auto ks = need_ks();
        emit_series(f, egf_coeffs(multi_stirling2_series(ks, order)), ks.values(), std::nullopt);
    } else if (f == "multi-bernoulli") {
        const auto ks = need_ks();
        emit_series(f, egf_coeffs(multi_bernoulli_series(ks, order)), ks.values(), std::nullopt);
    } else if (f == "multi-lah") {
        const auto ks = need_ks();
        emit_series(f, egf_coeffs(multi_lah_series(ks, order)), ks.values(), std::nullopt);
    } else if (f == "stirling1") {
        emit_triangle(f, std::nullopt, [](std::size_t n, std::size_t k) { return stirling1_unsigned(n, k); });
    } else if (f == "stirling2") {
        emit_triangle(f, std::nullopt, [](std::size_t n, std::size_t k) { return stirling2(n, k); });
    } else if (f == "lah") {
        emit_triangle(f, std::nullopt, [](std::size_t n, std::size_t k) { return lah_unsigned(n, k); });
    } else if (f == "bernoulli-higher") {
        const auto r = need_r();
        emit_series(f, egf_coeffs(bernoulli_higher_series(r, order)), std::nullopt, std::nullopt, r);
    } else if (f == "prob-stirling2") {
        const auto spec = need_dist();
        const auto table = prob_stirling2_table(moments_from_spec(spec, order), order);
        emit_triangle(f, to_string(spec), [&](std::size_t n, std::size_t k) { return table[n][k]; });
    } else if (f == "prob-lah") {
        const auto spec = need_dist();
        const auto ms = moments_from_spec(spec, order);
        std::vector<std::vector<Rational>> columns;
        for (std::size_t k = 0; k <= order; ++k) {
            columns.push_back(egf_coeffs(prob_lah_series(ms, k, order)));
        }
        emit_triangle(f, to_string(spec), [&](std::size_t n, std::size_t k) { return columns[k][n]; });
    } else if (f == "prob-multi-stirling2") {
        const auto ks = need_ks();
        const auto spec = need_dist();
        const auto ms = moments_from_spec(spec, order);
        emit_series(f, egf_coeffs(prob_multi_stirling2_series(ms, ks, order)), ks.values(), to_string(spec));
    } else if (f == "prob-multi-lah") {
        const auto ks = need_ks();
        const auto spec = need_dist();
        const auto ms = moments_from_spec(spec, order);
        emit_series(f, egf_coeffs(prob_multi_lah_series(ms, ks, order)), ks.values(), to_string(spec));
    } else if (f == "prob-fubini") {
        const auto spec = need_dist();
        const auto r = need_r();
        if (!opt.y) throw usage_error("family 'prob-fubini' requires --y");
        const auto y = Rational::parse(*opt.y);
        const auto ms = moments_from_spec(spec, order);
        emit_series(f, egf_coeffs(prob_fubini_series(ms, r, y, order)), std::nullopt, to_string(spec), r, y.str());
    } else {
        throw usage_error("unknown family '" + f + "'");
    }
    return out;
}

/**
 * Entry point shared by the executable and the tests. Writes data records to
 * `out`, diagnostics to `err`, and returns the process exit status.
 */
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact multi-index Stirling, Lah and Bernoulli numbers and identity checks", "multistirling"};
    app.require_subcommand(1);

    TableOptions topt;
    bool allow_large = false;
    auto* table = app.add_subcommand("table", "Emit a number family as JSON lines or CSV");
    table->add_option("family", topt.family, "Number family")->required()->check(CLI::IsMember(table_families()));
    table->add_option("--ks", topt.ks, "Index tuple, comma-separated integers");
    table->add_option("--dist", topt.dist, "Distribution spec, e.g. poisson:1 or finite:0=1/2;2=1/2");
    table->add_option("--r", topt.r, "Order r (bernoulli-higher, prob-fubini)");
    table->add_option("--y", topt.y, "Fubini argument y as an integer or a/b");
    table->add_option("--order", topt.order, "Largest n to emit")->capture_default_str();
    table->add_option("--format", topt.format, "Output format")->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    table->add_flag("--allow-large-order", allow_large, "Permit --order above 64");

    std::optional<std::string> grid_path;
    std::size_t vorder = default_order;
    std::string identity = "all";
    auto* verify = app.add_subcommand("verify", "Check every identity over a grid of distributions and tuples");
    verify->add_option("--grid", grid_path, "JSON file: [{\"dist\": \"...\", \"ks\": [...]}, ...]");
    verify->add_option("--order", vorder, "Truncation order")->capture_default_str();
    verify->add_option("--identity", identity, "Identity id, dotted prefix, or 'all'")->capture_default_str();
    verify->add_flag("--allow-large-order", allow_large, "Permit --order above 64");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("multistirling");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (table->parsed()) {
            if (topt.order > max_order && !allow_large) {
                throw usage_error("--order above 64 requires --allow-large-order");
            }
            const auto records = build_table(topt);
            std::ostringstream buffer;
            if (topt.format == "csv") {
                buffer << "family,ks,dist,r,y,n,k,value\n";
                for (const auto& rec : records) detail::write_csv(buffer, rec);
            } else {
                for (const auto& rec : records) detail::write_json(buffer, rec);
            }
            out << buffer.str();
            return exit_ok;
        }

        if (vorder > max_order && !allow_large) {
            throw usage_error("--order above 64 requires --allow-large-order");
        }
        if (!filter_is_known(identity)) {
            throw usage_error("unknown identity '" + identity + "'");
        }
        const auto grid = grid_path ? detail::load_grid(*grid_path) : default_grid();
        const auto reports = run_full_suite(grid, vorder, identity);
        std::ostringstream buffer;
        std::size_t counts[4] = {0, 0, 0, 0};
        for (const auto& r : reports) {
            buffer << detail::report_json(r).dump() << '\n';
            ++counts[static_cast<int>(r.status)];
        }
        out << buffer.str();
        err << reports.size() << " reports: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
            << " skipped, " << counts[3] << " expected-discrepancy\n";
        return counts[static_cast<int>(CheckStatus::fail)] == 0 ? exit_ok : exit_verification_failed;
    } catch (const detail::usage_failure& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const spec_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace multistirling::cli
