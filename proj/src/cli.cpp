#include "hookbias/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookbias/hooks.hpp"
#include "hookbias/psi.hpp"
#include "hookbias/verify.hpp"

namespace hookbias {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;

// routes --out PATH, falling back to the given stream
class DataSink {
public:
    DataSink(const std::string& path, std::ostream& fallback) : fallback_(fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

int emit_reports(const std::vector<VerificationReport>& reports, const RunConfig& cfg,
                 std::ostream& data, std::ostream& err)
{
    DataSink sink(cfg.out, data);
    bool all_ok = true;
    int passed = 0, skipped = 0;
    for (const VerificationReport& r : reports) {
        sink.stream() << r.to_json_line() << '\n';
        err << r.summary_line() << '\n';
        if (!r.ok())
            all_ok = false;
        else if (r.status == VerificationReport::Status::skipped)
            ++skipped;
        else
            ++passed;
    }
    err << (all_ok ? "OK" : "FAILED") << ": " << passed << " passed, " << skipped
        << " skipped, " << (reports.size() - static_cast<std::size_t>(passed + skipped))
        << " failed\n";
    return all_ok ? exit_ok : exit_verification_failed;
}

} // namespace

int cmd_btable(const RunConfig& cfg, std::ostream& data, std::ostream& err)
{
    int n_max = cfg.n_max >= 0 ? cfg.n_max : 20;
    if (cfg.t < 2 || cfg.k < 1 || (cfg.format != "csv" && cfg.format != "json")) {
        err << "btable: invalid arguments\n";
        return exit_usage;
    }
    BiasTable table = bias_table(cfg.t, cfg.k, n_max, cfg.jobs);
    DataSink sink(cfg.out, data);
    if (cfg.format == "csv") {
        sink.stream() << "n,b\n";
        for (const auto& [n, b] : table.values)
            sink.stream() << n << ',' << b << '\n';
    } else {
        nlohmann::ordered_json j;
        j["t"] = table.t;
        j["k"] = table.k;
        auto values = nlohmann::ordered_json::object();
        for (const auto& [n, b] : table.values)
            values[std::to_string(n)] = b;
        j["values"] = values;
        sink.stream() << j.dump() << '\n';
    }
    return exit_ok;
}

int cmd_verify(const std::string& claim, const RunConfig& cfg, std::ostream& data,
               std::ostream& err)
{
    auto pick = [&](int fallback) { return cfg.n_max >= 0 ? cfg.n_max : fallback; };
    std::vector<VerificationReport> reports;
    if (claim == "phi") {
        int n_max = pick(35);
        int case_n = std::min(n_max, 30);
        reports = verify_phi(n_max, case_n);
        reports.push_back(verify_qsets(4, std::max(4, case_n)));
    } else if (claim == "psi-table1") {
        reports = verify_psi(pick(26));
        reports.push_back(verify_table1());
    } else if (claim == "series") {
        reports = verify_series(cfg.order);
        reports.push_back(verify_restricted_inequalities(std::max(cfg.order, 500)));
    } else if (claim == "appendix") {
        reports = verify_appendix_levels(pick(40));
    } else if (claim == "theorem") {
        reports.push_back(verify_theorem(pick(45), cfg.jobs));
    } else if (claim == "prior-biases") {
        reports = verify_prior_biases(pick(45), cfg.jobs);
    } else if (claim == "conjecture") {
        reports.push_back(verify_conjecture(cfg.t_min, cfg.t_max, pick(40), cfg.jobs));
    } else {
        err << "verify: unknown claim '" << claim
            << "' (expected phi, psi-table1, series, appendix, theorem, conjecture or"
               " prior-biases)\n";
        return exit_usage;
    }
    return emit_reports(reports, cfg, data, err);
}

int cmd_table1(const RunConfig& cfg, std::ostream& data, std::ostream& err)
{
    Table1 generated = generate_table1();
    DataSink sink(cfg.out, data);
    sink.stream() << render_table1(generated);
    VerificationReport diff = verify_table1();
    err << diff.summary_line() << '\n';
    if (!diff.ok()) {
        for (const Counterexample& ce : diff.counterexamples)
            err << "  mismatch: " << ce.input << " expected " << ce.expected << " got "
                << ce.actual << '\n';
        return exit_verification_failed;
    }
    return exit_ok;
}

int run_cli(const std::vector<std::string>& args, std::ostream& data, std::ostream& err)
{
    CLI::App app{"hookbias: exact hook-length statistics of t-regular partitions"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string claim;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--jobs", cfg.jobs, "worker threads for sweeps");
        sub->add_option("--out", cfg.out, "write data output to this file");
    };

    CLI::App* btable = app.add_subcommand("btable", "emit a table of b_{t,k}(n)");
    btable->add_option("--t", cfg.t, "regularity parameter (t >= 2)");
    btable->add_option("--k", cfg.k, "hook length (k >= 1)");
    btable->add_option("--n-max", cfg.n_max, "largest n (default 20)")
        ->check(CLI::NonNegativeNumber);
    btable->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_common(btable);

    CLI::App* verify = app.add_subcommand("verify", "run a claim verifier");
    verify
        ->add_option("claim", claim,
                     "phi | psi-table1 | series | appendix | theorem | conjecture |"
                     " prior-biases")
        ->required();
    verify->add_option("--n-max", cfg.n_max, "sweep bound (per-claim default)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--t-min", cfg.t_min, "first t for the conjecture scan");
    verify->add_option("--t-max", cfg.t_max, "last t for the conjecture scan");
    verify->add_option("--order", cfg.order, "series truncation order");
    add_common(verify);

    CLI::App* table1 = app.add_subcommand("table1", "regenerate the n=22 mapping table");
    add_common(table1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        data << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (btable->parsed())
            return cmd_btable(cfg, data, err);
        if (verify->parsed())
            return cmd_verify(claim, cfg, data, err);
        return cmd_table1(cfg, data, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace hookbias
