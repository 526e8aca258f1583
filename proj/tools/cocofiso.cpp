// Command-line front end: rank a decision matrix with one of the five
// methods, compare method rankings, or run the weight-sensitivity protocol.
//
// Exit codes: 0 success, 1 I/O or validation failure, 2 degenerate criterion
// (constant column under min-max), 3 zero minimum aggregate (alternative
// worst on every criterion).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cocofiso/cocofiso.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitDegenerateCriterion = 2;
constexpr int kExitZeroMinAggregate = 3;

struct CommonArgs {
    std::string config_path;
    std::string method;
    double lambda = 0.5;
    double tie_tol = cocofiso::kDefaultTieTolerance;
    bool auto_repair = false;
    bool paper_exact_weights = false;
    std::string out_path;
    bool pretty = false;

    bool method_set = false;
    bool lambda_set = false;
    bool tie_tol_set = false;
    bool auto_repair_set = false;
    bool paper_exact_set = false;
};

void add_common_options(CLI::App& cmd, CommonArgs& args) {
    cmd.add_option("--config", args.config_path, "problem configuration file")->required();
    cmd.add_option("--method", args.method, "cocoso|cocofiso|wsm|topsis|promethee2");
    cmd.add_option("--lambda", args.lambda, "balance parameter in [0,1] (default 0.5)");
    cmd.add_option("--tie-tol", args.tie_tol, "absolute tie tolerance for ranking");
    cmd.add_flag("--auto-repair", args.auto_repair,
                 "classic only: drop degenerate criteria instead of failing");
    cmd.add_flag("--paper-exact-weights", args.paper_exact_weights,
                 "waive the weight-sum = 1 check");
    cmd.add_option("--out", args.out_path, "write the report to this file instead of stdout");
    cmd.add_flag("--pretty", args.pretty, "human-readable table output");
}

cocofiso::ProblemConfig effective_config(const CLI::App& cmd, CommonArgs& args) {
    cocofiso::ProblemConfig config = cocofiso::load_config(args.config_path);
    if (cmd.count("--method")) config.method = cocofiso::parse_method(args.method);
    if (cmd.count("--lambda")) config.lambda = args.lambda;
    if (cmd.count("--tie-tol")) config.tie_tolerance = args.tie_tol;
    if (cmd.count("--auto-repair")) config.auto_repair = true;
    if (cmd.count("--paper-exact-weights")) config.paper_exact_weights = true;
    return config;
}

cocofiso::EvaluateOptions engine_options(const cocofiso::ProblemConfig& config) {
    cocofiso::EvaluateOptions opts;
    opts.lambda = config.lambda;
    opts.tie_tolerance = config.tie_tolerance;
    opts.auto_repair = config.auto_repair;
    opts.paper_exact_weights = config.paper_exact_weights;
    return opts;
}

void emit_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

/// Run one method and return its ranking; engine warnings go to stderr.
cocofiso::Ranking run_method(const cocofiso::DecisionMatrix& matrix, cocofiso::Method method,
                             const cocofiso::ProblemConfig& config) {
    using cocofiso::Method;
    cocofiso::BaselineOptions bopts;
    bopts.tie_tolerance = config.tie_tolerance;
    bopts.paper_exact_weights = config.paper_exact_weights;
    switch (method) {
        case Method::WSM: return cocofiso::wsm(matrix, bopts).ranking;
        case Method::Topsis: return cocofiso::topsis(matrix, bopts).ranking;
        case Method::Promethee2: return cocofiso::promethee2(matrix, bopts).ranking;
        case Method::CoCoSo:
        case Method::CoCoFISo: {
            const auto variant = method == Method::CoCoSo ? cocofiso::Variant::Classic
                                                          : cocofiso::Variant::CoCoFISo;
            auto result = cocofiso::evaluate(matrix, variant, engine_options(config));
            emit_warnings(result.warnings);
            return std::move(result.ranking);
        }
    }
    throw cocofiso::InvalidArgument("unreachable method");
}

/// Open --out if given, else stdout.
class ReportSink {
public:
    explicit ReportSink(const std::string& path) {
        if (path.empty()) return;
        file_.emplace(path);
        if (!*file_) throw cocofiso::Error("cannot open output file '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::optional<std::ofstream> file_;
};

unsigned thread_cap_from_env() {
    const char* raw = std::getenv("COCOFISO_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 0) {
        std::cerr << "warning: ignoring invalid COCOFISO_THREADS='" << raw << "'\n";
        return 0;
    }
    return static_cast<unsigned>(value);
}

int cmd_rank(const CLI::App& cmd, CommonArgs& args) {
    const cocofiso::ProblemConfig config = effective_config(cmd, args);
    const cocofiso::DecisionMatrix matrix = cocofiso::load_problem(config);
    const cocofiso::Ranking ranking = run_method(matrix, config.method, config);

    ReportSink sink(args.out_path);
    if (args.pretty)
        cocofiso::write_ranking_pretty(sink.stream(), ranking);
    else
        cocofiso::write_ranking_csv(sink.stream(), ranking);
    return 0;
}

int cmd_compare(const CLI::App& cmd, CommonArgs& args, std::vector<std::string>& method_names) {
    const cocofiso::ProblemConfig config = effective_config(cmd, args);
    if (method_names.size() < 2)
        throw cocofiso::InvalidArgument("compare needs at least 2 methods");
    const cocofiso::DecisionMatrix matrix = cocofiso::load_problem(config);

    std::vector<std::pair<std::string, cocofiso::Ranking>> rankings;
    for (const auto& name : method_names) {
        const cocofiso::Method method = cocofiso::parse_method(name);
        rankings.emplace_back(name, run_method(matrix, method, config));
    }

    std::vector<cocofiso::ComparisonRow> rows;
    for (std::size_t a = 0; a < rankings.size(); ++a) {
        for (std::size_t b = a + 1; b < rankings.size(); ++b) {
            cocofiso::ComparisonRow row;
            row.method_a = rankings[a].first;
            row.method_b = rankings[b].first;
            row.spearman = cocofiso::spearman(rankings[a].second, rankings[b].second);
            row.kendall = cocofiso::kendall(rankings[a].second, rankings[b].second);
            row.agreement = cocofiso::agreement_percent(rankings[a].second, rankings[b].second);
            rows.push_back(std::move(row));
        }
    }

    ReportSink sink(args.out_path);
    if (args.pretty)
        cocofiso::write_comparison_pretty(sink.stream(), rows);
    else
        cocofiso::write_comparison_csv(sink.stream(), rows);
    return 0;
}

int cmd_sensitivity(const CLI::App& cmd, CommonArgs& args) {
    const cocofiso::ProblemConfig config = effective_config(cmd, args);
    cocofiso::Variant variant;
    switch (config.method) {
        case cocofiso::Method::CoCoSo: variant = cocofiso::Variant::Classic; break;
        case cocofiso::Method::CoCoFISo: variant = cocofiso::Variant::CoCoFISo; break;
        default:
            throw cocofiso::InvalidArgument(
                "sensitivity requires method cocoso or cocofiso, got " +
                std::string(cocofiso::to_string(config.method)));
    }
    const cocofiso::DecisionMatrix matrix = cocofiso::load_problem(config);

    const auto mode = config.paper_exact_weights ? cocofiso::ScenarioWeightMode::PaperExact
                                                 : cocofiso::ScenarioWeightMode::Normalized;
    const auto scenarios = cocofiso::table_scenarios(matrix.criteria(), mode);
    const auto report = cocofiso::run_sensitivity(matrix, scenarios, variant,
                                                  engine_options(config), thread_cap_from_env());

    ReportSink sink(args.out_path);
    if (args.pretty)
        cocofiso::write_sensitivity_pretty(sink.stream(), report);
    else
        cocofiso::write_sensitivity_csv(sink.stream(), report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compromise-solution decision ranking (CoCoSo / CoCoFISo)"};
    app.require_subcommand(1);

    CommonArgs rank_args, compare_args, sens_args;
    std::vector<std::string> method_names = {"cocofiso", "promethee2", "wsm", "topsis"};

    CLI::App* rank = app.add_subcommand("rank", "rank alternatives with one method");
    add_common_options(*rank, rank_args);

    CLI::App* compare = app.add_subcommand("compare", "rank correlation between methods");
    add_common_options(*compare, compare_args);
    compare->add_option("--methods", method_names, "methods to compare (>= 2)")->delimiter(',');

    CLI::App* sensitivity =
        app.add_subcommand("sensitivity", "20-scenario weight-replacement analysis");
    add_common_options(*sensitivity, sens_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (rank->parsed()) return cmd_rank(*rank, rank_args);
        if (compare->parsed()) return cmd_compare(*compare, compare_args, method_names);
        return cmd_sensitivity(*sensitivity, sens_args);
    } catch (const cocofiso::DegenerateCriterion& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerateCriterion;
    } catch (const cocofiso::ZeroMinAggregate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitZeroMinAggregate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
