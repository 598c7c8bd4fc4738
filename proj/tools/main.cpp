#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dearank/csv.hpp"
#include "dearank/datasets.hpp"
#include "dearank/run.hpp"

namespace {

// exit codes: 0 success, 1 usage / configuration, 2 data validation, 3 solver
constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kSolverError = 3;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision-analysis toolkit: ranks alternatives via radial and "
                 "non-radial efficiency models, fuzzy self-assessment, max-min "
                 "and closeness-to-ideal"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "Evaluate and rank a decision matrix");
    std::string method_name;
    run_cmd->add_option("-m,--method", method_name,
                        "sadea | topsis | maxmin | ccr | super | nonradial")
        ->required();
    std::string demo_id;
    auto* demo_opt = run_cmd->add_option("--demo", demo_id,
                                         "bundled dataset id (see `datasets`)");
    std::string input_path;
    auto* input_opt =
        run_cmd->add_option("-i,--input", input_path, "decision matrix CSV file");
    demo_opt->excludes(input_opt);
    std::string format_name = "table";
    run_cmd->add_option("-f,--format", format_name, "table | json | csv");
    std::vector<double> weights;
    run_cmd->add_option("-w,--weights", weights,
                        "topsis attribute weights, comma separated, summing to 1")
        ->delimiter(',');
    std::string rts_name;
    auto* rts_opt =
        run_cmd->add_option("--rts", rts_name, "crs | irs (ccr and super only)");
    bool exclude_self = false;
    run_cmd->add_flag("--exclude-self", exclude_self,
                      "drop the evaluated DMU from the reference set (nonradial)");
    std::string membership_name = "corrected";
    run_cmd->add_option("--membership", membership_name,
                        "corrected | literal input membership orientation (sadea)");
    int jobs = 1;
    run_cmd->add_option("-j,--jobs", jobs, "worker threads for sadea scoring");
    dearank::LpOptions lp_defaults;
    double pivot_tol = lp_defaults.pivot_tol;
    double feas_tol = lp_defaults.feas_tol;
    run_cmd->add_option("--pivot-tol", pivot_tol, "simplex pivot tolerance");
    run_cmd->add_option("--feas-tol", feas_tol, "simplex feasibility tolerance");

    auto* datasets_cmd = app.add_subcommand("datasets", "List bundled datasets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    if (datasets_cmd->parsed()) {
        for (const auto& id : dearank::demo_dataset_ids()) {
            const auto& m = dearank::demo_dataset(id);
            std::cout << id << "  (" << m.alternatives() << " alternatives, "
                      << m.inputs() << " inputs, " << m.outputs() << " outputs)\n";
        }
        return kOk;
    }

    dearank::RunConfig cfg;
    try {
        cfg.method = dearank::parse_method(method_name);
        cfg.format = dearank::parse_format(format_name);
        cfg.membership = dearank::parse_membership(membership_name);
        if (*demo_opt) cfg.demo = demo_id;
        if (*input_opt) cfg.input = input_path;
        cfg.weights = weights;
        if (*rts_opt) cfg.rts = dearank::parse_rts(rts_name);
        cfg.exclude_self = exclude_self;
        cfg.jobs = jobs;
        cfg.lp.pivot_tol = pivot_tol;
        cfg.lp.feas_tol = feas_tol;
        dearank::validate_config(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }

    std::optional<dearank::DecisionMatrix> matrix;
    if (cfg.demo) {
        try {
            matrix = dearank::demo_dataset(*cfg.demo);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kUsageError;
        }
    } else {
        try {
            matrix = dearank::ingest_csv(*cfg.input);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kDataError;
        }
    }

    for (const auto& issue : matrix->validate())
        if (issue.severity == dearank::ValidationIssue::Severity::Warning)
            std::cerr << "warning: " << issue.message << '\n';

    try {
        dearank::RunOutput out = dearank::run(cfg, *matrix);
        std::cout << out.render(cfg.format);
        if (!out.all_solved) {
            std::cerr << "error: some programs had no optimum (see '-' entries)\n";
            return kSolverError;
        }
        return kOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSolverError;
    }
}
