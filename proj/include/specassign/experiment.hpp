#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "specassign/assign.hpp"
#include "specassign/config.hpp"
#include "specassign/learn.hpp"
#include "specassign/symspace.hpp"

namespace specassign::cli {

struct LearnRunResult {
    std::uint64_t plant_seed = 0;
    learn::LearnReport report;
    double error_vs_design = -1.0;  // inf-norm against the model-based gain
    symspace::SpectrumSet achieved;
    double max_spectrum_error = -1.0;
};

struct RunReport {
    ExperimentConfig config;
    std::optional<assign::GainPair> designed;
    std::optional<Eigen::MatrixXd> lifted_gain;  // general-system block only
    symspace::SpectrumSet achieved;
    symspace::SpectrumSet target;
    std::vector<double> per_value_error;
    double max_error = -1.0;
    std::vector<LearnRunResult> runs;
    double wall_clock_seconds = 0.0;
};

RunReport cmd_design(const ExperimentConfig& config);

// Runs config.repeats independent seeded learning repetitions. Trace CSV
// files (header p,j,s,k_1..k_n,delta_norm) go to config.trace_path, suffixed
// -r<k> per repetition when repeats > 1.
RunReport cmd_learn(const ExperimentConfig& config);

RunReport cmd_spectrum(const ExperimentConfig& config, const Eigen::RowVectorXd& gain);

// Deterministic for identical config + seed, except the wall-clock field.
std::string report_to_json(const RunReport& report);

void write_report(const RunReport& report, const std::string& path);

}  // namespace specassign::cli
