#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>

#include "specassign/assign.hpp"
#include "specassign/common.hpp"
#include "specassign/learn.hpp"
#include "specassign/plant.hpp"

namespace specassign::cli {

struct GeneralSystem {
    Eigen::MatrixXd a;     // n x n
    Eigen::MatrixXd b;     // n x (n+1)
    Eigen::MatrixXd abar;  // n x n
    Eigen::MatrixXd bbar;  // n x (n+1), rank n
};

struct NoiseConfig {
    double delta = 0.0;    // discrete noise variance
    double dt = 0.0;       // continuous observation interval
    int substeps = 1;
    plant::NoiseKind distribution = plant::NoiseKind::Gaussian;
};

// One experiment: exactly one of `system` / `general` is present.
struct ExperimentConfig {
    Mode mode = Mode::Discrete;
    std::optional<SystemMatrices> system;
    std::optional<GeneralSystem> general;
    assign::AssignmentSpec assignment;
    NoiseConfig noise;
    learn::LearnerConfig learner;
    std::uint64_t seed = 0;
    int repeats = 1;
    std::string out_path;
    std::string trace_path;
};

// Parses and validates JSON config text. Throws ParseError with position
// context on malformed input, ValidationError listing every violated
// invariant otherwise.
ExperimentConfig parse_config(const std::string& text);

ExperimentConfig load_config(const std::string& path);

// Canonical JSON form; parse_config(serialize(c)) reproduces c.
std::string serialize(const ExperimentConfig& config);

// The (H, L, F) system the experiment runs on; reduces the general block
// when present.
SystemMatrices resolved_system(const ExperimentConfig& config,
                               std::optional<assign::ReducedSystem>* reduced = nullptr);

}  // namespace specassign::cli
