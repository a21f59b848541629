#pragma once

// Model-free gain learning by stochastic approximation with expanding
// truncations.
//
// The map gain -> characteristic coefficients of the observation mean is
// affine for single-column F. Probe rounds difference the coefficients over
// the fixed gains L_0..L_n and average the results into C, an unbiased
// estimate of the coefficient-map Jacobian; the index function J(p) advances
// until C is numerically nonsingular. Each phase then iterates the
// root-finding recursion
//
//   K(s+1) = K(s) - beta(s) * (a_obs(K(s)) - a_target) * C^{-1}
//
// restarting with a fresh C and a larger iterate bound M(p) whenever a
// candidate leaves the current truncation ball. Multiplying by C^{-1} keeps
// the linearized iteration uniformly contractive regardless of the plant's
// coefficient-map conditioning; with the raw C the stiffest Jacobian mode
// diverges under the early large steps of beta(s) = 1/s.

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "specassign/assign.hpp"
#include "specassign/common.hpp"

namespace specassign::learn {

// Probe gains L_0 = 0, L_i = (1 ... 1 0 ... 0) with i leading ones. The
// consecutive differences are the standard basis rows, so the averaged
// difference matrix estimates the Jacobian directly.
struct ProbeFamily {
    std::vector<Eigen::RowVectorXd> probes;  // L_0 .. L_n

    int dim() const { return static_cast<int>(probes.size()) - 1; }
};

ProbeFamily probe_family(int n);

// Black-box view of a plant: one fresh observation per call.
using ObserveFn = std::function<Eigen::MatrixXd(const Eigen::RowVectorXd& gain)>;

// Characteristic-polynomial coefficient row [a1..an] of an observation.
Eigen::RowVectorXd coeffs_of_observation(const Eigen::MatrixXd& y);

// One probe round: n+1 fresh observations at L_0..L_n, rows of the result are
// the consecutive coefficient differences.
Eigen::MatrixXd probe_round(const ObserveFn& observe, const ProbeFamily& family);

// Running mean: C_{j+1} = (j/(j+1)) C_j + (1/(j+1)) A_{j+1}, with C_0 = 0.
Eigen::MatrixXd update_average(const Eigen::MatrixXd& c_prev, const Eigen::MatrixXd& a_new,
                               long j);

struct TraceRecord {
    long p = 0;
    long j = 0;  // accepted index-function value of the current phase
    long s = 0;
    Eigen::RowVectorXd k;
    double delta_norm = 0.0;  // inf-norm of the iterate difference
};

using TraceSink = std::function<void(const TraceRecord&)>;

struct LearnerConfig {
    double epsilon = 1e-8;       // termination: ||K(s+1) - K(s)||_inf < epsilon
    double beta_c = 1.0;         // beta(s) = beta_c / s^beta_exponent
    double beta_exponent = 1.0;  // valid range (0.5, 1]
    double m_scale = 1.0;        // M(p) = m_scale * p + m_offset
    double m_offset = 0.0;
    Eigen::RowVectorXd k_init;   // restart iterate; defaults to zero
    long p_max = 100000;
    long s_cap = 1000000;        // per inner loop
    long probe_cap = 10000;      // probe rounds per index search
    bool keep_trace = false;
    TraceSink sink;              // optional per-step callback
};

void validate(const LearnerConfig& cfg, int n);

double beta_schedule(const LearnerConfig& cfg, long s);
double truncation_bound(const LearnerConfig& cfg, long p);

struct LearnerState {
    long p = 0;
    long index_j = 0;            // J(p); strictly increasing across phases
    long s = 0;
    Eigen::MatrixXd c;           // accepted averaged difference matrix
    Eigen::RowVectorXd k;
    double bound = 0.0;          // M(p+1) of the current phase
    long total_observations = 0;
};

// Runs probe rounds from j = J(p) until the running average becomes
// nonsingular at some j > J(p); stores the accepted C and J(p+1) in the state.
// Throws IndexSearchExhausted past cfg.probe_cap rounds.
void advance_index(LearnerState& state, const ObserveFn& observe, const ProbeFamily& family,
                   const LearnerConfig& cfg);

// One recursion step; c_inv is the inverted phase matrix C^{-1}.
Eigen::RowVectorXd sa_step(const Eigen::RowVectorXd& k, const Eigen::RowVectorXd& a_obs,
                           const Eigen::RowVectorXd& a_target, const Eigen::MatrixXd& c_inv,
                           double beta);

struct LearnReport {
    Eigen::RowVectorXd gain;
    long p_final = 0;
    long final_index = 0;          // J value of the terminating phase
    long final_s = 0;
    long total_observations = 0;
    double last_delta_norm = 0.0;
    bool converged = false;
    std::vector<TraceRecord> trace;  // populated when cfg.keep_trace
};

LearnReport run_learning(const ObserveFn& observe, int n, const assign::AssignmentSpec& spec,
                         const LearnerConfig& cfg);

}  // namespace specassign::learn
