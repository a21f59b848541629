#pragma once

// Seeded plant simulators. During learning these are the only components that
// know H, L, F; everything they hand out is an observation matrix.
//
//   discrete:    one closed-loop step from X(0) = I gives
//                Y = (G + F*Kv) + alpha*W,  W = diag of iid (0, delta) draws
//   continuous:  one Euler-Maruyama step of length dt from columns (1/dt)e_i,
//                minus (1/dt)I, gives
//                Y = (G + F*Tv) + (alpha/dt)*W,  W = diag of iid (0, dt) draws

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "specassign/common.hpp"
#include "specassign/rng.hpp"

namespace specassign::plant {

enum class NoiseKind { Gaussian, Rademacher };

// Mean-0 variance-v draw of the configured shape.
double noise_draw(CounterRng& rng, double variance, NoiseKind kind);

struct Observation {
    Eigen::MatrixXd y;
    Eigen::RowVectorXd gain_used;
    std::uint64_t draw_index = 0;  // rng counter before this observation
};

class DiscretePlant {
public:
    DiscretePlant(SystemMatrices sys, double noise_variance, std::uint64_t seed,
                  NoiseKind kind = NoiseKind::Gaussian);

    int dim() const { return n_; }
    double noise_variance() const { return delta_; }
    const SystemMatrices& system() const { return sys_; }
    std::uint64_t draw_count() const { return rng_.draw_count(); }

    // x(k+1) = (H + alpha*L + F*kv) x(k) + alpha*w(k)*x(k), scalar white w.
    // Returns the trajectory x(0), ..., x(steps).
    std::vector<Eigen::VectorXd> simulate(double alpha, const Eigen::RowVectorXd& kv,
                                          const Eigen::VectorXd& x0, int steps);

    // One-shot observation from X(0) = I; unbiased for G + F*kv.
    Observation observe_x1(double alpha, const Eigen::RowVectorXd& kv);

private:
    SystemMatrices sys_;
    int n_;
    double delta_;
    NoiseKind kind_;
    CounterRng rng_;
};

class ContinuousPlant {
public:
    // dt is the observation interval; each observation integrates [0, dt] in
    // `substeps` Euler-Maruyama steps. substeps = 1 reproduces the one-step
    // estimate exactly; larger values trade the O(dt) bias for path fidelity.
    ContinuousPlant(SystemMatrices sys, double dt, int substeps, std::uint64_t seed,
                    NoiseKind kind = NoiseKind::Gaussian);

    int dim() const { return n_; }
    double dt() const { return dt_; }
    int substeps() const { return substeps_; }
    const SystemMatrices& system() const { return sys_; }
    std::uint64_t draw_count() const { return rng_.draw_count(); }

    // Euler-Maruyama path of dx = (H + alpha*L + F*tv) x dt + alpha*x dsigma,
    // sampled every h = dt/substeps up to the horizon.
    std::vector<Eigen::VectorXd> simulate(double alpha, const Eigen::RowVectorXd& tv,
                                          const Eigen::VectorXd& x0, double horizon);

    // Y1 observation: n paths from (1/dt)e_i, assembled and shifted by -(1/dt)I.
    Observation observe_y1(double alpha, const Eigen::RowVectorXd& tv);

private:
    SystemMatrices sys_;
    int n_;
    double dt_;
    int substeps_;
    NoiseKind kind_;
    CounterRng rng_;
};

}  // namespace specassign::plant
