#pragma once

// Model-based spectrum assignment.
//
// Fixing the primary control gain at alpha*I shifts every operator eigenvalue
// by alpha^2 and leaves a classical single-input pole-placement problem for
// the auxiliary gain: with G = H + alpha*L, placing the eigenvalues of
// G + F*Kv at {lambda_i} puts the operator spectrum at
// {lambda_i lambda_j + alpha^2 : j >= i} (discrete) or
// {lambda_i + lambda_j + alpha^2 : j >= i} (continuous). Kv comes from
// Ackermann's formula.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "specassign/common.hpp"
#include "specassign/symspace.hpp"

namespace specassign::assign {

struct AssignmentSpec {
    Mode mode = Mode::Discrete;
    double alpha = 0.0;
    std::vector<std::complex<double>> lambdas;

    int dim() const { return static_cast<int>(lambdas.size()); }
};

// Throws SpecInvalid: discrete targets must be conjugate-closed, continuous
// targets real.
void validate(const AssignmentSpec& spec);

struct GainPair {
    double alpha = 0.0;        // Ku = Tu = alpha * I
    Eigen::RowVectorXd kv;     // Kv / Tv, 1 x n
};

symspace::SpectrumSet target_spectrum(const AssignmentSpec& spec);

Eigen::MatrixXd controllability_matrix(const Eigen::MatrixXd& g, const Eigen::MatrixXd& f);

// Reciprocal condition number of the controllability matrix above 1e-12.
bool is_controllable(const Eigen::MatrixXd& g, const Eigen::MatrixXd& f);

// Ackermann gain: Kv = a*D + b*G^n with b = -e_n' * ctrb(G,F)^{-1} and D the
// stack of rows b*G^{n-1}, ..., b*G, b; telescopes to b * phi(G) for the
// desired characteristic polynomial phi. Places eigenvalues of G + F*Kv.
Eigen::RowVectorXd ackermann_gain(const Eigen::MatrixXd& g, const Eigen::MatrixXd& f,
                                  const std::vector<std::complex<double>>& lambdas);

// Full design: validates the spec, checks controllability of (H + alpha*L, F),
// returns (alpha, Kv).
GainPair design(const SystemMatrices& sys, const AssignmentSpec& spec);

// Reduction of the general system (A, B, Abar, Bbar) with n x (n+1) Bbar of
// rank n: Q = [Bbar'(Bbar Bbar')^{-1} | N] gives Bbar*Q = [I 0], BQ = [L F],
// H = A - L*Abar.
struct ReducedSystem {
    SystemMatrices sys;
    Eigen::MatrixXd q;     // (n+1) x (n+1), invertible
    Eigen::MatrixXd abar;  // retained for gain lifting
};

ReducedSystem reduce_general(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                             const Eigen::MatrixXd& abar, const Eigen::MatrixXd& bbar);

// Lifts a reduced-system gain to the general system: K = Q * [alpha*I - Abar; Kv].
// The closed loop then satisfies A + BK = G + F*Kv and Abar + Bbar*K = alpha*I,
// so the general operator coincides with the reduced one.
Eigen::MatrixXd lift_gain(const GainPair& gain, const ReducedSystem& reduced);

// One spectral witness: X = xi_i xi_j' + xi_j xi_i' (transpose, not adjoint),
// stored as real and imaginary parts. Satisfies L(X) = mu X with
// mu = lambda_i lambda_j + alpha^2 (discrete) / lambda_i + lambda_j + alpha^2.
struct Witness {
    Eigen::MatrixXd x_re;
    Eigen::MatrixXd x_im;
    std::complex<double> lambda_i;
    std::complex<double> lambda_j;
};

struct WitnessSet {
    std::vector<Witness> entries;  // n(n+1)/2, pairs j >= i
};

// Builds eigenvector witnesses for the closed loop G + F*kv. Repeated lambdas
// draw an orthonormal null-space basis; throws DefectiveEigenstructure when
// the geometric multiplicity falls short.
WitnessSet witness_set(const Eigen::MatrixXd& g, const Eigen::MatrixXd& f,
                       const Eigen::RowVectorXd& kv,
                       const std::vector<std::complex<double>>& lambdas);

// Relative residual ||L(X) - mu X||_F / ||X||_F of the eigen-relation for one
// witness, evaluated complex-linearly under the closed loop (sys, alpha, kv).
double witness_residual(const SystemMatrices& sys, double alpha, const Eigen::RowVectorXd& kv,
                        const Witness& witness, Mode mode);

double max_witness_residual(const SystemMatrices& sys, double alpha, const Eigen::RowVectorXd& kv,
                            const WitnessSet& witnesses, Mode mode);

}  // namespace specassign::assign
