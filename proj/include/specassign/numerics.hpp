#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "specassign/common.hpp"

namespace specassign::numerics {

// Coefficients [a1, ..., an] of det(lambda*I - A) = lambda^n + a1*lambda^(n-1) + ... + an.
struct MonicPoly {
    Eigen::RowVectorXd coeffs;

    int degree() const { return static_cast<int>(coeffs.size()); }
};

// Coefficients [a_{n-1}, ..., a1, a0] of prod(beta - lambda_i), realified.
struct TargetCoeffs {
    Eigen::RowVectorXd a;
};

// Characteristic polynomial by the Faddeev-LeVerrier recurrence.
// Deterministic and eigen-free: the learner differences these coefficients,
// so observation noise must be the only randomness in them.
MonicPoly char_poly(const Eigen::MatrixXd& a);

// Expands prod(beta - lambda_i) for a conjugate-closed root multiset.
// Throws NotConjugateClosed if pairing fails at tolerance 1e-9.
TargetCoeffs poly_from_roots(const std::vector<std::complex<double>>& roots);

// Companion matrix of lambda^n + a1*lambda^(n-1) + ... + an given [a1..an].
Eigen::MatrixXd companion(const Eigen::RowVectorXd& coeffs);

// Sorts ascending by real part, then imaginary part.
void canonical_sort(std::vector<std::complex<double>>& values);

// Dense eigenvalues, canonically sorted. Throws EigenFailure on non-convergence.
std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& a);

// Unit-norm eigenvector for a known eigenvalue, via the null space of (A - lambda*I).
// Throws NotAnEigenvalue if the residual ||A*xi - lambda*xi|| exceeds 1e-8.
Eigen::VectorXcd eigenvector(const Eigen::MatrixXd& a, std::complex<double> lambda);

// True when the multiset pairs up under conjugation within tolerance.
bool is_conjugate_closed(const std::vector<std::complex<double>>& values, double tol = 1e-9);

}  // namespace specassign::numerics
