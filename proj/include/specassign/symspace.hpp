#pragma once

// Operator algebra on symmetric matrices.
//
// The closed loop of a linear system with control-multiplicative noise acts on
// second moments through a linear operator over S^n:
//
//   discrete:    L(X) = A_cl X A_cl' + Ku X Ku',        A_cl = H + L*Ku + F*Kv
//   continuous:  L(X) = A_cl X + X A_cl' + Tu X Tu'
//
// with Ku = Tu = alpha*I here. Identifying S^n with R^{n(n+1)/2} through the
// half-vectorization vech (column-major lower-triangular stack) and the
// duplication matrix M (vec X = M vech X), the operator becomes the
// n(n+1)/2-square matrix
//
//   T = (M'M)^{-1} M' [A_cl (x) A_cl + alpha^2 I] M          (discrete)
//   T = (M'M)^{-1} M' [I (x) A_cl + A_cl (x) I + alpha^2 I] M  (continuous)
//
// whose eigenvalues are the operator spectrum. All spectra here are returned
// in canonical order (ascending real part, then imaginary part).

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "specassign/common.hpp"

namespace specassign::symspace {

// Lower-triangular column-major stack of a symmetric n x n matrix.
struct SymVec {
    int n = 0;
    Eigen::VectorXd data;  // length n(n+1)/2
};

// M with vec(X) = M * vech(X) for symmetric X; n^2 x n(n+1)/2, full column rank.
struct DuplicationMatrix {
    int n = 0;
    Eigen::MatrixXd m;
};

// Matrix representation of the closed-loop operator on vech coordinates.
struct OperatorMatrix {
    int n = 0;
    Mode mode = Mode::Discrete;
    Eigen::MatrixXd t;  // n(n+1)/2 square
};

// Multiset of n(n+1)/2 operator eigenvalues, canonically sorted.
struct SpectrumSet {
    std::vector<std::complex<double>> values;
};

// Position of entry (i, j), i >= j, within the vech stack.
inline int vech_index(int i, int j, int n) {
    return j * n - j * (j - 1) / 2 + (i - j);
}

// Throws NonSymmetric beyond relative tolerance 1e-12; the result is built
// from the symmetrized (X + X')/2 to kill rounding drift.
SymVec vech(const Eigen::MatrixXd& x);

Eigen::MatrixXd unvech(const SymVec& v);

DuplicationMatrix duplication_matrix(int n);

Eigen::MatrixXd apply_operator_discrete(const Eigen::MatrixXd& h, const Eigen::MatrixXd& l,
                                        const Eigen::MatrixXd& f, double alpha,
                                        const Eigen::RowVectorXd& kv, const Eigen::MatrixXd& x);

Eigen::MatrixXd apply_operator_continuous(const Eigen::MatrixXd& h, const Eigen::MatrixXd& l,
                                          const Eigen::MatrixXd& f, double alpha,
                                          const Eigen::RowVectorXd& tv, const Eigen::MatrixXd& x);

Eigen::MatrixXd apply_operator(const SystemMatrices& sys, double alpha,
                               const Eigen::RowVectorXd& kv, const Eigen::MatrixXd& x, Mode mode);

// Operator of the general state- and control-dependent noise form:
//   discrete:    (A+BK) X (A+BK)' + (Abar+Bbar K) X (Abar+Bbar K)'
//   continuous:  (A+BK) X + X (A+BK)' + (Abar+Bbar K) X (Abar+Bbar K)'
Eigen::MatrixXd apply_operator_general(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                       const Eigen::MatrixXd& abar, const Eigen::MatrixXd& bbar,
                                       const Eigen::MatrixXd& k, const Eigen::MatrixXd& x,
                                       Mode mode);

OperatorMatrix operator_matrix(const SystemMatrices& sys, double alpha,
                               const Eigen::RowVectorXd& kv, Mode mode);

OperatorMatrix operator_matrix_general(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                       const Eigen::MatrixXd& abar, const Eigen::MatrixXd& bbar,
                                       const Eigen::MatrixXd& k, Mode mode);

SpectrumSet spectrum(const OperatorMatrix& op);

// Greedy nearest-neighbor matching between equal-size multisets; returns the
// largest matched pair distance. Throws ShapeMismatch on size mismatch.
double match_distance(const SpectrumSet& a, const SpectrumSet& b);

inline bool matches(const SpectrumSet& a, const SpectrumSet& b, double tol = 1e-6) {
    return match_distance(a, b) <= tol;
}

}  // namespace specassign::symspace
