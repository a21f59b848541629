#include "specassign/symspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>

#include "specassign/numerics.hpp"

namespace specassign::symspace {

namespace {

constexpr double kSymTol = 1e-12;

void require_square(const Eigen::MatrixXd& x, const char* who) {
    if (x.rows() != x.cols() || x.rows() < 1) {
        std::ostringstream msg;
        msg << who << ": expected a square matrix, got " << x.rows() << "x" << x.cols();
        throw Error(Errc::ShapeMismatch, msg.str());
    }
}

// Checked symmetrization: relative tolerance kSymTol, then (X + X')/2.
Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& x, const char* who) {
    require_square(x, who);
    const double scale = 1.0 + x.cwiseAbs().maxCoeff();
    const double skew = (x - x.transpose()).cwiseAbs().maxCoeff();
    if (skew > kSymTol * scale) {
        std::ostringstream msg;
        msg << who << ": matrix is not symmetric (max |X - X'| = " << skew << ")";
        throw Error(Errc::NonSymmetric, msg.str());
    }
    return 0.5 * (x + x.transpose());
}

void require_shape(const Eigen::MatrixXd& m, long rows, long cols, const char* who,
                   const char* name) {
    if (m.rows() != rows || m.cols() != cols) {
        std::ostringstream msg;
        msg << who << ": " << name << " must be " << rows << "x" << cols << ", got " << m.rows()
            << "x" << m.cols();
        throw Error(Errc::ShapeMismatch, msg.str());
    }
}

Eigen::MatrixXd closed_loop(const Eigen::MatrixXd& h, const Eigen::MatrixXd& l,
                            const Eigen::MatrixXd& f, double alpha,
                            const Eigen::RowVectorXd& kv, const char* who) {
    const long n = h.rows();
    require_square(h, who);
    require_shape(l, n, n, who, "L");
    require_shape(f, n, 1, who, "F");
    require_shape(kv, 1, n, who, "kv");
    return h + alpha * l + f * kv;
}

}  // namespace

void require_operator_shapes(const Eigen::MatrixXd&, const Eigen::MatrixXd&);

SymVec vech(const Eigen::MatrixXd& x) {
    const Eigen::MatrixXd xs = symmetrized(x, "vech");
    const int n = static_cast<int>(xs.rows());
    Eigen::VectorXd data(n * (n + 1) / 2);
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i) {
            data(vech_index(i, j, n)) = xs(i, j);
        }
    }
    return SymVec{n, data};
}

Eigen::MatrixXd unvech(const SymVec& v) {
    const int n = v.n;
    if (v.data.size() != n * (n + 1) / 2) {
        throw Error(Errc::ShapeMismatch, "unvech: data length does not match dimension");
    }
    Eigen::MatrixXd x(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i) {
            x(i, j) = v.data(vech_index(i, j, n));
            x(j, i) = x(i, j);
        }
    }
    return x;
}

DuplicationMatrix duplication_matrix(int n) {
    if (n < 1) {
        throw Error(Errc::BadShape, "duplication_matrix: dimension must be >= 1");
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<long>(n) * n, n * (n + 1) / 2);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            m(i + static_cast<long>(j) * n, vech_index(std::max(i, j), std::min(i, j), n)) = 1.0;
        }
    }
    return DuplicationMatrix{n, m};
}

Eigen::MatrixXd apply_operator_discrete(const Eigen::MatrixXd& h, const Eigen::MatrixXd& l,
                                        const Eigen::MatrixXd& f, double alpha,
                                        const Eigen::RowVectorXd& kv, const Eigen::MatrixXd& x) {
    const Eigen::MatrixXd acl = closed_loop(h, l, f, alpha, kv, "apply_operator_discrete");
    const Eigen::MatrixXd xs = symmetrized(x, "apply_operator_discrete");
    const Eigen::MatrixXd result = acl * xs * acl.transpose() + alpha * alpha * xs;
    return 0.5 * (result + result.transpose());
}

Eigen::MatrixXd apply_operator_continuous(const Eigen::MatrixXd& h, const Eigen::MatrixXd& l,
                                          const Eigen::MatrixXd& f, double alpha,
                                          const Eigen::RowVectorXd& tv, const Eigen::MatrixXd& x) {
    const Eigen::MatrixXd acl = closed_loop(h, l, f, alpha, tv, "apply_operator_continuous");
    const Eigen::MatrixXd xs = symmetrized(x, "apply_operator_continuous");
    const Eigen::MatrixXd result = acl * xs + xs * acl.transpose() + alpha * alpha * xs;
    return 0.5 * (result + result.transpose());
}

Eigen::MatrixXd apply_operator(const SystemMatrices& sys, double alpha,
                               const Eigen::RowVectorXd& kv, const Eigen::MatrixXd& x, Mode mode) {
    return mode == Mode::Discrete ? apply_operator_discrete(sys.H, sys.L, sys.F, alpha, kv, x)
                                  : apply_operator_continuous(sys.H, sys.L, sys.F, alpha, kv, x);
}

Eigen::MatrixXd apply_operator_general(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                       const Eigen::MatrixXd& abar, const Eigen::MatrixXd& bbar,
                                       const Eigen::MatrixXd& k, const Eigen::MatrixXd& x,
                                       Mode mode) {
    const char* who = "apply_operator_general";
    const long n = a.rows();
    const long m = b.cols();
    require_square(a, who);
    require_shape(abar, n, n, who, "Abar");
    require_shape(b, n, m, who, "B");
    require_shape(bbar, n, m, who, "Bbar");
    require_shape(k, m, n, who, "K");

    const Eigen::MatrixXd acl = a + b * k;
    const Eigen::MatrixXd noise_cl = abar + bbar * k;
    const Eigen::MatrixXd xs = symmetrized(x, who);

    Eigen::MatrixXd result;
    if (mode == Mode::Discrete) {
        result = acl * xs * acl.transpose() + noise_cl * xs * noise_cl.transpose();
    } else {
        result = acl * xs + xs * acl.transpose() + noise_cl * xs * noise_cl.transpose();
    }
    return 0.5 * (result + result.transpose());
}

namespace {

// (M'M)^{-1} M' * vectorized_operator * M on vech coordinates.
Eigen::MatrixXd project_to_vech(const Eigen::MatrixXd& vec_op, int n) {
    const DuplicationMatrix dup = duplication_matrix(n);
    const Eigen::MatrixXd mtm = dup.m.transpose() * dup.m;  // diagonal: 1 or 2
    return mtm.ldlt().solve(dup.m.transpose() * vec_op * dup.m);
}

}  // namespace

OperatorMatrix operator_matrix(const SystemMatrices& sys, double alpha,
                               const Eigen::RowVectorXd& kv, Mode mode) {
    const Eigen::MatrixXd acl = closed_loop(sys.H, sys.L, sys.F, alpha, kv, "operator_matrix");
    const int n = static_cast<int>(acl.rows());
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);

    Eigen::MatrixXd vec_op;
    if (mode == Mode::Discrete) {
        vec_op = Eigen::kroneckerProduct(acl, acl).eval();
        vec_op += alpha * alpha * Eigen::MatrixXd::Identity(static_cast<long>(n) * n, static_cast<long>(n) * n);
    } else {
        vec_op = Eigen::kroneckerProduct(eye, acl).eval();
        vec_op += Eigen::kroneckerProduct(acl, eye);
        vec_op += alpha * alpha * Eigen::MatrixXd::Identity(static_cast<long>(n) * n, static_cast<long>(n) * n);
    }
    return OperatorMatrix{n, mode, project_to_vech(vec_op, n)};
}

OperatorMatrix operator_matrix_general(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                       const Eigen::MatrixXd& abar, const Eigen::MatrixXd& bbar,
                                       const Eigen::MatrixXd& k, Mode mode) {
    const char* who = "operator_matrix_general";
    const long n = a.rows();
    require_square(a, who);
    require_shape(abar, n, n, who, "Abar");
    require_shape(b, n, b.cols(), who, "B");
    require_shape(bbar, n, b.cols(), who, "Bbar");
    require_shape(k, b.cols(), n, who, "K");

    const Eigen::MatrixXd acl = a + b * k;
    const Eigen::MatrixXd noise_cl = abar + bbar * k;
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);

    Eigen::MatrixXd vec_op;
    if (mode == Mode::Discrete) {
        vec_op = Eigen::kroneckerProduct(acl, acl).eval();
    } else {
        vec_op = Eigen::kroneckerProduct(eye, acl).eval();
        vec_op += Eigen::kroneckerProduct(acl, eye);
    }
    vec_op += Eigen::kroneckerProduct(noise_cl, noise_cl);
    return OperatorMatrix{static_cast<int>(n), mode, project_to_vech(vec_op, static_cast<int>(n))};
}

SpectrumSet spectrum(const OperatorMatrix& op) {
    const long expected = static_cast<long>(op.n) * (op.n + 1) / 2;
    if (op.t.rows() != expected || op.t.cols() != expected) {
        throw Error(Errc::ShapeMismatch, "spectrum: operator matrix size is not n(n+1)/2");
    }
    return SpectrumSet{numerics::eigenvalues(op.t)};
}

double match_distance(const SpectrumSet& a, const SpectrumSet& b) {
    if (a.values.size() != b.values.size()) {
        throw Error(Errc::ShapeMismatch, "match_distance: spectra differ in size");
    }
    std::vector<bool> used(b.values.size(), false);
    double worst = 0.0;
    for (const auto& va : a.values) {
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.values.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(va - b.values[j]);
            if (d < best_dist) {
                best_dist = d;
                best = static_cast<int>(j);
            }
        }
        used[best] = true;
        worst = std::max(worst, best_dist);
    }
    return worst;
}

}  // namespace specassign::symspace
