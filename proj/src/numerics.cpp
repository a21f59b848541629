#include "specassign/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace specassign::numerics {

namespace {

void require_square(const Eigen::MatrixXd& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        std::ostringstream msg;
        msg << who << ": expected a square matrix, got " << a.rows() << "x" << a.cols();
        throw Error(Errc::ShapeMismatch, msg.str());
    }
}

}  // namespace

MonicPoly char_poly(const Eigen::MatrixXd& a) {
    require_square(a, "char_poly");
    const int n = static_cast<int>(a.rows());

    // Faddeev-LeVerrier: M_1 = A, a_k = -tr(M_k)/k, M_{k+1} = A(M_k + a_k I).
    Eigen::RowVectorXd coeffs(n);
    Eigen::MatrixXd m = a;
    coeffs(0) = -m.trace();
    for (int k = 2; k <= n; ++k) {
        m = a * (m + coeffs(k - 2) * Eigen::MatrixXd::Identity(n, n));
        coeffs(k - 1) = -m.trace() / k;
    }
    return MonicPoly{coeffs};
}

TargetCoeffs poly_from_roots(const std::vector<std::complex<double>>& roots) {
    if (roots.empty()) {
        throw Error(Errc::SpecInvalid, "poly_from_roots: empty root set");
    }
    if (!is_conjugate_closed(roots)) {
        throw Error(Errc::NotConjugateClosed,
                    "poly_from_roots: root multiset is not closed under conjugation");
    }

    // Descending-power coefficients, c[0] = 1; multiplying by (beta - r)
    // updates c[i] <- c[i] - r * c[i-1] from the high index down.
    const int n = static_cast<int>(roots.size());
    std::vector<std::complex<double>> c(n + 1, 0.0);
    c[0] = 1.0;
    for (int k = 0; k < n; ++k) {
        for (int i = k + 1; i > 0; --i) {
            c[i] -= roots[k] * c[i - 1];
        }
    }

    double scale = 0.0;
    for (const auto& v : c) scale = std::max(scale, std::abs(v));
    Eigen::RowVectorXd a(n);
    for (int i = 1; i <= n; ++i) {
        if (std::abs(c[i].imag()) > 1e-10 * (1.0 + scale)) {
            throw Error(Errc::NotConjugateClosed,
                        "poly_from_roots: nonreal coefficient residue after expansion");
        }
        a(i - 1) = c[i].real();
    }
    return TargetCoeffs{a};
}

Eigen::MatrixXd companion(const Eigen::RowVectorXd& coeffs) {
    const int n = static_cast<int>(coeffs.size());
    if (n < 1) {
        throw Error(Errc::BadShape, "companion: empty coefficient vector");
    }
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    c.block(1, 0, n - 1, n - 1).setIdentity();
    for (int i = 0; i < n; ++i) {
        c(i, n - 1) = -coeffs(n - 1 - i);
    }
    return c;
}

void canonical_sort(std::vector<std::complex<double>>& values) {
    std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& a) {
    require_square(a, "eigenvalues");
    if (!a.allFinite()) {
        throw Error(Errc::NonFinite, "eigenvalues: matrix has non-finite entries");
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw Error(Errc::EigenFailure, "eigenvalues: QR iteration did not converge");
    }
    const auto& ev = solver.eigenvalues();
    std::vector<std::complex<double>> values(ev.data(), ev.data() + ev.size());
    canonical_sort(values);
    return values;
}

Eigen::VectorXcd eigenvector(const Eigen::MatrixXd& a, std::complex<double> lambda) {
    require_square(a, "eigenvector");
    const int n = static_cast<int>(a.rows());
    Eigen::MatrixXcd shifted = a.cast<std::complex<double>>();
    shifted -= lambda * Eigen::MatrixXcd::Identity(n, n);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
    Eigen::VectorXcd xi = svd.matrixV().col(n - 1);

    const double residual = (a * xi - lambda * xi).norm();
    if (residual > 1e-8 * xi.norm()) {
        std::ostringstream msg;
        msg << "eigenvector: residual " << residual << " for lambda = (" << lambda.real() << ", "
            << lambda.imag() << ")";
        throw Error(Errc::NotAnEigenvalue, msg.str());
    }

    // Fix the phase: largest-magnitude component real positive.
    int imax = 0;
    for (int i = 1; i < n; ++i) {
        if (std::abs(xi(i)) > std::abs(xi(imax))) imax = i;
    }
    xi *= std::conj(xi(imax)) / std::abs(xi(imax));
    return xi / xi.norm();
}

bool is_conjugate_closed(const std::vector<std::complex<double>>& values, double tol) {
    std::vector<bool> used(values.size(), false);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (used[i]) continue;
        const auto& v = values[i];
        if (std::abs(v.imag()) <= tol * (1.0 + std::abs(v))) {
            used[i] = true;
            continue;
        }
        bool paired = false;
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(std::conj(v) - values[j]) <= tol * (1.0 + std::abs(v))) {
                used[i] = used[j] = true;
                paired = true;
                break;
            }
        }
        if (!paired) return false;
    }
    return true;
}

}  // namespace specassign::numerics
