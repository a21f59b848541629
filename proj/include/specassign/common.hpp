#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace specassign {

enum class Mode { Discrete, Continuous };

inline const char* to_string(Mode mode) {
    return mode == Mode::Discrete ? "discrete" : "continuous";
}

enum class Errc {
    NonSymmetric,
    ShapeMismatch,
    EigenFailure,
    SpecInvalid,
    NotControllable,
    RankDeficient,
    BadShape,
    DefectiveEigenstructure,
    NotAnEigenvalue,
    NotConjugateClosed,
    IndexSearchExhausted,
    NonFinite,
    ParseError,
    ValidationError,
};

// Single exception type; call sites discriminate on code().
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// The plant matrices of x+ = Hx + Lu + Fv + uw (or its continuous analog).
// F is a single column: v is scalar throughout.
struct SystemMatrices {
    Eigen::MatrixXd H;
    Eigen::MatrixXd L;
    Eigen::MatrixXd F;  // n x 1

    int dim() const { return static_cast<int>(H.rows()); }
};

void validate_system(const SystemMatrices& sys);

}  // namespace specassign
