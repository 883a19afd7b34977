#pragma once

#include <Eigen/Dense>

#include <vector>

#include "ringjsa/jsa.hpp"

namespace ringjsa {

struct SchmidtDecomposition {
    /// Descending; values below 1e-14 * s_max are dropped.
    std::vector<double> singular_values;
    /// lambda_k = s_k^2 / sum s_j^2, sums to 1.
    std::vector<double> coefficients;
    /// Columns are Schmidt modes; empty unless requested.
    Eigen::MatrixXcd signal_modes;
    Eigen::MatrixXcd idler_modes;

    double purity() const;
};

// The grid measure is omitted: on uniform grids it only rescales the matrix,
// which cancels in the normalized coefficients.

/// Throws std::invalid_argument on a non-finite or all-zero matrix.
SchmidtDecomposition schmidt_decompose(const Eigen::MatrixXcd& matrix, bool with_modes = false);
SchmidtDecomposition schmidt_decompose(const Eigen::MatrixXd& matrix, bool with_modes = false);
SchmidtDecomposition schmidt_decompose(const JsaMatrix& jsa, bool with_modes = false);

/// sum_k lambda_k^2
double purity(const Eigen::MatrixXcd& matrix);
double purity(const Eigen::MatrixXd& matrix);
double purity(const JsaMatrix& jsa);

/// 1 / purity
double schmidt_number(const JsaMatrix& jsa);
double schmidt_number(const Eigen::MatrixXcd& matrix);

}  // namespace ringjsa
