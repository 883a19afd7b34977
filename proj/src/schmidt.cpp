#include "ringjsa/schmidt.hpp"

#include <stdexcept>

namespace ringjsa {
namespace {

constexpr double kRelativeCutoff = 1e-14;

template <class Matrix>
SchmidtDecomposition decompose(const Matrix& matrix, bool with_modes) {
    if (matrix.size() == 0) {
        throw std::invalid_argument("cannot decompose an empty matrix");
    }
    if (!matrix.allFinite()) {
        throw std::invalid_argument("matrix contains non-finite entries");
    }
    if (matrix.cwiseAbs().maxCoeff() == 0.0) {
        throw std::invalid_argument("cannot decompose an all-zero matrix");
    }

    const unsigned options = with_modes ? (Eigen::ComputeThinU | Eigen::ComputeThinV) : 0u;
    Eigen::BDCSVD<Matrix> svd(matrix, options);
    const auto& s = svd.singularValues();

    SchmidtDecomposition out;
    const double cutoff = kRelativeCutoff * s(0);
    double total = 0.0;
    for (Eigen::Index k = 0; k < s.size() && s(k) > cutoff; ++k) {
        out.singular_values.push_back(s(k));
        total += s(k) * s(k);
    }
    out.coefficients.reserve(out.singular_values.size());
    for (double sv : out.singular_values) {
        out.coefficients.push_back(sv * sv / total);
    }
    if (with_modes) {
        const auto rank = static_cast<Eigen::Index>(out.singular_values.size());
        out.signal_modes = svd.matrixU().leftCols(rank).template cast<std::complex<double>>();
        out.idler_modes = svd.matrixV().leftCols(rank).template cast<std::complex<double>>();
    }
    return out;
}

}  // namespace

double SchmidtDecomposition::purity() const {
    double p = 0.0;
    for (double lambda : coefficients) {
        p += lambda * lambda;
    }
    return p;
}

SchmidtDecomposition schmidt_decompose(const Eigen::MatrixXcd& matrix, bool with_modes) {
    return decompose(matrix, with_modes);
}

SchmidtDecomposition schmidt_decompose(const Eigen::MatrixXd& matrix, bool with_modes) {
    return decompose(matrix, with_modes);
}

SchmidtDecomposition schmidt_decompose(const JsaMatrix& jsa, bool with_modes) {
    return decompose(jsa.values(), with_modes);
}

double purity(const Eigen::MatrixXcd& matrix) { return schmidt_decompose(matrix).purity(); }
double purity(const Eigen::MatrixXd& matrix) { return schmidt_decompose(matrix).purity(); }
double purity(const JsaMatrix& jsa) { return schmidt_decompose(jsa).purity(); }

double schmidt_number(const JsaMatrix& jsa) { return 1.0 / purity(jsa); }
double schmidt_number(const Eigen::MatrixXcd& matrix) { return 1.0 / purity(matrix); }

}  // namespace ringjsa
