#include "rdmd/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace rdmd {

int SvdFactors::rank() const {
    if (singular_values.size() == 0) return 0;
    const double cut = rank_tolerance * singular_values(0);
    int r = 0;
    for (Eigen::Index i = 0; i < singular_values.size(); ++i)
        if (singular_values(i) > cut) ++r;
    return r;
}

bool all_finite(const ComplexMatrix& m) {
    return m.array().real().isFinite().all() && m.array().imag().isFinite().all();
}

bool all_finite(const RealMatrix& m) { return m.array().isFinite().all(); }

void require_finite(const ComplexMatrix& m, const char* what) {
    if (!all_finite(m)) throw NumericError(std::string(what) + ": non-finite entries");
}

void require_finite(const RealMatrix& m, const char* what) {
    if (!all_finite(m)) throw NumericError(std::string(what) + ": non-finite entries");
}

SvdFactors svd(const ComplexMatrix& m, double rank_tolerance) {
    if (m.size() == 0) throw ConfigError("svd: empty matrix");
    require_finite(m, "svd input");
    Eigen::BDCSVD<ComplexMatrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success)
        throw NumericError("svd: iteration did not converge");
    SvdFactors f;
    f.left_vectors = dec.matrixU();
    f.singular_values = dec.singularValues();
    f.right_vectors = dec.matrixV();
    f.rank_tolerance = rank_tolerance;
    return f;
}

ComplexMatrix pinv(const ComplexMatrix& m, double rel_tol) {
    if (rel_tol <= 0) throw ConfigError("pinv: rel_tol must be positive");
    if (m.size() == 0) throw ConfigError("pinv: empty matrix");
    if (m.isZero(0.0)) return ComplexMatrix::Zero(m.cols(), m.rows());
    SvdFactors f = svd(m, rel_tol);
    const double cut = rel_tol * f.singular_values(0);
    const Eigen::Index r = f.singular_values.size();
    RealVector inv = RealVector::Zero(r);
    for (Eigen::Index i = 0; i < r; ++i)
        if (f.singular_values(i) > cut) inv(i) = 1.0 / f.singular_values(i);
    return f.right_vectors * inv.asDiagonal() * f.left_vectors.adjoint();
}

std::vector<Eigenpair> eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw ConfigError("eig: matrix must be square");
    require_finite(m, "eig input");
    Eigen::ComplexEigenSolver<ComplexMatrix> dec(m, /*computeEigenvectors=*/true);
    if (dec.info() != Eigen::Success)
        throw NumericError("eig: iteration cap exceeded");
    std::vector<Eigenpair> out(static_cast<size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out[static_cast<size_t>(i)].value = dec.eigenvalues()(i);
        ComplexVector v = dec.eigenvectors().col(i);
        const double n = v.norm();
        if (n > 0) v /= n;
        out[static_cast<size_t>(i)].vector = std::move(v);
    }
    return out;
}

ComplexVector eigenvalues(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw ConfigError("eigenvalues: matrix must be square");
    require_finite(m, "eigenvalues input");
    Eigen::ComplexEigenSolver<ComplexMatrix> dec(m, /*computeEigenvectors=*/false);
    if (dec.info() != Eigen::Success)
        throw NumericError("eigenvalues: iteration cap exceeded");
    return dec.eigenvalues();
}

double sigma_min(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw ConfigError("sigma_min: matrix must be square");
    Eigen::BDCSVD<ComplexMatrix> dec(m);
    if (dec.info() != Eigen::Success)
        throw NumericError("sigma_min: svd did not converge");
    return dec.singularValues()(dec.singularValues().size() - 1);
}

double spectral_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<ComplexMatrix> dec(m);
    if (dec.info() != Eigen::Success)
        throw NumericError("spectral_norm: svd did not converge");
    return dec.singularValues()(0);
}

ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs) {
    if (m.rows() != m.cols()) throw ConfigError("solve: matrix must be square");
    if (m.rows() != rhs.rows()) throw ConfigError("solve: rhs row mismatch");
    Eigen::PartialPivLU<ComplexMatrix> lu(m);
    const double rcond = lu.rcond(); // 1-norm estimate of sigma_min/sigma_max
    if (!(rcond > 1e-14))
        throw SingularSystemError("solve: near-singular system, condition estimate " +
                                      std::to_string(rcond),
                                  rcond);
    ComplexMatrix x = lu.solve(rhs);
    x += lu.solve(rhs - m * x); // one refinement pass
    return x;
}

} // namespace rdmd
