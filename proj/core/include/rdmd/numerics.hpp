#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "rdmd/errors.hpp"

namespace rdmd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Thin SVD m = U diag(s) V^H with descending singular values.
struct SvdFactors {
    ComplexMatrix left_vectors;   // U, rows x r
    RealVector singular_values;   // descending, >= 0
    ComplexMatrix right_vectors;  // V, cols x r
    double rank_tolerance = 1e-12;

    // Number of singular values above rank_tolerance * s_max.
    int rank() const;
};

struct Eigenpair {
    Complex value;
    ComplexVector vector; // right eigenvector, unit 2-norm
};

bool all_finite(const ComplexMatrix& m);
bool all_finite(const RealMatrix& m);
void require_finite(const ComplexMatrix& m, const char* what);
void require_finite(const RealMatrix& m, const char* what);

/// Thin SVD. Reconstruction holds to 1e-10 * max(1, ||m||_F).
SvdFactors svd(const ComplexMatrix& m, double rank_tolerance = 1e-12);

/// Moore-Penrose pseudoinverse; singular values below rel_tol * s_max are
/// treated as zero. An all-zero matrix maps to the zero matrix of
/// transposed shape.
ComplexMatrix pinv(const ComplexMatrix& m, double rel_tol = 1e-12);

/// Eigenpairs of a square matrix, eigenvalues repeated with algebraic
/// multiplicity. Schur reduction with back-substituted eigenvectors.
std::vector<Eigenpair> eig(const ComplexMatrix& m);

/// Eigenvalues only.
ComplexVector eigenvalues(const ComplexMatrix& m);

/// Smallest singular value; equals 1/||m^{-1}|| for invertible m.
double sigma_min(const ComplexMatrix& m);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

/// Solve m x = rhs for square m. Guarded by a condition estimate: systems
/// with an estimated inverse condition below 1e-14 raise
/// SingularSystemError. One step of iterative refinement keeps the
/// residual at the 1e-9 * ||rhs|| contract.
ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs);

} // namespace rdmd
