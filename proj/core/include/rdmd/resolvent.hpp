#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "rdmd/edmd.hpp"

namespace rdmd {

enum class ResolventMode { koopman, generator };

/// How to evaluate 1/||R_N(z)|| on grids. SigmaMin (the default) computes
/// sigma_min(z I - K_N), which stays stable arbitrarily close to the
/// spectrum; Smw evaluates the data-matrix construction and norms its
/// inverse; Direct norms the solved resolvent.
enum class ResolventRoute { sigma_min, smw, direct };

/// Direction of maximal amplification under R_N(z): the right singular
/// vector of (z I - K_N) for sigma_min. Phase fixed so the
/// largest-modulus coefficient is real positive.
struct Pseudoeigenfunction {
    Complex z;
    ComplexVector coeffs;       // unit 2-norm
    double amplification = 0.0; // = ||R_N(z)|| = 1/sigma_min
};

enum class GridKind { circle, rectangle };

struct PseudospectrumGrid {
    std::vector<Complex> points;
    std::vector<double> inv_norms; // 1/||R_N(z)|| per point
    GridKind kind = GridKind::circle;
    double radius = 0.0;                          // circle grids
    double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0; // rectangle grids
    int nx = 0, ny = 0;
};

struct DetectionResult {
    double threshold = 0.0;
    std::vector<Complex> detected;  // grid points with inv_norm < threshold
    std::vector<char> mask;         // 1 per detected grid index
};

/// Precomputed factorizations for evaluating the pseudo-resolvent
///   R_N(z) = (1/z) I + (1/z^2) Psi_X^+ (I - (1/z) P)^{-1} Psi_op,
/// P = Psi_op Psi_X^+, with Psi_op = Psi_Y (Koopman mode) or
/// Psi_X' = (Psi_Y - Psi_X)/dt (generator mode). The same object serves
/// the algebraically equivalent direct form (z I - K_N)^{-1}.
/// Immutable after construction; safe for concurrent reads.
class ResolventEvaluator {
public:
    /// Build from weighted snapshots; enables all three routes. Matrices
    /// are sqrt(W)-scaled so the SMW construction matches the weighted
    /// least-squares K_N.
    static ResolventEvaluator from_snapshots(const SnapshotMatrices& snap,
                                             ResolventMode mode = ResolventMode::koopman,
                                             double pinv_tol = 1e-12);

    /// Build from an assembled matrix; SMW route unavailable.
    static ResolventEvaluator from_koopman(KoopmanMatrix k,
                                           ResolventMode mode = ResolventMode::koopman);
    static ResolventEvaluator from_generator(const GeneratorMatrix& a);

    const ComplexMatrix& matrix() const { return koopman_.k; } // K_N or A_N
    ResolventMode mode() const { return mode_; }
    int dict_size() const { return static_cast<int>(koopman_.k.rows()); }
    bool has_snapshot_data() const { return cached_product_.size() > 0; }
    const ComplexVector& spectrum() const { return eigenvalues_; }

    /// Data-matrix SMW evaluation. Throws NumericError at z = 0 and
    /// SingularSystemError (naming z) when the inner matrix is singular.
    ComplexMatrix smw_resolvent(Complex z) const;

    /// Solve (z I - K_N) X = I. A singular system reports z as an exact
    /// eigenvalue hit.
    ComplexMatrix direct_resolvent(Complex z) const;

    /// sigma_min(z I - K_N); zero when z is an eigenvalue.
    double inv_resolvent_norm(Complex z) const;

    /// Route-selected 1/||R_N(z)||. The SMW route falls back to the
    /// direct solve for |z| < 1e-8 where its 1/z factors blow up.
    double inv_resolvent_norm_via(Complex z, ResolventRoute route) const;

    Pseudoeigenfunction pseudoeigenfunction(Complex z) const;

private:
    KoopmanMatrix koopman_;
    ResolventMode mode_ = ResolventMode::koopman;
    ComplexMatrix psi_x_pinv_;     // N x M (empty without snapshot data)
    ComplexMatrix psi_op_;         // M x N
    ComplexMatrix cached_product_; // M x M, psi_op * psi_x_pinv
    ComplexVector eigenvalues_;
};

/// Evaluate on z = radius e^{2 pi i j / n_points}, j = 0..n_points-1.
PseudospectrumGrid scan_circle(const ResolventEvaluator& ev, double radius, int n_points,
                               ResolventRoute route = ResolventRoute::sigma_min,
                               int threads = 1);

/// Row-major grid over [re_lo, re_hi] x [im_lo, im_hi] (imaginary axis is
/// the slow index).
PseudospectrumGrid scan_rectangle(const ResolventEvaluator& ev, double re_lo, double re_hi,
                                  double im_lo, double im_hi, int nx, int ny,
                                  ResolventRoute route = ResolventRoute::sigma_min,
                                  int threads = 1);

/// Strict filter inv_norm < threshold.
DetectionResult detect(const PseudospectrumGrid& grid, double threshold);

} // namespace rdmd
