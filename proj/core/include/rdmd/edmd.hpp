#pragma once

#include "rdmd/dictionary.hpp"
#include "rdmd/numerics.hpp"

namespace rdmd {

enum class KoopmanSource { pseudoinverse_route, gram_route };

/// Finite-dimensional Koopman matrix K_N.
struct KoopmanMatrix {
    ComplexMatrix k; // N x N
    KoopmanSource source = KoopmanSource::pseudoinverse_route;
    int dict_size = 0;
};

/// Finite-dimensional generator matrix A_N, built from the
/// finite-difference derivative data (psi_y - psi_x) / dt.
struct GeneratorMatrix {
    ComplexMatrix a; // N x N
    double dt = 0.0;
};

/// K = pinv(sqrt(W) Psi_X) (sqrt(W) Psi_Y); with uniform weights this is
/// the plain least-squares Psi_X^+ Psi_Y.
KoopmanMatrix koopman_from_snapshots(const SnapshotMatrices& snap, double pinv_tol = 1e-12);

/// K = pinv(G) A1. Agrees with the snapshot route for full-column-rank
/// Psi_X; preferred when M >> N (N x N solves only).
KoopmanMatrix koopman_from_grams(const GramSet& gr, double pinv_tol = 1e-12);

/// A = pinv(sqrt(W) Psi_X) (sqrt(W) (Psi_Y - Psi_X) / dt). Satisfies
/// A = (K - I) / dt for the same snapshots.
GeneratorMatrix generator_from_snapshots(const SnapshotMatrices& snap, double pinv_tol = 1e-12);

/// Same finite-difference construction starting from an assembled K.
GeneratorMatrix generator_from_koopman(const KoopmanMatrix& k, double dt);

} // namespace rdmd
