#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rdmd/numerics.hpp"
#include "rdmd/systems.hpp"

namespace rdmd {

enum class BasisKind { fourier_hermite, hyperbolic_hermite, time_delay };

/// Dictionary specification. `target_size` selects a deterministic subset
/// of the Fourier x Hermite product when positive: indices are ranked by
/// the hyperbolic score max(|n|/10, k/20) with lexicographic (n, k)
/// tie-break, the first target_size survive, and the selected set is
/// emitted in lexicographic (n, k) order. target_size = 0 keeps the full
/// product.
struct BasisSpec {
    BasisKind kind = BasisKind::fourier_hermite;
    int fourier_min = -10;
    int fourier_max = 10;
    int hermite_max_order = 20;
    double velocity_scale = 0.70710678118654752440; // 1/sqrt(2)
    int hyperbolic_budget = 16;
    int state_dimension = 3; // hyperbolic_hermite only
    int delay_width = 1;
    int target_size = 0;
};

struct MultiIndexSet {
    std::vector<std::vector<int>> indices; // lexicographically sorted tuples
    int dimension = 0;

    std::size_t size() const { return indices.size(); }
};

/// Weighted dictionary evaluations on snapshot pairs: row m of psi_x is
/// the dictionary at sample m, row m of psi_y at its one-step image.
struct SnapshotMatrices {
    ComplexMatrix psi_x; // M x N
    ComplexMatrix psi_y; // M x N
    RealVector weights;  // M, non-negative, sums to 1
    double dt = 0.0;

    Eigen::Index sample_count() const { return psi_x.rows(); }
    Eigen::Index dict_size() const { return psi_x.cols(); }
};

/// Validates shape/finiteness/weight invariants; throws ConfigError.
SnapshotMatrices make_snapshots(ComplexMatrix psi_x, ComplexMatrix psi_y,
                                RealVector weights, double dt);

/// g = Psi_X^H W Psi_X, a1 = Psi_X^H W Psi_Y, a2 = Psi_Y^H W Psi_Y.
struct GramSet {
    ComplexMatrix g;  // Hermitian PSD
    ComplexMatrix a1;
    ComplexMatrix a2; // Hermitian PSD
};

/// Hermite polynomial orthonormal w.r.t. the weight e^{-x^2}; evaluated
/// by the stable three-term recurrence.
double hermite_orthonormal(int order, double x);

/// All orders 0..max_order at x, one recurrence sweep.
RealVector hermite_orthonormal_column(int max_order, double x);

/// Selected (n, k) pairs of the Fourier x Hermite dictionary, in the
/// emission order of eval_fourier_hermite.
std::vector<std::pair<int, int>> fourier_hermite_indices(const BasisSpec& spec);

/// Dictionary entries exp(i n theta) * h_k(theta_dot * velocity_scale)
/// for the spec's index set.
ComplexVector eval_fourier_hermite(const BasisSpec& spec, double theta, double theta_dot);

/// All tuples (n_1..n_d), n_j >= 0, with prod(n_j + 1) <= budget.
MultiIndexSet hyperbolic_cross_indices(int dimension, int budget);

/// Smallest budget whose hyperbolic cross has at least `target_size`
/// tuples; throws ConfigError when no budget hits the size exactly.
int hyperbolic_budget_for_size(int dimension, int target_size);

struct QuadratureRule {
    RealVector nodes;
    RealVector weights;
};

/// Gauss-Hermite rule for the weight e^{-x^2} (Golub-Welsch). Exact for
/// polynomials of degree <= 2 * order - 1. Orders above 64 are rejected.
QuadratureRule gauss_hermite_rule(int order);

/// Hankel-style delay embedding: M = L - width rows, row m of psi_x is
/// the window (x_m .. x_{m+width-1}) and psi_y its one-step shift.
SnapshotMatrices time_delay_embed(const RealVector& signal, int width, double dt);

/// Dictionary evaluations along a trajectory; M = length - 1 snapshot
/// pairs with uniform weights.
SnapshotMatrices build_snapshots(const Trajectory& traj, const BasisSpec& spec);

/// Tensor Gauss-Hermite snapshot rows for a hyperbolic-cross Hermite
/// dictionary: psi_x rows evaluate at the nodes, psi_y at their images
/// under `flowmap`; weights are the normalized tensor quadrature weights.
SnapshotMatrices quadrature_snapshots(
    const BasisSpec& spec, int rule_order,
    const std::function<RealVector(const RealVector&)>& flowmap, double dt);

GramSet grams(const SnapshotMatrices& snap);

} // namespace rdmd
