#include "rdmd/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rdmd {

namespace {

constexpr double kQuarterRootPi = 1.3313353638003897127975349179503; // pi^(1/4)

double subset_score(int n, int k) {
    return std::max(std::abs(n) / 10.0, k / 20.0);
}

} // namespace

SnapshotMatrices make_snapshots(ComplexMatrix psi_x, ComplexMatrix psi_y,
                                RealVector weights, double dt) {
    if (psi_x.rows() != psi_y.rows() || psi_x.cols() != psi_y.cols())
        throw ConfigError("snapshots: psi_x and psi_y must share shape");
    if (psi_x.rows() == 0 || psi_x.cols() == 0)
        throw ConfigError("snapshots: empty snapshot matrices");
    if (weights.size() != psi_x.rows())
        throw ConfigError("snapshots: weights length must equal the row count");
    if ((weights.array() < 0).any())
        throw ConfigError("snapshots: weights must be non-negative");
    if (std::abs(weights.sum() - 1.0) > 1e-9)
        throw ConfigError("snapshots: weights must sum to 1");
    require_finite(psi_x, "psi_x");
    require_finite(psi_y, "psi_y");
    SnapshotMatrices snap;
    snap.psi_x = std::move(psi_x);
    snap.psi_y = std::move(psi_y);
    snap.weights = std::move(weights);
    snap.dt = dt;
    return snap;
}

double hermite_orthonormal(int order, double x) {
    return hermite_orthonormal_column(order, x)(order);
}

RealVector hermite_orthonormal_column(int max_order, double x) {
    if (max_order < 0) throw ConfigError("hermite: order must be >= 0");
    RealVector h(max_order + 1);
    h(0) = 1.0 / kQuarterRootPi;
    if (max_order >= 1) h(1) = std::sqrt(2.0) * x / kQuarterRootPi;
    for (int k = 1; k < max_order; ++k)
        h(k + 1) = x * std::sqrt(2.0 / (k + 1)) * h(k) - std::sqrt(double(k) / (k + 1)) * h(k - 1);
    return h;
}

std::vector<std::pair<int, int>> fourier_hermite_indices(const BasisSpec& spec) {
    if (spec.fourier_min > spec.fourier_max)
        throw ConfigError("basis: fourier_min must be <= fourier_max");
    if (spec.hermite_max_order < 0)
        throw ConfigError("basis: hermite_max_order must be >= 0");
    std::vector<std::pair<int, int>> pool;
    pool.reserve(static_cast<std::size_t>(spec.fourier_max - spec.fourier_min + 1) *
                 static_cast<std::size_t>(spec.hermite_max_order + 1));
    for (int n = spec.fourier_min; n <= spec.fourier_max; ++n)
        for (int k = 0; k <= spec.hermite_max_order; ++k) pool.emplace_back(n, k);
    if (spec.target_size > 0) {
        if (static_cast<std::size_t>(spec.target_size) > pool.size())
            throw ConfigError("basis: target_size exceeds the index pool (" +
                              std::to_string(pool.size()) + " candidates)");
        std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
            const double sa = subset_score(a.first, a.second);
            const double sb = subset_score(b.first, b.second);
            if (sa != sb) return sa < sb;
            return a < b;
        });
        pool.resize(static_cast<std::size_t>(spec.target_size));
        std::sort(pool.begin(), pool.end());
    }
    return pool;
}

ComplexVector eval_fourier_hermite(const BasisSpec& spec, double theta, double theta_dot) {
    if (spec.kind != BasisKind::fourier_hermite)
        throw ConfigError("eval_fourier_hermite: spec kind mismatch");
    const auto idx = fourier_hermite_indices(spec);
    const RealVector h = hermite_orthonormal_column(spec.hermite_max_order,
                                                    theta_dot * spec.velocity_scale);
    ComplexVector out(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const auto [n, k] = idx[j];
        out(static_cast<Eigen::Index>(j)) =
            std::polar(1.0, n * theta) * h(k);
    }
    return out;
}

MultiIndexSet hyperbolic_cross_indices(int dimension, int budget) {
    if (dimension < 1) throw ConfigError("hyperbolic cross: dimension must be >= 1");
    if (budget < 1) throw ConfigError("hyperbolic cross: budget must be >= 1");
    MultiIndexSet set;
    set.dimension = dimension;
    std::vector<int> tuple(static_cast<std::size_t>(dimension), 0);
    // depth-first enumeration in lexicographic order
    std::function<void(int, long long)> visit = [&](int axis, long long product) {
        if (axis == dimension) {
            set.indices.push_back(tuple);
            return;
        }
        for (int n = 0;; ++n) {
            const long long p = product * (n + 1);
            if (p > budget) break;
            tuple[static_cast<std::size_t>(axis)] = n;
            visit(axis + 1, p);
        }
        tuple[static_cast<std::size_t>(axis)] = 0;
    };
    visit(0, 1);
    return set;
}

int hyperbolic_budget_for_size(int dimension, int target_size) {
    if (target_size < 1) throw ConfigError("hyperbolic cross: target_size must be >= 1");
    std::size_t prev = 0;
    for (int budget = 1; budget <= 1 << 20; ++budget) {
        const std::size_t count = hyperbolic_cross_indices(dimension, budget).size();
        if (count == static_cast<std::size_t>(target_size)) return budget;
        if (count > static_cast<std::size_t>(target_size))
            throw ConfigError("hyperbolic cross: no budget gives size " +
                              std::to_string(target_size) + " (jumps " +
                              std::to_string(prev) + " -> " + std::to_string(count) + ")");
        prev = count;
    }
    throw ConfigError("hyperbolic cross: budget sweep exhausted");
}

QuadratureRule gauss_hermite_rule(int order) {
    if (order < 1) throw ConfigError("gauss-hermite: order must be >= 1");
    if (order > 64) throw ConfigError("gauss-hermite: orders above 64 are unsupported");
    // Golub-Welsch: Jacobi matrix of the (monic) Hermite family has zero
    // diagonal and off-diagonal sqrt(k/2); weights are sqrt(pi) times the
    // squared first eigenvector components.
    RealMatrix jacobi = RealMatrix::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        const double b = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(jacobi);
    if (es.info() != Eigen::Success)
        throw NumericError("gauss-hermite: eigensolve failed");
    const double mu0 = std::sqrt(kPi); // integral of e^{-x^2}
    QuadratureRule rule;
    rule.nodes = es.eigenvalues();
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        const double first = es.eigenvectors()(0, i);
        rule.weights(i) = mu0 * first * first;
    }
    return rule;
}

SnapshotMatrices time_delay_embed(const RealVector& signal, int width, double dt) {
    if (width < 1) throw ConfigError("time-delay: width must be >= 1");
    const Eigen::Index length = signal.size();
    if (length < width + 2)
        throw ConfigError("time-delay: signal length " + std::to_string(length) +
                          " is too short for width " + std::to_string(width));
    const Eigen::Index rows = length - width;
    ComplexMatrix psi_x(rows, width), psi_y(rows, width);
    for (Eigen::Index m = 0; m < rows; ++m)
        for (int j = 0; j < width; ++j) {
            psi_x(m, j) = signal(m + j);
            psi_y(m, j) = signal(m + 1 + j);
        }
    RealVector weights = RealVector::Constant(rows, 1.0 / static_cast<double>(rows));
    return make_snapshots(std::move(psi_x), std::move(psi_y), std::move(weights), dt);
}

SnapshotMatrices build_snapshots(const Trajectory& traj, const BasisSpec& spec) {
    if (traj.length() < 2) throw ConfigError("snapshots: trajectory needs >= 2 samples");
    switch (spec.kind) {
    case BasisKind::fourier_hermite: {
        if (traj.dimension() < 2)
            throw ConfigError("snapshots: fourier_hermite needs (theta, theta_dot) states");
        const auto idx = fourier_hermite_indices(spec);
        const Eigen::Index rows = traj.length() - 1;
        const Eigen::Index cols = static_cast<Eigen::Index>(idx.size());
        ComplexMatrix psi_x(rows, cols), psi_y(rows, cols);
        auto fill_row = [&](Eigen::Index sample, auto&& target) {
            const double theta = traj.states(sample, 0);
            const RealVector h = hermite_orthonormal_column(
                spec.hermite_max_order, traj.states(sample, 1) * spec.velocity_scale);
            for (std::size_t j = 0; j < idx.size(); ++j)
                target(static_cast<Eigen::Index>(j)) =
                    std::polar(1.0, idx[j].first * theta) * h(idx[j].second);
        };
        for (Eigen::Index m = 0; m < rows; ++m) {
            fill_row(m, psi_x.row(m));
            fill_row(m + 1, psi_y.row(m));
        }
        RealVector weights = RealVector::Constant(rows, 1.0 / static_cast<double>(rows));
        return make_snapshots(std::move(psi_x), std::move(psi_y), std::move(weights), traj.dt);
    }
    case BasisKind::time_delay:
        // delay dictionaries read the scalar observable in column 0
        return time_delay_embed(traj.states.col(0), spec.delay_width, traj.dt);
    case BasisKind::hyperbolic_hermite:
        throw ConfigError("snapshots: hyperbolic_hermite uses quadrature_snapshots");
    }
    throw ConfigError("snapshots: unknown basis kind");
}

namespace {

// Tensor-Hermite dictionary value at a point, normalized against the unit
// Gaussian measure pi^{-d/2} e^{-|x|^2} so quadrature Grams come out as
// the identity.
RealVector hyperbolic_dictionary_row(const MultiIndexSet& set,
                                     const std::vector<RealVector>& axis_columns) {
    RealVector row(static_cast<Eigen::Index>(set.size()));
    for (std::size_t j = 0; j < set.size(); ++j) {
        double v = 1.0;
        for (int a = 0; a < set.dimension; ++a)
            v *= axis_columns[static_cast<std::size_t>(a)](set.indices[j][static_cast<std::size_t>(a)]) *
                 kQuarterRootPi;
        row(static_cast<Eigen::Index>(j)) = v;
    }
    return row;
}

} // namespace

SnapshotMatrices quadrature_snapshots(
    const BasisSpec& spec, int rule_order,
    const std::function<RealVector(const RealVector&)>& flowmap, double dt) {
    if (spec.kind != BasisKind::hyperbolic_hermite)
        throw ConfigError("quadrature snapshots: spec kind must be hyperbolic_hermite");
    const int d = spec.state_dimension;
    const MultiIndexSet set = hyperbolic_cross_indices(d, spec.hyperbolic_budget);
    const QuadratureRule rule = gauss_hermite_rule(rule_order);

    double row_count = 1;
    for (int a = 0; a < d; ++a) row_count *= rule_order;
    if (row_count > 1e6)
        throw ConfigError("quadrature snapshots: tensor grid exceeds 1e6 rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(row_count);
    const Eigen::Index cols = static_cast<Eigen::Index>(set.size());

    int max_order = 0;
    for (const auto& tuple : set.indices)
        for (int n : tuple) max_order = std::max(max_order, n);

    ComplexMatrix psi_x(rows, cols), psi_y(rows, cols);
    RealVector weights(rows);
    std::vector<int> digits(static_cast<std::size_t>(d), 0);
    RealVector node(d);
    std::vector<RealVector> x_cols(static_cast<std::size_t>(d)), y_cols(static_cast<std::size_t>(d));
    for (Eigen::Index m = 0; m < rows; ++m) {
        double w = 1.0;
        for (int a = 0; a < d; ++a) {
            node(a) = rule.nodes(digits[static_cast<std::size_t>(a)]);
            w *= rule.weights(digits[static_cast<std::size_t>(a)]);
        }
        weights(m) = w;
        const RealVector image = flowmap(node);
        if (image.size() != d)
            throw ConfigError("quadrature snapshots: flowmap changed the state dimension");
        for (int a = 0; a < d; ++a) {
            x_cols[static_cast<std::size_t>(a)] = hermite_orthonormal_column(max_order, node(a));
            y_cols[static_cast<std::size_t>(a)] = hermite_orthonormal_column(max_order, image(a));
        }
        psi_x.row(m) = hyperbolic_dictionary_row(set, x_cols).transpose().cast<Complex>();
        psi_y.row(m) = hyperbolic_dictionary_row(set, y_cols).transpose().cast<Complex>();
        // odometer increment, last axis fastest
        for (int a = d - 1; a >= 0; --a) {
            if (++digits[static_cast<std::size_t>(a)] < rule_order) break;
            digits[static_cast<std::size_t>(a)] = 0;
        }
    }
    weights /= weights.sum();
    return make_snapshots(std::move(psi_x), std::move(psi_y), std::move(weights), dt);
}

GramSet grams(const SnapshotMatrices& snap) {
    const auto w = snap.weights.asDiagonal();
    GramSet gr;
    gr.g = snap.psi_x.adjoint() * w * snap.psi_x;
    gr.a1 = snap.psi_x.adjoint() * w * snap.psi_y;
    gr.a2 = snap.psi_y.adjoint() * w * snap.psi_y;
    // symmetrize the Hermitian blocks against rounding
    gr.g = 0.5 * (gr.g + gr.g.adjoint().eval());
    gr.a2 = 0.5 * (gr.a2 + gr.a2.adjoint().eval());
    return gr;
}

} // namespace rdmd
