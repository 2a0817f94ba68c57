#include "rdmd/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace rdmd {

namespace {

std::string format_z(Complex z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

// Static index partition; worker w handles [w*n/t, (w+1)*n/t). Results land
// in preallocated slots, so output order never depends on scheduling.
void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        const int lo = static_cast<int>(static_cast<long long>(n) * w / threads);
        const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / threads);
        pool.emplace_back([lo, hi, &body] {
            for (int i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace

ResolventEvaluator ResolventEvaluator::from_snapshots(const SnapshotMatrices& snap,
                                                      ResolventMode mode, double pinv_tol) {
    const RealVector root_w = snap.weights.array().sqrt();
    const ComplexMatrix wx = root_w.asDiagonal() * snap.psi_x;
    ComplexMatrix wop;
    if (mode == ResolventMode::koopman) {
        wop = root_w.asDiagonal() * snap.psi_y;
    } else {
        if (!(snap.dt > 0)) throw ConfigError("resolvent: generator mode needs dt > 0");
        wop = root_w.asDiagonal() * ((snap.psi_y - snap.psi_x) / snap.dt).eval();
    }
    ResolventEvaluator ev;
    ev.mode_ = mode;
    ev.psi_x_pinv_ = pinv(wx, pinv_tol);
    ev.psi_op_ = std::move(wop);
    ev.cached_product_ = ev.psi_op_ * ev.psi_x_pinv_;
    ev.koopman_.k = ev.psi_x_pinv_ * ev.psi_op_;
    ev.koopman_.source = KoopmanSource::pseudoinverse_route;
    ev.koopman_.dict_size = static_cast<int>(snap.dict_size());
    ev.eigenvalues_ = eigenvalues(ev.koopman_.k);
    return ev;
}

ResolventEvaluator ResolventEvaluator::from_koopman(KoopmanMatrix k, ResolventMode mode) {
    if (k.k.rows() != k.k.cols()) throw ConfigError("resolvent: matrix must be square");
    require_finite(k.k, "resolvent matrix");
    ResolventEvaluator ev;
    ev.mode_ = mode;
    ev.koopman_ = std::move(k);
    ev.eigenvalues_ = eigenvalues(ev.koopman_.k);
    return ev;
}

ResolventEvaluator ResolventEvaluator::from_generator(const GeneratorMatrix& a) {
    KoopmanMatrix k;
    k.k = a.a;
    k.dict_size = static_cast<int>(a.a.rows());
    return from_koopman(std::move(k), ResolventMode::generator);
}

ComplexMatrix ResolventEvaluator::smw_resolvent(Complex z) const {
    if (!has_snapshot_data())
        throw ConfigError("smw_resolvent: evaluator was built without snapshot matrices");
    if (z == Complex(0.0, 0.0))
        throw NumericError("smw_resolvent: z = 0 is a pole of the construction");
    const Eigen::Index m = cached_product_.rows();
    const Eigen::Index n = psi_x_pinv_.rows();
    ComplexMatrix inner = ComplexMatrix::Identity(m, m) - cached_product_ / z;
    ComplexMatrix solved;
    try {
        solved = solve(inner, psi_op_);
    } catch (const SingularSystemError& e) {
        throw SingularSystemError(
            "smw_resolvent: singular inner system at z = " + format_z(z), e.condition_estimate());
    }
    return ComplexMatrix::Identity(n, n) / z + (psi_x_pinv_ * solved) / (z * z);
}

ComplexMatrix ResolventEvaluator::direct_resolvent(Complex z) const {
    const Eigen::Index n = koopman_.k.rows();
    ComplexMatrix shifted = -koopman_.k;
    shifted.diagonal().array() += z;
    try {
        return solve(shifted, ComplexMatrix::Identity(n, n));
    } catch (const SingularSystemError& e) {
        throw SingularSystemError(
            "direct_resolvent: z = " + format_z(z) + " is an exact eigenvalue hit",
            e.condition_estimate());
    }
}

double ResolventEvaluator::inv_resolvent_norm(Complex z) const {
    ComplexMatrix shifted = -koopman_.k;
    shifted.diagonal().array() += z;
    return sigma_min(shifted);
}

double ResolventEvaluator::inv_resolvent_norm_via(Complex z, ResolventRoute route) const {
    switch (route) {
    case ResolventRoute::sigma_min:
        return inv_resolvent_norm(z);
    case ResolventRoute::smw:
        if (std::abs(z) < 1e-8) return 1.0 / spectral_norm(direct_resolvent(z));
        return 1.0 / spectral_norm(smw_resolvent(z));
    case ResolventRoute::direct:
        return 1.0 / spectral_norm(direct_resolvent(z));
    }
    throw ConfigError("inv_resolvent_norm_via: unknown route");
}

Pseudoeigenfunction ResolventEvaluator::pseudoeigenfunction(Complex z) const {
    ComplexMatrix shifted = -koopman_.k;
    shifted.diagonal().array() += z;
    Eigen::BDCSVD<ComplexMatrix> dec(shifted, Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success)
        throw NumericError("pseudoeigenfunction: svd did not converge");
    const Eigen::Index last = dec.singularValues().size() - 1;
    const double smin = dec.singularValues()(last);
    ComplexVector v = dec.matrixV().col(last);
    // fix the phase: largest-modulus coefficient becomes real positive
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    const Complex c = v(pivot);
    if (std::abs(c) > 0) v *= std::conj(c) / std::abs(c);
    v /= v.norm();
    Pseudoeigenfunction out;
    out.z = z;
    out.coeffs = std::move(v);
    out.amplification = smin > 0 ? 1.0 / smin : std::numeric_limits<double>::infinity();
    return out;
}

PseudospectrumGrid scan_circle(const ResolventEvaluator& ev, double radius, int n_points,
                               ResolventRoute route, int threads) {
    if (!(radius > 0)) throw ConfigError("scan_circle: radius must be positive");
    if (n_points < 4) throw ConfigError("scan_circle: need at least 4 points");
    PseudospectrumGrid grid;
    grid.kind = GridKind::circle;
    grid.radius = radius;
    grid.points.resize(static_cast<std::size_t>(n_points));
    grid.inv_norms.resize(static_cast<std::size_t>(n_points));
    for (int j = 0; j < n_points; ++j)
        grid.points[static_cast<std::size_t>(j)] =
            std::polar(radius, 2.0 * kPi * j / n_points);
    parallel_for(n_points, threads, [&](int j) {
        grid.inv_norms[static_cast<std::size_t>(j)] =
            ev.inv_resolvent_norm_via(grid.points[static_cast<std::size_t>(j)], route);
    });
    return grid;
}

PseudospectrumGrid scan_rectangle(const ResolventEvaluator& ev, double re_lo, double re_hi,
                                  double im_lo, double im_hi, int nx, int ny,
                                  ResolventRoute route, int threads) {
    if (nx < 1 || ny < 1) throw ConfigError("scan_rectangle: nx and ny must be >= 1");
    if (re_hi < re_lo || im_hi < im_lo) throw ConfigError("scan_rectangle: empty ranges");
    PseudospectrumGrid grid;
    grid.kind = GridKind::rectangle;
    grid.re_lo = re_lo;
    grid.re_hi = re_hi;
    grid.im_lo = im_lo;
    grid.im_hi = im_hi;
    grid.nx = nx;
    grid.ny = ny;
    const int total = nx * ny;
    grid.points.resize(static_cast<std::size_t>(total));
    grid.inv_norms.resize(static_cast<std::size_t>(total));
    const double dre = nx > 1 ? (re_hi - re_lo) / (nx - 1) : 0.0;
    const double dim = ny > 1 ? (im_hi - im_lo) / (ny - 1) : 0.0;
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            grid.points[static_cast<std::size_t>(iy * nx + ix)] =
                Complex(re_lo + ix * dre, im_lo + iy * dim);
    parallel_for(total, threads, [&](int j) {
        grid.inv_norms[static_cast<std::size_t>(j)] =
            ev.inv_resolvent_norm_via(grid.points[static_cast<std::size_t>(j)], route);
    });
    return grid;
}

DetectionResult detect(const PseudospectrumGrid& grid, double threshold) {
    if (!(threshold > 0)) throw ConfigError("detect: threshold must be positive");
    DetectionResult out;
    out.threshold = threshold;
    out.mask.resize(grid.points.size(), 0);
    for (std::size_t j = 0; j < grid.points.size(); ++j) {
        if (grid.inv_norms[j] < threshold) {
            out.mask[j] = 1;
            out.detected.push_back(grid.points[j]);
        }
    }
    return out;
}

} // namespace rdmd
