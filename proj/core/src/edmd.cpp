#include "rdmd/edmd.hpp"

#include <cmath>

namespace rdmd {

namespace {

ComplexMatrix sqrt_weighted(const ComplexMatrix& psi, const RealVector& weights) {
    return weights.array().sqrt().matrix().asDiagonal() * psi;
}

} // namespace

KoopmanMatrix koopman_from_snapshots(const SnapshotMatrices& snap, double pinv_tol) {
    const ComplexMatrix wx = sqrt_weighted(snap.psi_x, snap.weights);
    const ComplexMatrix wy = sqrt_weighted(snap.psi_y, snap.weights);
    KoopmanMatrix out;
    out.k = pinv(wx, pinv_tol) * wy;
    out.source = KoopmanSource::pseudoinverse_route;
    out.dict_size = static_cast<int>(snap.dict_size());
    return out;
}

KoopmanMatrix koopman_from_grams(const GramSet& gr, double pinv_tol) {
    if (gr.g.rows() != gr.g.cols() || gr.a1.rows() != gr.a1.cols() ||
        gr.g.rows() != gr.a1.rows())
        throw ConfigError("koopman_from_grams: gram blocks must be square and consistent");
    KoopmanMatrix out;
    out.k = pinv(gr.g, pinv_tol) * gr.a1;
    out.source = KoopmanSource::gram_route;
    out.dict_size = static_cast<int>(gr.g.rows());
    return out;
}

GeneratorMatrix generator_from_snapshots(const SnapshotMatrices& snap, double pinv_tol) {
    if (!(snap.dt > 0)) throw ConfigError("generator: snapshot dt must be positive");
    const ComplexMatrix wx = sqrt_weighted(snap.psi_x, snap.weights);
    const ComplexMatrix wdx =
        sqrt_weighted(((snap.psi_y - snap.psi_x) / snap.dt).eval(), snap.weights);
    GeneratorMatrix out;
    out.a = pinv(wx, pinv_tol) * wdx;
    out.dt = snap.dt;
    return out;
}

GeneratorMatrix generator_from_koopman(const KoopmanMatrix& k, double dt) {
    if (!(dt > 0)) throw ConfigError("generator: dt must be positive");
    GeneratorMatrix out;
    out.a = (k.k - ComplexMatrix::Identity(k.k.rows(), k.k.cols())) / dt;
    out.dt = dt;
    return out;
}

} // namespace rdmd
