#include "tubal/hotsvd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tubal/errors.hpp"

namespace tubal {

namespace {

void maybe_realify(TubalMatrix& m) {
    if (m.data().imag().norm() <= 1e-10 * std::max(m.data().norm(), 1e-300)) {
        m.data().imag().setZero();
        m.set_real(true);
    }
}

void maybe_realify(TubalTensor& t) {
    if (t.data().imag().norm() <= 1e-10 * std::max(t.data().norm(), 1e-300)) {
        t.data().imag().setZero();
        t.set_real(true);
    }
}

void check_ranks(const TubalTensor& a, const std::vector<Index>& ranks) {
    if (static_cast<int>(ranks.size()) != a.order())
        throw dimension_error("one truncation rank per mode required");
    for (int n = 0; n < a.order(); ++n) {
        const Index other = a.spatial_size() / a.dim(n);
        if (ranks[n] < 1 || ranks[n] > std::min(a.dim(n), other))
            throw dimension_error("truncation rank out of range for mode " + std::to_string(n));
    }
}

} // namespace

HotSvdFactors hotsvd(const TubalTensor& a) {
    const int N = a.order();
    HotSvdFactors f;
    f.factors.reserve(N);
    f.slice_norms_per_mode.resize(N);

    TubalTensor core = a;
    for (int n = 0; n < N; ++n) {
        TubalMatrix m = unfold(a, n);
        m.transform_forward();
        auto svd = detail::slice_svd(m, /*full_u=*/true, /*want_v=*/false);
        TubalMatrix u = svd.u_hat;
        u.transform_inverse();
        if (a.is_real()) maybe_realify(u);
        f.slice_norms_per_mode[n] = svd.tube_norms;
        core = mode_n_product(core, hermitian_transpose(u), n);
        f.factors.push_back(std::move(u));
    }
    if (a.is_real()) maybe_realify(core);
    f.core = std::move(core);
    return f;
}

HotSvdFactors tr_hotsvd(const TubalTensor& a, const std::vector<Index>& ranks) {
    check_ranks(a, ranks);
    const int N = a.order();
    HotSvdFactors f;
    f.factors.reserve(N);
    f.slice_norms_per_mode.resize(N);
    f.truncation = ranks;

    TubalTensor core = a;
    for (int n = 0; n < N; ++n) {
        TubalMatrix m = unfold(a, n);
        m.transform_forward();
        auto svd = detail::slice_svd(m, /*full_u=*/false, /*want_v=*/false);
        TubalMatrix u_hat = column_block(svd.u_hat, 0, ranks[n]);
        TubalMatrix u = u_hat;
        u.transform_inverse();
        if (a.is_real()) maybe_realify(u);
        f.slice_norms_per_mode[n] = svd.tube_norms;
        core = mode_n_product(core, hermitian_transpose(u), n);
        f.factors.push_back(std::move(u));
    }
    if (a.is_real()) maybe_realify(core);
    f.core = std::move(core);
    return f;
}

HotSvdFactors seq_tr_hotsvd(const TubalTensor& a, const std::vector<Index>& ranks,
                            std::vector<int> order) {
    check_ranks(a, ranks);
    const int N = a.order();
    if (order.empty()) {
        order.resize(N);
        std::iota(order.begin(), order.end(), 0);
    }
    {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> want(N);
        std::iota(want.begin(), want.end(), 0);
        if (sorted != want) throw dimension_error("processing order must be a permutation of the modes");
    }

    HotSvdFactors f;
    f.factors.resize(N);
    f.slice_norms_per_mode.resize(N);
    f.truncation = ranks;
    f.processing_order = order;

    TubalTensor current = a;
    std::vector<Index> dims = a.dims();
    for (int n : order) {
        TubalMatrix m = unfold(current, n);
        m.transform_forward();
        auto svd = detail::slice_svd(m, /*full_u=*/false, /*want_v=*/true);
        // Earlier truncations can leave this unfolding with fewer singular
        // values than the requested rank; beyond that point there is nothing
        // left to keep, so the effective rank clamps to what exists.
        const Index r = std::min<Index>(ranks[n], svd.u_hat.cols());
        f.truncation[n] = r;
        TubalMatrix u = column_block(svd.u_hat, 0, r);
        u.transform_inverse();
        if (a.is_real()) maybe_realify(u);
        f.slice_norms_per_mode[n] = svd.tube_norms;

        // U^H * M collapses to Sigma * V^H slice-wise, so the shrunk core is
        // assembled from the factors already at hand.
        TubalMatrix shrunk(r, m.cols(), a.transform(), false);
        for (Index s = 0; s < m.p(); ++s)
            shrunk.slice(s).noalias() = svd.sing[s].head(r).asDiagonal() *
                                        svd.v_hat.slice(s).leftCols(r).adjoint();
        shrunk.transform_inverse();
        dims[n] = r;
        current = fold(shrunk, n, dims);
        f.factors[n] = std::move(u);
    }
    if (a.is_real()) maybe_realify(current);
    f.core = std::move(current);
    return f;
}

TubalTensor reconstruct(const HotSvdFactors& f) {
    TubalTensor out = f.core;
    for (int n = 0; n < static_cast<int>(f.factors.size()); ++n)
        out = mode_n_product(out, f.factors[n], n);
    return out;
}

std::vector<double> core_slice_norms(const TubalTensor& core, int n) {
    TubalMatrix m = unfold(core, n);
    std::vector<double> norms(m.rows());
    for (Index i = 0; i < m.rows(); ++i) {
        double acc = 0.0;
        for (Index s = 0; s < m.p(); ++s) acc += m.slice(s).row(i).squaredNorm();
        norms[i] = std::sqrt(acc);
    }
    return norms;
}

double check_all_orthogonality(const HotSvdFactors& f) {
    double worst = 0.0;
    for (int n = 0; n < f.core.order(); ++n) {
        TubalMatrix m = unfold(f.core, n);
        TubalMatrix g = tproduct(m, hermitian_transpose(m));
        for (Index i = 0; i < g.rows(); ++i)
            for (Index j = 0; j < g.cols(); ++j) {
                if (i == j) continue;
                worst = std::max(worst, g.entry(i, j).norm());
            }
    }
    return worst;
}

bool check_ordering(const HotSvdFactors& f) {
    if (!f.core.transform()->is_scaled_unitary())
        throw unsupported_transform("ordering check requires a scaled-unitary transform");
    for (int n = 0; n < f.core.order(); ++n) {
        const auto norms = core_slice_norms(f.core, n);
        const double top = norms.empty() ? 0.0 : norms.front();
        for (size_t i = 1; i < norms.size(); ++i)
            if (norms[i] > norms[i - 1] + 1e-10 * std::max(top, 1.0)) return false;
        if (!f.is_truncated()) {
            const auto& spectrum = f.slice_norms_per_mode[n];
            for (size_t i = 0; i < norms.size() && i < spectrum.size(); ++i)
                if (std::abs(norms[i] - spectrum[i]) > 1e-8 * std::max(top, 1.0)) return false;
        }
    }
    return true;
}

double error_bound(const HotSvdFactors& f) {
    if (!f.is_truncated()) return 0.0;
    double acc = 0.0;
    for (size_t n = 0; n < f.slice_norms_per_mode.size(); ++n) {
        const auto& spectrum = f.slice_norms_per_mode[n];
        for (size_t i = static_cast<size_t>(f.truncation[n]); i < spectrum.size(); ++i)
            acc += spectrum[i] * spectrum[i];
    }
    return std::sqrt(acc);
}

std::vector<double> error_decomposition(const TubalTensor& a,
                                        const std::vector<TubalMatrix>& partial_factors) {
    if (static_cast<int>(partial_factors.size()) != a.order())
        throw dimension_error("one factor per mode required");
    std::vector<double> terms(a.order());
    TubalTensor current = a;
    for (int n = 0; n < a.order(); ++n) {
        const TubalMatrix& u = partial_factors[n];
        TubalMatrix proj = tproduct(u, hermitian_transpose(u));
        TubalTensor projected = mode_n_product(current, proj, n);
        terms[n] = frobenius_norm(current - projected);
        current = std::move(projected);
    }
    return terms;
}

TsvdFactors thin_tsvd_from_hotsvd(const HotSvdFactors& f, int n) {
    if (f.is_truncated())
        throw dimension_error("thin t-SVD extraction needs the full decomposition");
    if (n < 0 || n >= f.core.order()) throw dimension_error("mode out of range");

    TubalMatrix m = unfold(f.core, n);
    m.transform_forward();
    const Index rows = m.rows(), cols = m.cols(), p = m.p();
    const auto& tr = *m.transform();

    // Row alpha of the transformed unfolding is sigma_hat(alpha) * v_hat^H,
    // so singular values and right vectors fall out of row normalization.
    Eigen::MatrixXd sig_hat(p, rows);
    for (Index s = 0; s < p; ++s)
        for (Index i = 0; i < rows; ++i) sig_hat(s, i) = m.slice(s).row(i).norm();

    std::vector<double> tube_norms(rows);
    double top = 0.0;
    for (Index i = 0; i < rows; ++i) {
        Eigen::VectorXcd fiber = sig_hat.col(i).cast<Complex>();
        tube_norms[i] = tr.inverse(fiber).norm();
        top = std::max(top, tube_norms[i]);
    }
    Index r = 0;
    while (r < rows && tube_norms[r] > 1e-12 * top) ++r;
    if (r == 0) r = 1;

    TsvdFactors out;
    out.U = column_block(f.factors[n], 0, r);
    out.S = TubalMatrix(r, r, f.core.transform(), false);
    out.V = TubalMatrix(cols, r, f.core.transform(), false);
    for (Index s = 0; s < p; ++s) {
        for (Index i = 0; i < r; ++i) {
            const double sv = sig_hat(s, i);
            out.S.slice(s)(i, i) = sv;
            if (sv > 0.0) out.V.slice(s).col(i) = m.slice(s).row(i).adjoint() / sv;
        }
    }
    out.S.transform_inverse();
    out.V.transform_inverse();

    // What falls out of the core rows is the right factor of unfold(core, n);
    // the columns of unfold(A, n) additionally carry the Kronecker product of
    // the other factors, so V picks up that (conjugated) product.
    std::vector<TubalMatrix> others;
    for (int k = f.core.order() - 1; k >= 0; --k)
        if (k != n) others.push_back(f.factors[k]);
    if (!others.empty())
        out.V = tproduct(hermitian_transpose(smallt_transpose(tubal_kron(others))), out.V);

    if (f.core.is_real()) {
        maybe_realify(out.S);
        maybe_realify(out.V);
    }
    out.slice_norms.assign(tube_norms.begin(), tube_norms.begin() + r);
    return out;
}

} // namespace tubal
