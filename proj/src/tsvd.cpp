#include "tubal/tsvd.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "tubal/parallel.hpp"

namespace tubal {
namespace detail {

namespace {

/// Rotates column k of u (and v when present) so the largest-magnitude entry
/// of the u column is real and positive.
void fix_phase(Eigen::Ref<Eigen::MatrixXcd> u, Eigen::MatrixXcd* v, Index k) {
    Index imax = 0;
    u.col(k).cwiseAbs().maxCoeff(&imax);
    const Complex pivot = u(imax, k);
    const double mag = std::abs(pivot);
    if (mag == 0.0) return;
    const Complex phase = std::conj(pivot) / mag;
    u.col(k) *= phase;
    if (v) v->col(k) *= phase;
}

} // namespace

SliceSvd slice_svd(const TubalMatrix& a_hat, bool full_u, bool want_v) {
    const Index rows = a_hat.rows(), cols = a_hat.cols(), p = a_hat.p();
    const Index nsv = std::min(rows, cols);
    const Index ucols = full_u ? rows : std::min(rows, cols);

    SliceSvd out;
    out.u_hat = TubalMatrix(rows, ucols, a_hat.transform(), false);
    if (want_v) out.v_hat = TubalMatrix(cols, nsv, a_hat.transform(), false);
    out.sing.resize(p);

    parallel_for(p, [&](Index s) {
        const unsigned opts = (full_u && rows > cols ? Eigen::ComputeFullU : Eigen::ComputeThinU) |
                              Eigen::ComputeThinV;
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(a_hat.slice(s), opts);
        Eigen::MatrixXcd u = svd.matrixU();
        Eigen::MatrixXcd v = svd.matrixV();
        out.sing[s] = svd.singularValues();
        for (Index k = 0; k < nsv; ++k) fix_phase(u, &v, k);
        // Basis columns beyond the singular spectrum keep the same convention.
        for (Index k = nsv; k < u.cols(); ++k) fix_phase(u, nullptr, k);
        out.u_hat.slice(s) = u;
        if (want_v) out.v_hat.slice(s) = v;
    });

    out.tube_norms.resize(nsv);
    const auto& tr = *a_hat.transform();
    for (Index i = 0; i < nsv; ++i) {
        Eigen::VectorXcd fiber(p);
        for (Index s = 0; s < p; ++s) fiber(s) = out.sing[s](i);
        out.tube_norms[i] = tr.inverse(fiber).norm();
    }
    return out;
}

} // namespace detail

TsvdFactors tsvd(const TubalMatrix& a) {
    detail::require_finite(a.data());
    const Index rows = a.rows(), cols = a.cols(), p = a.p();
    const Index nsv = std::min(rows, cols);

    TubalMatrix a_hat = a;
    a_hat.transform_forward();
    auto svd = detail::slice_svd(a_hat, /*full_u=*/true, /*want_v=*/true);

    TsvdFactors f;
    f.U = TubalMatrix(rows, rows, a.transform(), false);
    f.S = TubalMatrix(rows, cols, a.transform(), false);
    f.V = TubalMatrix(cols, cols, a.transform(), false);
    for (Index s = 0; s < p; ++s) {
        f.U.slice(s) = svd.u_hat.slice(s);
        for (Index i = 0; i < nsv; ++i) f.S.slice(s)(i, i) = svd.sing[s](i);
        f.V.slice(s).leftCols(nsv) = svd.v_hat.slice(s);
    }
    // Full V needs a basis for the trailing columns when cols > rows.
    if (cols > rows) {
        parallel_for(p, [&](Index s) {
            Eigen::BDCSVD<Eigen::MatrixXcd> full(a_hat.slice(s), Eigen::ComputeFullV);
            Eigen::MatrixXcd v = full.matrixV();
            // Re-anchor the leading columns to the phase-fixed thin V, keep
            // the trailing null-space columns from the full decomposition.
            v.leftCols(nsv) = svd.v_hat.slice(s);
            f.V.slice(s) = v;
        });
    }
    f.U.transform_inverse();
    f.S.transform_inverse();
    f.V.transform_inverse();
    if (a.is_real()) {
        detail::realify(f.S.data());
        f.S.set_real(true);
        // U and V of a real tubal matrix are real under conjugate-symmetric
        // transforms (DFT); leave complex otherwise.
        if (f.U.data().imag().norm() <= 1e-10 * f.U.data().norm()) {
            f.U.data().imag().setZero();
            f.U.set_real(true);
        }
        if (f.V.data().imag().norm() <= 1e-10 * f.V.data().norm()) {
            f.V.data().imag().setZero();
            f.V.set_real(true);
        }
    }
    f.slice_norms = svd.tube_norms;
    return f;
}

int t_rank(const TsvdFactors& f, double tol) {
    if (f.slice_norms.empty()) return 0;
    const double top = f.slice_norms.front();
    if (top <= 0.0) return 0;
    int r = 0;
    for (double s : f.slice_norms)
        if (s > tol * top) ++r;
    return r;
}

std::vector<int> multi_rank(const TubalMatrix& a) {
    TubalMatrix a_hat = a;
    a_hat.transform_forward();
    const double eps = std::numeric_limits<double>::epsilon();
    const double dim = static_cast<double>(std::max(a.rows(), a.cols()));
    std::vector<int> rho(a.p());
    for (Index s = 0; s < a.p(); ++s) {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(a_hat.slice(s));
        const auto& sv = svd.singularValues();
        const double thresh = dim * eps * (sv.size() ? sv(0) : 0.0);
        int r = 0;
        for (Index i = 0; i < sv.size(); ++i)
            if (sv(i) > thresh) ++r;
        rho[s] = r;
    }
    return rho;
}

TubalMatrix truncate_tsvd(const TsvdFactors& f, int k) {
    if (!f.U.transform()->is_scaled_unitary())
        throw unsupported_transform("truncate_tsvd requires a scaled-unitary transform");
    const Index nsv = std::min(f.U.rows(), f.V.rows());
    if (k < 1 || k > nsv) throw dimension_error("truncation rank out of range");

    TubalMatrix u_hat = f.U, s_hat = f.S, v_hat = f.V;
    u_hat.transform_forward();
    s_hat.transform_forward();
    v_hat.transform_forward();
    TubalMatrix c(f.U.rows(), f.V.rows(), f.U.transform(), false);
    for (Index s = 0; s < c.p(); ++s)
        c.slice(s).noalias() = u_hat.slice(s).leftCols(k) *
                               s_hat.slice(s).topLeftCorner(k, k) *
                               v_hat.slice(s).leftCols(k).adjoint();
    c.transform_inverse();
    if (f.S.is_real() && f.U.is_real() && f.V.is_real()) {
        detail::realify(c.data());
        c.set_real(true);
    }
    return c;
}

} // namespace tubal
