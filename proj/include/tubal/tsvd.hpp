#pragma once

#include <vector>

#include "tubal/tubal_algebra.hpp"

namespace tubal {

/// Full t-SVD factors: A = U * S * V^H with U, V unitary and S f-diagonal.
/// slice_norms[i] = ||S(i,i)|| (Frobenius norm of the i-th diagonal tube),
/// nonincreasing for scaled-unitary transforms.
struct TsvdFactors {
    TubalMatrix U;
    TubalMatrix S;
    TubalMatrix V;
    std::vector<double> slice_norms;
};

TsvdFactors tsvd(const TubalMatrix& a);

/// Count of diagonal tubes with ||S(i,i)|| > tol * ||S(1,1)||.
int t_rank(const TsvdFactors& f, double tol = 1e-8);

/// Per-slice numerical ranks of L(A).
std::vector<int> multi_rank(const TubalMatrix& a);

/// Best t-rank-k approximant sum_{i<=k} U(:,i)*S(i,i)*V(:,i)^H.
/// Requires a scaled-unitary transform.
TubalMatrix truncate_tsvd(const TsvdFactors& f, int k);

namespace detail {

/// Per-slice SVD in the transform domain with a deterministic phase
/// convention: the largest-magnitude entry of each left singular vector is
/// rotated to be real and positive, with the inverse phase applied to V.
/// U is I x I (full) when full_u, otherwise I x min(I,J).
struct SliceSvd {
    TubalMatrix u_hat;                          // transform-domain U slices
    TubalMatrix v_hat;                          // transform-domain V slices (thin), empty if !want_v
    std::vector<Eigen::VectorXd> sing;          // per-slice singular values
    std::vector<double> tube_norms;             // ||Sigma(i,i)|| via the inverse transform
};

SliceSvd slice_svd(const TubalMatrix& a_hat_domain, bool full_u, bool want_v);

} // namespace detail

} // namespace tubal
