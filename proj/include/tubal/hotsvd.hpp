#pragma once

#include <vector>

#include "tubal/multiway.hpp"
#include "tubal/tsvd.hpp"

namespace tubal {

/// Factors of a (possibly truncated) higher-order t-SVD: the core tensor,
/// one factor per mode, and the per-mode diagonal tube norms of the t-SVD of
/// the unfolding each factor came from (the full spectrum, used by
/// error_bound). truncation is empty for the full decomposition.
/// processing_order is populated by the sequentially truncated variant only.
struct HotSvdFactors {
    TubalTensor core;
    std::vector<TubalMatrix> factors;
    std::vector<std::vector<double>> slice_norms_per_mode;
    std::vector<Index> truncation;
    std::vector<int> processing_order;

    bool is_truncated() const { return !truncation.empty(); }
};

HotSvdFactors hotsvd(const TubalTensor& a);
HotSvdFactors tr_hotsvd(const TubalTensor& a, const std::vector<Index>& ranks);

/// Mode-by-mode truncation with core shrinkage. The default order is
/// 0,1,...,N-1; the error bound is established for that order.
HotSvdFactors seq_tr_hotsvd(const TubalTensor& a, const std::vector<Index>& ranks,
                            std::vector<int> order = {});

TubalTensor reconstruct(const HotSvdFactors& f);

/// Max over modes n and index pairs alpha != beta of the norm of the tubal
/// scalar sum_{other indices} S(..alpha..)^H * S(..beta..).
double check_all_orthogonality(const HotSvdFactors& f);

/// True iff per-mode core slice norms are nonincreasing (slack 1e-10) and
/// agree with slice_norms_per_mode to 1e-8 relative. Scaled-unitary only.
bool check_ordering(const HotSvdFactors& f);

/// Frobenius norms ||S_{i_n = alpha}|| of the core for one mode.
std::vector<double> core_slice_norms(const TubalTensor& core, int n);

/// sqrt of the summed squared spectrum tails beyond the truncation ranks.
double error_bound(const HotSvdFactors& f);

/// The N orthogonal error terms for projection onto partially unitary
/// factors; their squared sum equals ||A - A_hat||^2.
std::vector<double> error_decomposition(const TubalTensor& a,
                                        const std::vector<TubalMatrix>& partial_factors);

/// Thin t-SVD of unfold(A, n) extracted from full Hot-SVD factors by
/// normalizing the rows of the mode-n core unfolding. Rows with zero norm
/// (beyond the mode-n tubal rank) are dropped.
TsvdFactors thin_tsvd_from_hotsvd(const HotSvdFactors& f, int n);

} // namespace tubal
